// densityforge: exact representation densities of Hermitian torsion modules,
// submodule-counting polynomials, Kostka-Foulkes identities, and the
// normalized central derivatives of the attached L-expressions.
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "densityforge/analytic.hpp"
#include "densityforge/chainmodule.hpp"
#include "densityforge/density.hpp"
#include "densityforge/springer.hpp"
#include "densityforge/subcount.hpp"
#include "densityforge/verify.hpp"

namespace {

using json = nlohmann::json;

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitSizeBound = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// Append one monomial (coefficient times a product of variable powers) to a
// LaTeX string, handling signs and unit coefficients.
void latex_term(std::string& out, const df::BigInt& c, const std::string& vars) {
  df::BigInt abs_c = c < 0 ? df::BigInt(-c) : c;
  std::string term;
  if (abs_c != 1 || vars.empty()) term += abs_c.str();
  term += vars;
  if (out.empty())
    out = (c < 0 ? "-" : "") + term;
  else
    out += (c < 0 ? " - " : " + ") + term;
}

std::string latex_pow(const std::string& var, int exp) {
  if (exp == 0) return "";
  if (exp == 1) return var;
  return var + "^{" + std::to_string(exp) + "}";
}

std::string latex1(const df::IntPoly1& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [exp, c] : p.terms()) latex_term(out, c, latex_pow(var, exp));
  return out;
}

std::string latex2(const df::IntPoly2& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [eq, eT, c] : p.terms())
    latex_term(out, c, latex_pow("q", eq) + latex_pow("T", eT));
  return out;
}

void emit_poly1(const df::IntPoly1& p, const std::string& format,
                const std::string& label, const std::string& var) {
  if (format == "plain") {
    std::cout << p.to_string(var) << "\n";
  } else if (format == "csv") {
    std::cout << "label,exp,coeff\n";
    for (const auto& [exp, c] : p.terms())
      std::cout << label << "," << exp << "," << c.str() << "\n";
  } else if (format == "json") {
    json terms = json::array();
    for (const auto& [exp, c] : p.terms())
      terms.push_back({exp, c.str()});
    std::cout << json{{"label", label}, {"var", var}, {"terms", terms}}.dump()
              << "\n";
  } else {
    std::cout << latex1(p, var) << "\n";
  }
}

void emit_poly2(const df::IntPoly2& p, const std::string& format,
                const std::string& label) {
  if (format == "plain") {
    std::cout << p.to_string() << "\n";
  } else if (format == "csv") {
    std::cout << "label,e_q,e_T,coeff\n";
    for (const auto& [eq, eT, c] : p.terms())
      std::cout << label << "," << eq << "," << eT << "," << c.str() << "\n";
  } else if (format == "json") {
    json terms = json::array();
    for (const auto& [eq, eT, c] : p.terms())
      terms.push_back({eq, eT, c.str()});
    std::cout << json{{"label", label}, {"terms", terms}}.dump() << "\n";
  } else {
    std::cout << latex2(p) << "\n";
  }
}

double eval_qpoly(const df::QPoly& p, double x) {
  double out = 0;
  if (p.is_zero()) return 0;
  for (int e = p.min_exp(); e <= p.max_exp(); ++e)
    out += p.coeff(e).convert_to<double>() * std::pow(x, e);
  return out;
}

void emit_ratfun(const df::QRatFun& f, const std::string& format,
                 const std::string& label, int q) {
  const double x = std::sqrt(double(q));
  const double approx = eval_qpoly(f.num(), x) / eval_qpoly(f.den(), x);
  if (format == "json") {
    std::cout << json{{"label", label},
                      {"num", f.num().to_string()},
                      {"den", f.den().to_string()},
                      {"value_at_q", approx}}
                     .dump()
              << "\n";
  } else {
    std::cout << label << " = " << f.to_string()
              << "   (x = q^{1/2}; at q=" << q << ": " << approx << ")\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{
      "densityforge: exact density polynomials of Hermitian torsion modules "
      "and their analytic identities"};
  app.require_subcommand(1);
  app.fallthrough();  // allow global options (e.g. --format) after a subcommand
  std::string format = "plain";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"plain", "csv", "json", "latex"}))
      ->capture_default_str();

  // sub
  auto* sub = app.add_subcommand(
      "sub", "submodule-counting polynomial Sub_{a,lambda}(t)");
  std::string sub_lambda;
  int sub_a = 0;
  sub->add_option("--lambda", sub_lambda, "partition, e.g. 2,1,1 or -")
      ->required();
  sub->add_option("--a", sub_a, "colength of the counted submodules")
      ->required();

  // den
  auto* den = app.add_subcommand("den", "local density polynomial in (q, T)");
  std::string den_kind, den_lambda;
  bool den_twisted = false;
  den->add_option("--kind", den_kind, "place kind")
      ->check(CLI::IsMember({"split", "inert"}))
      ->required();
  den->add_option("--lambda", den_lambda, "module type")->required();
  den->add_flag("--twisted", den_twisted, "apply the quadratic twist");

  // den-global
  auto* deng = app.add_subcommand(
      "den-global", "global density from a JSON place configuration");
  std::string deng_file;
  bool deng_twisted = false;
  deng->add_option("--input", deng_file, "place configuration JSON file")
      ->required();
  deng->add_flag("--twisted", deng_twisted, "apply the quadratic twist");

  // kf
  auto* kf =
      app.add_subcommand("kf", "Kostka-Foulkes polynomial K_{lambda,mu}(t)");
  std::string kf_lambda, kf_mu;
  kf->add_option("--lambda", kf_lambda, "tableau shape")->required();
  kf->add_option("--mu", kf_mu, "tableau content (a partition)")->required();

  // analytic
  auto* ana = app.add_subcommand(
      "analytic", "normalized central derivatives of the L-expressions");
  std::string ana_curve, ana_bundle, ana_form;
  int ana_n = 2, ana_r = 0, ana_e0 = 0, ana_deg_n = 0, ana_eta_n = 1;
  std::optional<int> ana_d0;
  ana->add_option("--curve", ana_curve, "curve data JSON file")->required();
  ana->add_option("--bundle", ana_bundle, "bundle data JSON file");
  ana->add_option("--form", ana_form, "which expression to evaluate")
      ->check(CLI::IsMember({"key-degree", "off-center", "corank-one",
                             "trace"}))
      ->required();
  ana->add_option("--n", ana_n, "group rank n")->capture_default_str();
  ana->add_option("--r", ana_r, "derivative order")->capture_default_str();
  ana->add_option("--e0-deg", ana_e0, "degree of the auxiliary line bundle")
      ->capture_default_str();
  ana->add_option("--d0", ana_d0,
                  "degree shift in the key-degree form "
                  "(default deg_omega - e0_deg)");
  ana->add_option("--deg-n", ana_deg_n, "conductor degree for --form trace")
      ->capture_default_str();
  ana->add_option("--eta-n", ana_eta_n, "character value, +1 or -1")
      ->capture_default_str();

  // verify
  auto* ver = app.add_subcommand("verify", "run the identity test suites");
  std::string ver_suite = "all";
  std::optional<int> ver_max_size, ver_count, ver_trace_families;
  std::optional<unsigned> ver_seed;
  std::vector<int> ver_qs, ver_rs;
  ver->add_option("--suite", ver_suite,
                  "appendix | global | springer | analytic | all")
      ->capture_default_str();
  ver->add_option("--max-size", ver_max_size, "|lambda| bound override");
  ver->add_option("--q", ver_qs, "prime list for the brute-force oracle")
      ->delimiter(',');
  ver->add_option("--r", ver_rs, "derivative orders for the analytic suite")
      ->delimiter(',');
  ver->add_option("--count", ver_count, "random global configurations");
  ver->add_option("--trace-families", ver_trace_families,
                  "random L-coefficient families for the trace identity");
  ver->add_option("--seed", ver_seed, "RNG seed");

  for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; }))
    sc->fallthrough();
  CLI11_PARSE(app, argc, argv);

  if (sub->parsed()) {
    emit_poly1(df::sub_poly(sub_a, df::Partition::parse(sub_lambda)), format,
               "Sub_{" + std::to_string(sub_a) + ",(" + sub_lambda + ")}",
               "t");
    return 0;
  }
  if (den->parsed()) {
    const auto kind =
        den_kind == "split" ? df::PlaceKind::Split : df::PlaceKind::Inert;
    const auto lam = df::Partition::parse(den_lambda);
    emit_poly2(den_twisted ? df::den_eta_local(kind, lam)
                           : df::den_local(kind, lam),
               format, "Den(" + den_lambda + ")");
    return 0;
  }
  if (deng->parsed()) {
    const auto data = df::GlobalPlaceData::parse_json(read_file(deng_file));
    emit_poly2(df::den_global(data, deng_twisted), format, "Den_global");
    return 0;
  }
  if (kf->parsed()) {
    emit_poly1(df::kostka_foulkes(df::Partition::parse(kf_lambda),
                                  df::Partition::parse(kf_mu)),
               format, "K_{(" + kf_lambda + "),(" + kf_mu + ")}", "t");
    return 0;
  }
  if (ana->parsed()) {
    const auto curve = df::CurveData::parse_json(read_file(ana_curve));
    if (ana_form == "trace") {
      const auto [lhs, rhs] =
          df::trace_identity_check(curve, ana_deg_n, ana_eta_n, ana_r);
      emit_ratfun(lhs, format, "lhs", curve.q);
      emit_ratfun(rhs, format, "rhs", curve.q);
      return 0;
    }
    if (ana_bundle.empty())
      throw std::invalid_argument("--bundle is required for this form");
    const auto bundle =
        df::BundleData::parse_json(curve, read_file(ana_bundle));
    df::QRatFun value;
    if (ana_form == "key-degree") {
      const int d0 = ana_d0.value_or(curve.deg_omega - ana_e0);
      value = df::key_degree_rhs(curve, bundle, d0, ana_r);
    } else if (ana_form == "off-center") {
      value = df::off_center_rhs(curve, bundle, ana_e0, ana_n, ana_r);
    } else {
      value = df::corank_one_rhs(curve, ana_e0, bundle, ana_n, ana_r);
    }
    emit_ratfun(value, format, ana_form + " r=" + std::to_string(ana_r),
                curve.q);
    return 0;
  }

  // verify
  df::Envelope env;
  if (ver_max_size) {
    if (*ver_max_size > 6)
      std::cerr << "warning: --max-size " << *ver_max_size
                << " exceeds the exhaustive-enumeration comfort zone; "
                   "expect long runtimes\n";
    env.oracle_max_size = std::min(*ver_max_size, 4);
    env.sub_max_size = *ver_max_size;
    env.induction_max_size = *ver_max_size;
    env.induction_max_m = std::max(*ver_max_size, 2);
    env.bridge_max_size = *ver_max_size;
    env.kf_max_size = *ver_max_size;
  }
  if (!ver_qs.empty()) env.oracle_qs = ver_qs;
  if (!ver_rs.empty()) {
    env.even_r.clear();
    env.odd_r.clear();
    for (int r : ver_rs) (r % 2 == 0 ? env.even_r : env.odd_r).push_back(r);
  }
  if (ver_count) env.global_count = *ver_count;
  if (ver_trace_families) env.trace_families = *ver_trace_families;
  if (ver_seed) env.seed = *ver_seed;
  const auto results = df::verify_suite(ver_suite, env);
  bool all_pass = true;
  for (const auto& res : results) {
    std::cout << (res.pass ? "[PASS] " : "[FAIL] ") << res.name;
    if (!res.pass) std::cout << " -- " << res.detail;
    std::cout << "\n";
    all_pass = all_pass && res.pass;
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const df::SizeBound& e) {
    std::cerr << "size bound exceeded: " << e.what() << "\n";
    return kExitSizeBound;
  } catch (const df::PreconditionViolated& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const df::ParityMismatch& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const df::PoleAtCenter& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::invalid_argument& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
