#include "densityforge/subcount.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "densityforge/chainmodule.hpp"

namespace df {

namespace {

constexpr int kCacheFormatVersion = 1;

Partition peel_rest(const Partition& lambda) {
  std::vector<int> rest(lambda.parts().begin() + 1, lambda.parts().end());
  return Partition(rest);
}

std::optional<int> degree_rec(int a, const Partition& lambda) {
  if (a < 0 || a > lambda.size()) return std::nullopt;
  if (lambda.empty()) return a == 0 ? std::optional<int>(0) : std::nullopt;
  const int m = lambda.largest();
  const Partition rho = peel_rest(lambda);
  const auto left = degree_rec(a - 1, insert_sorted(m - 1, rho));
  const auto right = degree_rec(a, rho);
  // Both branches have nonnegative coefficients, so the top terms cannot
  // cancel and the exact degree is the max of the branch degrees.
  std::optional<int> out;
  if (left) out = *left;
  if (right) out = std::max(out.value_or(a + *right), a + *right);
  return out;
}

int next_odd_prime(int n) {
  int m = n + 2;
  while (!is_prime(m)) m += 2;
  return m;
}

}  // namespace

SubTable::SubTable(std::string cache_path) : cache_path_(std::move(cache_path)) {
  load();
}

SubTable::~SubTable() {
  if (!cache_path_.empty() && dirty_) {
    try {
      save();
    } catch (...) {
      // A failed cache write only costs recomputation next run.
    }
  }
}

const IntPoly1& SubTable::sub_poly(int a, const Partition& lambda) {
  const auto key = std::make_pair(a, lambda);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  IntPoly1 result;
  if (a < 0 || a > lambda.size()) {
    // zero polynomial
  } else if (lambda.empty()) {
    result = IntPoly1::constant(1);  // a == 0 here
  } else {
    const int m = lambda.largest();
    const Partition rho = peel_rest(lambda);
    result = sub_poly(a - 1, insert_sorted(m - 1, rho)) +
             IntPoly1::monomial(a, 1) * sub_poly(a, rho);
  }
  dirty_ = true;
  return memo_.emplace(key, std::move(result)).first->second;
}

int SubTable::sub_degree(int a, const Partition& lambda) {
  const auto deg = degree_rec(a, lambda);
  return deg.value_or(-1);
}

void SubTable::load() {
  if (cache_path_.empty()) return;
  std::ifstream in(cache_path_);
  if (!in) return;
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception&) {
    return;  // unreadable cache: start fresh
  }
  if (!doc.is_object() || doc.value("version", 0) != kCacheFormatVersion)
    return;
  if (!doc.contains("entries") || !doc["entries"].is_array()) return;
  for (const auto& entry : doc["entries"]) {
    try {
      const int a = entry.at("a").get<int>();
      const Partition lambda =
          Partition::parse(entry.at("lambda").get<std::string>());
      IntPoly1 poly;
      for (const auto& term : entry.at("poly")) {
        const int exp = term.at(0).get<int>();
        poly.set(exp, BigInt(term.at(1).get<std::string>()));
      }
      memo_.emplace(std::make_pair(a, lambda), std::move(poly));
    } catch (const nlohmann::json::exception&) {
      continue;  // skip malformed entries
    }
  }
}

void SubTable::save() const {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, poly] : memo_) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [exp, coeff] : poly.terms())
      terms.push_back({exp, coeff.str()});
    entries.push_back({{"a", key.first},
                       {"lambda", key.second.to_string()},
                       {"poly", std::move(terms)}});
  }
  nlohmann::json doc = {{"version", kCacheFormatVersion},
                        {"entries", std::move(entries)}};
  std::ofstream out(cache_path_);
  out << doc.dump(1) << '\n';
  dirty_ = false;
}

const IntPoly1& sub_poly(int a, const Partition& lambda) {
  static SubTable table = [] {
    const char* path = std::getenv("DENSITYFORGE_CACHE");
    return path != nullptr ? SubTable(path) : SubTable();
  }();
  return table.sub_poly(a, lambda);
}

IntPoly1 sub_poly_interp(int a, const Partition& lambda) {
  const int degree = SubTable::sub_degree(a, lambda);
  if (degree < 0) return IntPoly1();
  std::vector<std::pair<BigInt, BigInt>> points;
  int p = 3;
  for (int i = 0; i < degree + 2; ++i) {  // one surplus point
    points.emplace_back(p, brute_sub_count(p, lambda, a));
    p = next_odd_prime(p);
  }
  return interpolate(points, degree);
}

}  // namespace df
