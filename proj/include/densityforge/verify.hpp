#ifndef DENSITYFORGE_VERIFY_HPP
#define DENSITYFORGE_VERIFY_HPP

#include <string>
#include <vector>

namespace df {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // first counterexample / error when failing
};

/// Size/randomness envelope for the verification suites.
struct Envelope {
  int oracle_max_size = 4;   // |lambda| bound, density oracle vs closed form
  std::vector<int> oracle_qs = {3, 5};
  int sub_max_size = 5;      // |lambda| bound, recursion vs interpolation
  int induction_max_size = 5;
  int induction_max_m = 5;
  int bridge_max_size = 6;
  int kf_max_size = 5;
  int global_count = 100;
  int global_max_d = 8;
  unsigned seed = 20260826;
  std::vector<int> even_r = {0, 2, 4};
  std::vector<int> odd_r = {1, 3, 5};
  int trace_families = 50;
  int trace_max_r = 6;
};

CheckResult check_worked_examples();
CheckResult check_oracle_equivalence(const Envelope&);
CheckResult check_sub_interpolation(const Envelope&);
CheckResult check_inductions(const Envelope&);
CheckResult check_sign_bridge(const Envelope&);
CheckResult check_functional_equations(const Envelope&);
CheckResult check_kostka_foulkes(const Envelope&);
CheckResult check_analytic_equalities(const Envelope&);
CheckResult check_odd_r_vanishing(const Envelope&);
CheckResult check_trace_identity(const Envelope&);

/// suite in {appendix, global, springer, analytic, all}.
std::vector<CheckResult> verify_suite(const std::string& suite,
                                      const Envelope& env);

}  // namespace df

#endif
