#include "doctest.h"

#include <cstdio>
#include <map>

#include "densityforge/chainmodule.hpp"
#include "densityforge/subcount.hpp"

using namespace df;

namespace {
// Gaussian binomial [n choose a]_t through the standard Pascal recursion,
// independent of the module-theoretic recursion under test.
IntPoly1 gaussian_binomial(int n, int a) {
  if (a < 0 || a > n) return IntPoly1();
  std::map<std::pair<int, int>, IntPoly1> memo;
  memo[{0, 0}] = IntPoly1::constant(1);
  for (int m = 1; m <= n; ++m)
    for (int k = 0; k <= m; ++k) {
      // [m choose k]_t = [m-1 choose k]_t + t^{m-k} [m-1 choose k-1]_t
      IntPoly1 v;
      if (k <= m - 1) v = v + memo[{m - 1, k}];
      if (k >= 1)
        v = v + IntPoly1::monomial(m - k, 1) * memo[{m - 1, k - 1}];
      memo[{m, k}] = v;
    }
  return memo[{n, a}];
}
}  // namespace

TEST_CASE("hand values") {
  CHECK(sub_poly(1, Partition({1, 1})) ==
        IntPoly1::constant(1) + IntPoly1::monomial(1, 1));
  CHECK(sub_poly(1, Partition({2})) == IntPoly1::constant(1));
  CHECK(sub_poly(2, Partition({2, 1})) ==
        IntPoly1::constant(1) + IntPoly1::monomial(1, 1));
  CHECK(sub_poly(0, Partition({3, 1})) == IntPoly1::constant(1));
  CHECK(sub_poly(-1, Partition({2})).is_zero());
  CHECK(sub_poly(3, Partition({2})).is_zero());
}

TEST_CASE("degree bookkeeping") {
  CHECK(SubTable::sub_degree(1, Partition({1, 1})) == 1);
  for (int a = 0; a <= 3; ++a)
    CHECK(SubTable::sub_degree(a, Partition({3})) == 0);
  CHECK(SubTable::sub_degree(2, Partition({1, 1, 1, 1})) == 4);
  for (int d = 0; d <= 6; ++d)
    for (const auto& lam : enumerate_partitions(d))
      for (int a = 0; a <= d; ++a)
        CHECK(SubTable::sub_degree(a, lam) == sub_poly(a, lam).degree());
}

TEST_CASE("pi-killed modules give Gaussian binomials") {
  for (int n = 0; n <= 8; ++n) {
    const Partition lam(std::vector<int>(size_t(n), 1));
    for (int a = 0; a <= n; ++a)
      CHECK(sub_poly(a, lam) == gaussian_binomial(n, a));
  }
}

TEST_CASE("interpolation oracle agrees on small cases") {
  CHECK(sub_poly_interp(1, Partition({1, 1})) ==
        IntPoly1::constant(1) + IntPoly1::monomial(1, 1));
  CHECK(sub_poly_interp(0, Partition({3, 1})) == IntPoly1::constant(1));
  CHECK(sub_poly_interp(1, Partition({2, 1})) ==
        IntPoly1::constant(1) + IntPoly1::monomial(1, 1));
  CHECK(sub_poly_interp(2, Partition({2, 2})) ==
        sub_poly(2, Partition({2, 2})));
}

TEST_CASE("totals and positivity") {
  for (int d = 1; d <= 5; ++d) {
    for (const auto& lam : enumerate_partitions(d)) {
      BigInt total = 0;
      for (int a = 0; a <= d; ++a) {
        for (int q : {3, 5, 7}) CHECK(sub_poly(a, lam).eval(q) > 0);
        total += sub_poly(a, lam).eval(3);
      }
      const auto m = ChainModule::plain(3, lam);
      CHECK(total == BigInt(m.enumerate_submodules().size()));
    }
  }
}

TEST_CASE("disk cache round trip") {
  const std::string path = "subcount_cache_test.json";
  std::remove(path.c_str());
  IntPoly1 value;
  {
    SubTable table(path);
    value = table.sub_poly(2, Partition({2, 1, 1}));
    CHECK(table.memo_size() > 0);
  }
  {
    SubTable reloaded(path);
    CHECK(reloaded.memo_size() > 0);
    CHECK(reloaded.sub_poly(2, Partition({2, 1, 1})) == value);
  }
  std::remove(path.c_str());
}
