#ifndef DENSITYFORGE_SUBCOUNT_HPP
#define DENSITYFORGE_SUBCOUNT_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "densityforge/intpoly.hpp"
#include "densityforge/numbers.hpp"
#include "densityforge/partition.hpp"

namespace df {

/// Memoized table of the universal submodule-counting polynomials
/// Sub_{a,lambda}(t): the number of length-a submodules of the type-lambda
/// module over any chain ring with residue cardinality t.  Computed by
/// peeling the largest part m of lambda = (m, rho):
///
///   Sub_{a,lambda} = Sub_{a-1, insert_sorted(m-1, rho)} + t^a Sub_{a,rho}
///
/// with Sub_{a,()} = [a == 0] and Sub_{a,lambda} = 0 outside 0 <= a <= |lambda|.
class SubTable {
 public:
  SubTable() = default;
  /// Loads/saves the memo across runs in the given JSON file.
  explicit SubTable(std::string cache_path);
  ~SubTable();

  const IntPoly1& sub_poly(int a, const Partition& lambda);

  /// Degree bound for Sub_{a,lambda}, tracked through the same recursion.
  static int sub_degree(int a, const Partition& lambda);

  size_t memo_size() const { return memo_.size(); }

 private:
  void load();
  void save() const;

  std::map<std::pair<int, Partition>, IntPoly1> memo_;
  std::string cache_path_;
  mutable bool dirty_ = false;
};

/// Convenience wrapper over a process-wide table (no disk cache unless the
/// DENSITYFORGE_CACHE environment variable names a file).
const IntPoly1& sub_poly(int a, const Partition& lambda);

/// Independent recomputation of Sub_{a,lambda} by exact interpolation
/// through brute-force counts at ascending odd primes (one surplus point is
/// used as a consistency check).  Never consults the recursion.
IntPoly1 sub_poly_interp(int a, const Partition& lambda);

}  // namespace df

#endif
