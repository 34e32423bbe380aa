#ifndef DENSITYFORGE_PARTITION_HPP
#define DENSITYFORGE_PARTITION_HPP

#include <optional>
#include <string>
#include <vector>

namespace df {

/// Weakly decreasing sequence of positive integers (the Jordan type of a
/// torsion module).  The empty partition is allowed.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;                       // sum of parts
  int length() const { return static_cast<int>(parts_.size()); }  // t(lambda)
  bool empty() const { return parts_.empty(); }
  int part(int i) const { return parts_[static_cast<size_t>(i)]; }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

  /// "3,1,1"; empty partition prints as "-".
  std::string to_string() const;
  static Partition parse(const std::string& text);

 private:
  std::vector<int> parts_;
};

/// Dual partition: conjugate(l)_j = #{i : l_i >= j}.  Involutive.
Partition conjugate(const Partition& lambda);

/// Insert m preserving weak decrease; m = 0 is dropped (the zero module).
Partition insert_sorted(int m, const Partition& lambda);

/// n(lambda) = sum_i (i-1) * lambda_i.
int n_stat(const Partition& lambda);

/// All partitions of d in reverse lexicographic order, e.g.
/// d=3 -> (3),(2,1),(1,1,1).  Optional bound on the number of parts.
std::vector<Partition> enumerate_partitions(
    int d, std::optional<int> max_len = std::nullopt);

/// Dominance order: a >= b iff prefix sums of a dominate those of b.
/// Requires |a| == |b|.
bool dominates(const Partition& a, const Partition& b);

}  // namespace df

#endif
