#include "densityforge/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace df {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition part < 1");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must weakly decrease");
  }
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "-";
  std::string out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition Partition::parse(const std::string& text) {
  if (text.empty() || text == "-") return Partition{};
  std::vector<int> parts;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    parts.push_back(std::stoi(text.substr(pos, next - pos)));
    pos = next + 1;
  }
  return Partition(std::move(parts));
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> dual;
  const auto& p = lambda.parts();
  for (int j = 1; j <= lambda.largest(); ++j) {
    int count = 0;
    for (int part : p)
      if (part >= j) ++count;
    dual.push_back(count);
  }
  return Partition(std::move(dual));
}

Partition insert_sorted(int m, const Partition& lambda) {
  if (m < 0) throw std::invalid_argument("insert_sorted: negative part");
  if (m == 0) return lambda;
  std::vector<int> parts = lambda.parts();
  auto it = std::lower_bound(parts.begin(), parts.end(), m, std::greater<>());
  parts.insert(it, m);
  return Partition(std::move(parts));
}

int n_stat(const Partition& lambda) {
  int n = 0;
  const auto& p = lambda.parts();
  for (size_t i = 0; i < p.size(); ++i) n += static_cast<int>(i) * p[i];
  return n;
}

namespace {
void enumerate_rec(int remaining, int max_part, int slots,
                   std::vector<int>& acc, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  if (slots == 0) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    acc.push_back(part);
    enumerate_rec(remaining - part, part, slots - 1, acc, out);
    acc.pop_back();
  }
}
}  // namespace

std::vector<Partition> enumerate_partitions(int d, std::optional<int> max_len) {
  if (d < 0) throw std::invalid_argument("enumerate_partitions: d < 0");
  std::vector<Partition> out;
  std::vector<int> acc;
  enumerate_rec(d, d == 0 ? 1 : d, max_len.value_or(d), acc, out);
  return out;
}

bool dominates(const Partition& a, const Partition& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dominance needs equal sizes");
  int sum_a = 0, sum_b = 0;
  size_t n = std::max(a.parts().size(), b.parts().size());
  for (size_t i = 0; i < n; ++i) {
    sum_a += i < a.parts().size() ? a.parts()[i] : 0;
    sum_b += i < b.parts().size() ? b.parts()[i] : 0;
    if (sum_a < sum_b) return false;
  }
  return true;
}

}  // namespace df
