#include "densityforge/springer.hpp"

#include <algorithm>
#include <functional>

#include "densityforge/numbers.hpp"

namespace df {

namespace {

// Enumerates the SSYT of the given shape and content, calling visit with the
// full filling (row-major, rows top to bottom).
void for_each_ssyt(const Partition& shape, const std::vector<int>& content,
                   const std::function<void(const std::vector<std::vector<int>>&)>&
                       visit) {
  const int rows = shape.length();
  const int nvals = int(content.size());
  std::vector<std::vector<int>> tab(static_cast<size_t>(rows));
  for (int r = 0; r < rows; ++r) tab[size_t(r)].assign(size_t(shape.part(r)), 0);
  std::vector<int> remaining = content;

  std::function<void(int, int)> place = [&](int r, int c) {
    if (r == rows) {
      visit(tab);
      return;
    }
    const int nr = (c + 1 < shape.part(r)) ? r : r + 1;
    const int nc = (c + 1 < shape.part(r)) ? c + 1 : 0;
    const int left = c > 0 ? tab[size_t(r)][size_t(c - 1)] : 1;
    const int above =
        (r > 0 && c < shape.part(r - 1)) ? tab[size_t(r - 1)][size_t(c)] : 0;
    for (int v = std::max(left, above + 1); v <= nvals; ++v) {
      if (remaining[size_t(v - 1)] == 0) continue;
      tab[size_t(r)][size_t(c)] = v;
      --remaining[size_t(v - 1)];
      place(nr, nc);
      ++remaining[size_t(v - 1)];
    }
  };
  if (rows == 0) {
    bool empty_content = true;
    for (int m : content) empty_content = empty_content && m == 0;
    if (empty_content) visit(tab);
    return;
  }
  place(0, 0);
}

std::vector<int> reading_word(const std::vector<std::vector<int>>& tab) {
  std::vector<int> word;
  for (auto it = tab.rbegin(); it != tab.rend(); ++it)
    word.insert(word.end(), it->begin(), it->end());
  return word;
}

}  // namespace

BigInt kostka_number(const Partition& shape, const std::vector<int>& content) {
  int total = 0;
  for (int m : content) {
    if (m < 0) throw PreconditionViolated("content entries must be >= 0");
    total += m;
  }
  if (total != shape.size()) return 0;
  BigInt count = 0;
  for_each_ssyt(shape, content,
                [&](const std::vector<std::vector<int>>&) { ++count; });
  return count;
}

int charge(const std::vector<int>& word) {
  std::vector<std::pair<int, int>> letters;  // (position, value)
  for (size_t i = 0; i < word.size(); ++i)
    letters.emplace_back(int(i), word[i]);
  int total = 0;
  while (!letters.empty()) {
    // Locate the rightmost 1.
    int cur = -1;
    for (int i = int(letters.size()) - 1; i >= 0; --i)
      if (letters[size_t(i)].second == 1) { cur = i; break; }
    if (cur < 0)
      throw PreconditionViolated("charge needs a word with partition content");
    std::vector<int> picked = {cur};
    int index = 0;
    for (int v = 2;; ++v) {
      // Next value: first v scanning leftward cyclically from the current
      // letter; the index grows exactly when v lands to the right.
      int found = -1;
      const int n = int(letters.size());
      for (int step = 1; step < n; ++step) {
        const int i = ((cur - step) % n + n) % n;
        if (letters[size_t(i)].second == v) { found = i; break; }
      }
      if (found < 0) break;
      if (letters[size_t(found)].first > letters[size_t(cur)].first) ++index;
      total += index;
      picked.push_back(found);
      cur = found;
    }
    std::sort(picked.begin(), picked.end());
    for (int i = int(picked.size()) - 1; i >= 0; --i)
      letters.erase(letters.begin() + picked[size_t(i)]);
  }
  return total;
}

IntPoly1 kostka_foulkes(const Partition& shape, const Partition& content) {
  IntPoly1 out;
  if (shape.size() != content.size()) return out;
  std::vector<int> counts = content.parts();
  for_each_ssyt(shape, counts, [&](const std::vector<std::vector<int>>& tab) {
    const int c = charge(reading_word(tab));
    out.set(c, out.coeff(c) + 1);
  });
  return out;
}

IntPoly1 modified_kostka_foulkes(const Partition& shape,
                                 const Partition& content) {
  const IntPoly1 kf = kostka_foulkes(shape, content);
  const int n = n_stat(content);
  IntPoly1 out;
  for (const auto& [exp, coeff] : kf.terms()) {
    if (exp > n)
      throw PreconditionViolated("charge exceeded the n-statistic bound");
    out.set(n - exp, out.coeff(n - exp) + coeff);
  }
  return out;
}

IntPoly1 sub_via_kf(int a, const Partition& lambda) {
  const int d = lambda.size();
  if (a < 0 || a > d) return IntPoly1();
  std::vector<int> content_parts;
  const int hi = std::max(a, d - a), lo = std::min(a, d - a);
  if (hi > 0) content_parts.push_back(hi);
  if (lo > 0) content_parts.push_back(lo);
  const std::vector<int> content = content_parts;
  IntPoly1 out;
  for (const Partition& mu : enumerate_partitions(d)) {
    const BigInt k = kostka_number(mu, content);
    if (k == 0) continue;
    const IntPoly1 mkf = modified_kostka_foulkes(mu, lambda);
    out = out + mkf * IntPoly1::constant(k);
  }
  return out;
}

}  // namespace df
