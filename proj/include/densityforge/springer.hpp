#ifndef DENSITYFORGE_SPRINGER_HPP
#define DENSITYFORGE_SPRINGER_HPP

#include <string>
#include <vector>

#include "densityforge/intpoly.hpp"
#include "densityforge/partition.hpp"

namespace df {

/// Number of semistandard Young tableaux of the given shape and content
/// (content[i] = multiplicity of the entry i+1; it need not be a partition).
BigInt kostka_number(const Partition& shape, const std::vector<int>& content);

/// Lascoux-Schutzenberger charge of a word with partition content.
/// Extraction: start from the rightmost 1, then repeatedly pick the next
/// value scanning leftward cyclically; an entry's index grows by one exactly
/// when it sits to the right of its predecessor.  The charge of the word is
/// the sum over the extracted standard subwords.
int charge(const std::vector<int>& word);

/// Kostka-Foulkes polynomial K_{shape,content}(t): sum of t^{charge(w)} over
/// the reading words of the SSYT of the given shape and content (reading
/// rows bottom to top, left to right).  Content must be a partition.
IntPoly1 kostka_foulkes(const Partition& shape, const Partition& content);

/// Modified form t^{n(content)} K_{shape,content}(1/t).
IntPoly1 modified_kostka_foulkes(const Partition& shape,
                                 const Partition& content);

/// Sub_{a,lambda}(t) recomputed through the Kostka-Foulkes expansion:
///   sum over shapes mu of |lambda| of
///   modified_kostka_foulkes(mu, lambda) * K_{mu, sorted(a, |lambda|-a)}.
IntPoly1 sub_via_kf(int a, const Partition& lambda);

}  // namespace df

#endif
