#pragma once

// Pattern containment for set partitions, RGF subword patterns and
// permutations, plus generators for avoidance classes.
//
// Containment of sigma in p is decided on restricted growth words: the
// standardized restriction of p to a subset S has as its RGF the subword of
// to_rgf(p) at the positions in S, relabelled by order of first occurrence.
// The search backtracks over subsets and prunes as soon as the relabelling
// disagrees with sigma.

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "setpart/partition.hpp"

namespace setpart {

/// A list of partition patterns; empty means "avoid nothing".
class PatternSet {
 public:
  PatternSet() = default;
  explicit PatternSet(std::vector<SetPartition> patterns);

  /// Parses "13/2;123". The empty string is the empty set. Throws
  /// std::invalid_argument on malformed input.
  static PatternSet parse(std::string_view text);

  const std::vector<SetPartition>& patterns() const noexcept { return patterns_; }
  const std::vector<Rgf>& words() const noexcept { return words_; }
  bool empty() const noexcept { return patterns_.empty(); }
  std::string to_string() const;

 private:
  std::vector<SetPartition> patterns_;
  std::vector<Rgf> words_;
};

bool partition_contains(const SetPartition& p, const SetPartition& sigma);

/// Same relation, stated on the RGF encodings of both partitions.
bool rgf_contains(std::span<const int> word, std::span<const int> sigma);

bool avoids_all(const SetPartition& p, const PatternSet& ps);
bool avoids_all(const Rgf& w, const PatternSet& ps);

using RgfVisitor = std::function<void(const Rgf&)>;

/// Visits R_n(P) in lexicographic order. Containment is hereditary on
/// prefixes, so the walk prunes a branch at the first prefix that contains
/// a pattern and only ever examines occurrences ending at the new letter.
void for_each_avoider(int n, const PatternSet& ps, const RgfVisitor& visit);

/// Visits the members of R_n(P) extending `prefix`. `prefix` must itself
/// avoid every pattern; callers obtain such prefixes from avoider_prefixes.
void for_each_avoider(int n, const PatternSet& ps, std::span<const int> prefix,
                      const RgfVisitor& visit);

/// All P-avoiding prefixes of length min(depth, n). Splitting a walk over
/// these gives independent chunks for parallel enumeration.
std::vector<Word> avoider_prefixes(int n, const PatternSet& ps, int depth);

std::vector<SetPartition> avoidance_class(int n, const PatternSet& ps);

/// Generates R_n(key) straight from its word characterization for
/// key in {1/2/3, 1/23, 13/2, 12/3, 123, 13/24}. Throws
/// std::invalid_argument for any other key.
std::vector<Rgf> characterized_class(int n, const SetPartition& key);

/// True when `word` has a subsequence order-isomorphic to `pattern`: equal
/// pattern letters map to equal values and smaller letters to smaller
/// values. "1212" therefore asks for positions a<b<c<d with
/// w_a = w_c < w_b = w_d.
bool subword_pattern_contains(std::span<const int> word, std::span<const int> pattern);

/// True when some letter pair x != y occurs as x..y..x..y.
bool has_xyxy_subword(std::span<const int> word);

/// Direct noncrossing test: whenever w_i = w_i' with i < i', every later
/// letter is either at most w_i' or exceeds max(w_1..w_i').
bool satisfies_noncrossing_condition(std::span<const int> word);

bool is_noncrossing(const Rgf& w);

bool perm_contains(const Permutation& p, const Permutation& tau);

/// O(n) check via the running maximum of non-left-to-right-maxima.
bool avoids_321(const Permutation& p);

/// Av_n(321), generated by extending only 321-free prefixes; lexicographic.
std::vector<Permutation> av321(int n);

}  // namespace setpart
