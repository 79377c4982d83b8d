#pragma once

// Statistic-preserving bijections:
//
//   tau            R_n(1/23)  -> R_n(12/3)        (spread and block preserved)
//   to_ballot      R_n(13/24) -> ballot pairs     (firsts / lasts indicators)
//   ballot_to_perm ballot pairs -> Av_n(321)      (LRM positions / values)
//
// and the composite noncrossing partition -> 321-avoiding permutation map,
// under which spread = inv, block = LRM, checkpoints = fixed points and
// apices = descents.

#include <string>
#include <string_view>
#include <vector>

#include "setpart/partition.hpp"
#include "setpart/stats.hpp"

namespace setpart {

/// Two equal-length binary vectors with equally many ones such that for
/// every i, ones(p_1..p_i) > ones(v_1..v_{i-1}).
class BallotPair {
 public:
  BallotPair() = default;
  /// Throws std::invalid_argument if the pair violates the ballot conditions.
  BallotPair(BitVector p, BitVector v);

  static bool is_valid(const BitVector& p, const BitVector& v) noexcept;
  /// Parses "110,011".
  static BallotPair parse(std::string_view text);

  const BitVector& p() const noexcept { return p_; }
  const BitVector& v() const noexcept { return v_; }
  std::size_t size() const noexcept { return p_.size(); }
  std::string to_string() const;

  friend bool operator==(const BallotPair&, const BallotPair&) = default;
  friend auto operator<=>(const BallotPair&, const BallotPair&) = default;

 private:
  BitVector p_;
  BitVector v_;
};

/// Throws std::invalid_argument unless w is in R_n(1/23).
Rgf tau(const Rgf& w);
/// Throws std::invalid_argument unless v is in R_n(12/3).
Rgf tau_inverse(const Rgf& v);

bool in_class_1_23(const Rgf& w);
bool in_class_12_3(const Rgf& w);

/// Throws std::invalid_argument for a crossing word.
BallotPair to_ballot(const Rgf& w);
/// Rebuilds the noncrossing RGF from its first/last indicators by tracking
/// the currently open letters.
Rgf from_ballot(const BallotPair& b);

/// LRM positions of p receive LRM values of v in increasing order; the other
/// positions receive the remaining values in increasing order.
Permutation ballot_to_perm(const BallotPair& b);
/// Throws std::invalid_argument if p contains 321.
BallotPair perm_to_ballot(const Permutation& p);

/// Throws std::invalid_argument for a crossing word.
Permutation partition_to_perm(const Rgf& w);
/// Throws std::invalid_argument if p contains 321.
Rgf perm_to_partition(const Permutation& p);

}  // namespace setpart
