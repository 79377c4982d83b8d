#pragma once

// Statistics on restricted growth words and permutations.
//
// Partition statistics are computed on RGFs; the SetPartition overloads go
// through to_rgf. Index sets are 1-based and sorted ascending.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "setpart/partition.hpp"

namespace setpart {

using IndexSet = std::vector<int>;
using BitVector = std::vector<std::uint8_t>;

/// Sum over letters of last(letter) - first(letter).
int spread(const Rgf& w);
/// Number of distinct letters, i.e. max(w).
int block(const Rgf& w);
int dim(const Rgf& w);

int spread(const SetPartition& p);
int block(const SetPartition& p);
int dim(const SetPartition& p);

struct FirstsLasts {
  IndexSet firsts;
  IndexSet lasts;
};

FirstsLasts firsts_lasts(const Rgf& w);

/// Indices i with w_j < w_i for every j < i; for an RGF these are exactly the
/// first occurrences.
IndexSet lrm_indices(const Rgf& w);

/// Left-to-right maxima whose later letters are all strictly larger.
IndexSet checkpoints(const Rgf& w);

/// Left-to-right maxima i with w_i >= w_{i+1}. The last index never
/// qualifies.
IndexSet apices(const Rgf& w);

/// Sum of the apex indices.
int apex_major_index(const Rgf& w);

// Permutation statistics.
int inversions(const Permutation& p);
IndexSet lrm_indices(const Permutation& p);
IndexSet fixed_points(const Permutation& p);
IndexSet descents(const Permutation& p);
int major_index(const Permutation& p);

/// pos marks left-to-right maximum positions, val marks their values.
struct PosVal {
  BitVector pos;
  BitVector val;
};

PosVal pos_val(const Permutation& p);

/// Named integer statistics attached to one object.
class StatProfile {
 public:
  void set(std::string name, std::int64_t value) { values_[std::move(name)] = value; }
  bool contains(std::string_view name) const { return values_.find(name) != values_.end(); }
  /// Throws std::out_of_range for an absent statistic.
  std::int64_t at(std::string_view name) const;
  const std::map<std::string, std::int64_t, std::less<>>& values() const noexcept { return values_; }

 private:
  std::map<std::string, std::int64_t, std::less<>> values_;
};

/// spread, block, dim, cp (checkpoint count), ap (apex count), maj (apex
/// index sum).
StatProfile partition_stats(const Rgf& w);
/// inv, lrm, fix, des, maj.
StatProfile perm_stats(const Permutation& p);

/// Names accepted by partition_statistic / permutation_statistic.
const std::vector<std::string>& partition_statistic_names();
const std::vector<std::string>& permutation_statistic_names();

/// Single statistic by name. "lrm" on an RGF is its block count. Throws
/// std::invalid_argument on an unknown name.
int partition_statistic(const Rgf& w, std::string_view name);
int permutation_statistic(const Permutation& p, std::string_view name);

}  // namespace setpart
