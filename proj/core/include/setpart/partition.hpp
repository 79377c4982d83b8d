#pragma once

// Set partitions of [n], their restricted growth words, permutations, and
// exhaustive enumerators over each.
//
// Everything here is an immutable value type. Positions and ground-set
// elements are 1-based in the public API, matching block notation such as
// "14/25/378/6"; storage inside words is 0-based.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace setpart {

using Word = std::vector<int>;
using Block = std::vector<int>;

namespace detail {
class RgfAccess;
}

/// Restricted growth word a_1...a_n: empty, or a_1 = 1 and each letter is at
/// most one more than the maximum of the letters before it.
class Rgf {
 public:
  Rgf() = default;
  /// Throws std::invalid_argument if `word` violates the growth condition.
  explicit Rgf(Word word);

  static bool is_valid(std::span<const int> word) noexcept;

  const Word& word() const noexcept { return word_; }
  std::span<const int> letters() const noexcept { return word_; }
  std::size_t size() const noexcept { return word_.size(); }
  bool empty() const noexcept { return word_.empty(); }
  /// 0-based access.
  int operator[](std::size_t i) const noexcept { return word_[i]; }
  /// Largest letter, 0 for the empty word.
  int max_letter() const noexcept;

  friend bool operator==(const Rgf&, const Rgf&) = default;
  friend auto operator<=>(const Rgf&, const Rgf&) = default;

 private:
  friend class detail::RgfAccess;
  Word word_;
};

/// Partition of {1,...,n} with blocks in standard order (increasing minima)
/// and each block sorted ascending.
class SetPartition {
 public:
  /// The empty partition of the empty set.
  SetPartition() = default;
  /// Sorts blocks into standard order. Throws std::invalid_argument unless
  /// the blocks are nonempty, disjoint, and cover exactly {1,...,n}.
  SetPartition(int n, std::vector<Block> blocks);

  int size() const noexcept { return n_; }
  int block_count() const noexcept { return static_cast<int>(blocks_.size()); }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }

  friend bool operator==(const SetPartition&, const SetPartition&) = default;

 private:
  int n_ = 0;
  std::vector<Block> blocks_;
};

/// Partition of an arbitrary finite set of positive integers, e.g. the
/// restriction of a set partition to a subset of its ground set.
class GenericPartition {
 public:
  GenericPartition() = default;
  /// Throws std::invalid_argument on empty blocks, repeated elements or
  /// non-positive elements.
  explicit GenericPartition(std::vector<Block> blocks);

  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  int block_count() const noexcept { return static_cast<int>(blocks_.size()); }
  int element_count() const noexcept;

  friend bool operator==(const GenericPartition&, const GenericPartition&) = default;

 private:
  std::vector<Block> blocks_;
};

/// One-line permutation word pi_1...pi_n of {1,...,n}.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `word` rearranges 1..n.
  explicit Permutation(Word word);

  static Permutation identity(int n);

  const Word& word() const noexcept { return word_; }
  std::size_t size() const noexcept { return word_.size(); }
  /// 0-based access.
  int operator[](std::size_t i) const noexcept { return word_[i]; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  Word word_;
};

Rgf to_rgf(const SetPartition& p);
SetPartition from_rgf(const Rgf& w);

/// Nonempty intersections of the blocks of `p` with `subset`. Throws
/// std::out_of_range if an element of `subset` lies outside [1, n].
GenericPartition restrict_to(const SetPartition& p, std::span<const int> subset);

/// Order-preserving relabelling of the ground set onto {1,...,m}.
SetPartition standardize(const GenericPartition& g);

namespace detail {

// Mutation hooks for the enumerators, which maintain words that are valid by
// construction and must not pay for revalidation on every step.
class RgfAccess {
 public:
  static Word& word(Rgf& w) noexcept { return w.word_; }
  static Rgf adopt(Word word) noexcept {
    Rgf w;
    w.word_ = std::move(word);
    return w;
  }
};

}  // namespace detail

/// All restricted growth words of length n extending a fixed prefix, in
/// lexicographic order. Restartable; iterating a copy does not affect the
/// original, so disjoint prefixes can be walked on separate threads.
class RgfRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Rgf;
    using difference_type = std::ptrdiff_t;
    using pointer = const Rgf*;
    using reference = const Rgf&;

    iterator() = default;
    const Rgf& operator*() const noexcept { return current_; }
    const Rgf* operator->() const noexcept { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) noexcept {
      return it.done_;
    }

   private:
    friend class RgfRange;
    iterator(std::size_t n, const Word& prefix);

    Rgf current_;
    std::size_t fixed_ = 0;
    bool done_ = true;
  };

  /// Throws std::invalid_argument if `prefix` is not a valid RGF or is
  /// longer than n.
  explicit RgfRange(int n, Word prefix = {});

  iterator begin() const { return iterator(n_, prefix_); }
  std::default_sentinel_t end() const noexcept { return {}; }

 private:
  std::size_t n_;
  Word prefix_;
};

/// All permutations of length n in lexicographic order.
class PermutationRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;
    using pointer = const Permutation*;
    using reference = const Permutation&;

    iterator() = default;
    const Permutation& operator*() const noexcept { return current_; }
    const Permutation* operator->() const noexcept { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) noexcept {
      return it.done_;
    }

   private:
    friend class PermutationRange;
    explicit iterator(int n);

    Permutation current_;
    bool done_ = true;
  };

  explicit PermutationRange(int n);

  iterator begin() const { return iterator(n_); }
  std::default_sentinel_t end() const noexcept { return {}; }

 private:
  int n_;
};

inline RgfRange rgfs(int n) { return RgfRange(n); }

/// Every partition of [n] exactly once, in lexicographic order of RGFs.
std::vector<SetPartition> enumerate_partitions(int n);
std::vector<Permutation> enumerate_permutations(int n);

// Text encodings. Blocks are joined by '/'; inside a block elements are
// concatenated when all are below 10 and comma-separated otherwise. Words
// follow the same rule. The empty object encodes as "".

std::string format_partition(const SetPartition& p);
std::string format_generic_partition(const GenericPartition& g);
std::string format_word(std::span<const int> word);
std::string format_rgf(const Rgf& w);
std::string format_permutation(const Permutation& p);

/// Accepts "13/24", "1,10/2/3,4,5,6,7,8,9". Throws std::invalid_argument.
SetPartition parse_partition(std::string_view text);
Word parse_word(std::string_view text);
Rgf parse_rgf(std::string_view text);
Permutation parse_permutation(std::string_view text);

}  // namespace setpart
