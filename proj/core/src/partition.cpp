#include "setpart/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace setpart {

namespace {

void sort_standard(std::vector<Block>& blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& a, const Block& b) { return a.front() < b.front(); });
}

}  // namespace

// ---------------------------------------------------------------------------
// Rgf

Rgf::Rgf(Word word) : word_(std::move(word)) {
  if (!is_valid(word_)) {
    throw std::invalid_argument("not a restricted growth word: '" + format_word(word_) + "'");
  }
}

bool Rgf::is_valid(std::span<const int> word) noexcept {
  int running_max = 0;
  for (int letter : word) {
    if (letter < 1 || letter > running_max + 1) return false;
    running_max = std::max(running_max, letter);
  }
  return true;
}

int Rgf::max_letter() const noexcept {
  return word_.empty() ? 0 : *std::max_element(word_.begin(), word_.end());
}

// ---------------------------------------------------------------------------
// SetPartition / GenericPartition / Permutation

SetPartition::SetPartition(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {
  if (n < 0) throw std::invalid_argument("ground set size must be non-negative");
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  int covered = 0;
  for (const auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("set partition has an empty block");
    for (int e : b) {
      if (e < 1 || e > n) {
        throw std::invalid_argument("element " + std::to_string(e) + " outside [1," +
                                    std::to_string(n) + "]");
      }
      if (seen[e]) throw std::invalid_argument("element " + std::to_string(e) + " repeated");
      seen[e] = 1;
      ++covered;
    }
  }
  if (covered != n) throw std::invalid_argument("blocks do not cover [1,n]");
  sort_standard(blocks_);
}

GenericPartition::GenericPartition(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  std::vector<int> all;
  for (const auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("partition has an empty block");
    for (int e : b) {
      if (e < 1) throw std::invalid_argument("partition elements must be positive");
      all.push_back(e);
    }
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw std::invalid_argument("partition blocks are not disjoint");
  }
  sort_standard(blocks_);
}

int GenericPartition::element_count() const noexcept {
  int count = 0;
  for (const auto& b : blocks_) count += static_cast<int>(b.size());
  return count;
}

Permutation::Permutation(Word word) : word_(std::move(word)) {
  std::vector<char> seen(word_.size() + 1, 0);
  for (int v : word_) {
    if (v < 1 || v > static_cast<int>(word_.size()) || seen[v]) {
      throw std::invalid_argument("not a permutation: '" + format_word(word_) + "'");
    }
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  Word w(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

// ---------------------------------------------------------------------------
// RGF bijection, restriction, standardization

Rgf to_rgf(const SetPartition& p) {
  Word w(static_cast<std::size_t>(p.size()));
  int label = 1;
  for (const auto& b : p.blocks()) {
    for (int e : b) w[e - 1] = label;
    ++label;
  }
  return detail::RgfAccess::adopt(std::move(w));
}

SetPartition from_rgf(const Rgf& w) {
  std::vector<Block> blocks(static_cast<std::size_t>(w.max_letter()));
  for (std::size_t i = 0; i < w.size(); ++i) blocks[w[i] - 1].push_back(static_cast<int>(i) + 1);
  return SetPartition(static_cast<int>(w.size()), std::move(blocks));
}

GenericPartition restrict_to(const SetPartition& p, std::span<const int> subset) {
  std::vector<int> owner(static_cast<std::size_t>(p.size()) + 1, -1);
  for (int j = 0; j < p.block_count(); ++j) {
    for (int e : p.blocks()[j]) owner[e] = j;
  }
  std::vector<Block> parts(static_cast<std::size_t>(p.block_count()));
  for (int e : subset) {
    if (e < 1 || e > p.size()) {
      throw std::out_of_range("subset element " + std::to_string(e) + " outside [1," +
                              std::to_string(p.size()) + "]");
    }
    parts[owner[e]].push_back(e);
  }
  std::erase_if(parts, [](const Block& b) { return b.empty(); });
  return GenericPartition(std::move(parts));
}

SetPartition standardize(const GenericPartition& g) {
  std::vector<int> elements;
  for (const auto& b : g.blocks()) elements.insert(elements.end(), b.begin(), b.end());
  std::sort(elements.begin(), elements.end());
  auto rank = [&](int e) {
    return static_cast<int>(std::lower_bound(elements.begin(), elements.end(), e) -
                            elements.begin()) + 1;
  };
  std::vector<Block> blocks;
  blocks.reserve(g.blocks().size());
  for (const auto& b : g.blocks()) {
    Block relabelled;
    relabelled.reserve(b.size());
    for (int e : b) relabelled.push_back(rank(e));
    blocks.push_back(std::move(relabelled));
  }
  return SetPartition(static_cast<int>(elements.size()), std::move(blocks));
}

// ---------------------------------------------------------------------------
// Enumeration

RgfRange::RgfRange(int n, Word prefix) : n_(static_cast<std::size_t>(n)), prefix_(std::move(prefix)) {
  if (n < 0) throw std::invalid_argument("length must be non-negative");
  if (prefix_.size() > n_ || !Rgf::is_valid(prefix_)) {
    throw std::invalid_argument("invalid RGF prefix '" + format_word(prefix_) + "'");
  }
}

RgfRange::iterator::iterator(std::size_t n, const Word& prefix) : fixed_(prefix.size()), done_(false) {
  Word w = prefix;
  w.resize(n, 1);
  current_ = detail::RgfAccess::adopt(std::move(w));
}

RgfRange::iterator& RgfRange::iterator::operator++() {
  Word& w = detail::RgfAccess::word(current_);
  const std::size_t n = w.size();
  // prefix_max[i] = max(w[0..i-1])
  std::vector<int> prefix_max(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) prefix_max[i + 1] = std::max(prefix_max[i], w[i]);
  for (std::size_t i = n; i-- > std::max<std::size_t>(fixed_, 1);) {
    if (w[i] <= prefix_max[i]) {
      ++w[i];
      std::fill(w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end(), 1);
      return *this;
    }
  }
  done_ = true;
  return *this;
}

PermutationRange::PermutationRange(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("length must be non-negative");
}

PermutationRange::iterator::iterator(int n) : current_(Permutation::identity(n)), done_(false) {}

PermutationRange::iterator& PermutationRange::iterator::operator++() {
  Word w = current_.word();
  if (std::next_permutation(w.begin(), w.end())) {
    current_ = Permutation(std::move(w));
  } else {
    done_ = true;
  }
  return *this;
}

std::vector<SetPartition> enumerate_partitions(int n) {
  std::vector<SetPartition> out;
  for (const Rgf& w : RgfRange(n)) out.push_back(from_rgf(w));
  return out;
}

std::vector<Permutation> enumerate_permutations(int n) {
  std::vector<Permutation> out;
  for (const Permutation& p : PermutationRange(n)) out.push_back(p);
  return out;
}

}  // namespace setpart
