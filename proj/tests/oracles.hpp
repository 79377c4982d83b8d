#pragma once

// Independent reference implementations used only by tests. They work
// directly from definitions (subsets, blocks, permutations of [n]) and share
// no code with the library beyond the value types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "setpart/partition.hpp"
#include "setpart/poly.hpp"

namespace oracle {

using Blocks = std::vector<std::vector<int>>;
using Int = std::int64_t;

/// Bell numbers from the Bell triangle.
inline std::vector<Int> bell_numbers(int n_max) {
  std::vector<Int> out{1};
  std::vector<Int> row{1};
  for (int n = 1; n <= n_max; ++n) {
    std::vector<Int> next{row.back()};
    for (Int v : row) next.push_back(next.back() + v);
    row = std::move(next);
    out.push_back(row.front());
  }
  return out;
}

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// C(2n, n) / (n + 1).
inline Int catalan(int n) { return binomial(2 * n, n) / (n + 1); }

/// sum_k n! / ((n-2k)! k! (k+1)!)
inline Int motzkin(int n) {
  Int total = 0;
  for (int k = 0; 2 * k <= n; ++k) total += binomial(n, 2 * k) * catalan(k);
  return total;
}

/// Every set partition of [n] as sorted blocks in standard order, built by
/// inserting n into an existing block or a new one.
inline std::vector<Blocks> all_partitions(int n) {
  std::vector<Blocks> current{Blocks{}};
  for (int e = 1; e <= n; ++e) {
    std::vector<Blocks> next;
    for (const Blocks& b : current) {
      for (std::size_t i = 0; i < b.size(); ++i) {
        Blocks c = b;
        c[i].push_back(e);
        next.push_back(std::move(c));
      }
      Blocks c = b;
      c.push_back({e});
      next.push_back(std::move(c));
    }
    current = std::move(next);
  }
  return current;
}

inline std::set<std::set<int>> as_set(const Blocks& b) {
  std::set<std::set<int>> out;
  for (const auto& block : b) out.insert(std::set<int>(block.begin(), block.end()));
  return out;
}

/// Restrict to the elements in `subset` and relabel them 1..|subset| by rank.
inline std::set<std::set<int>> standardized_restriction(const Blocks& p, const std::vector<int>& subset) {
  std::set<std::set<int>> out;
  for (const auto& block : p) {
    std::set<int> piece;
    for (int e : block) {
      auto it = std::find(subset.begin(), subset.end(), e);
      if (it != subset.end()) piece.insert(static_cast<int>(it - subset.begin()) + 1);
    }
    if (!piece.empty()) out.insert(piece);
  }
  return out;
}

/// Subset definition of containment: some |sigma|-subset of [n] restricts
/// and standardizes to sigma.
inline bool contains(const Blocks& p, int n, const Blocks& sigma) {
  int k = 0;
  for (const auto& b : sigma) k += static_cast<int>(b.size());
  if (k > n) return false;
  const auto target = as_set(sigma);
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    std::vector<int> subset;
    for (int i = 0; i < n; ++i) {
      if (pick[i]) subset.push_back(i + 1);
    }
    if (standardized_restriction(p, subset) == target) return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

inline Blocks blocks_of(const setpart::SetPartition& p) { return p.blocks(); }

inline int spread(const Blocks& p) {
  int s = 0;
  for (const auto& b : p) s += *std::max_element(b.begin(), b.end()) - *std::min_element(b.begin(), b.end());
  return s;
}

/// Block index (1-based, standard order) of each element.
inline std::vector<int> word_of(const Blocks& p, int n) {
  Blocks sorted = p;
  for (auto& b : sorted) std::sort(b.begin(), b.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> w(static_cast<std::size_t>(n));
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    for (int e : sorted[j]) w[e - 1] = static_cast<int>(j) + 1;
  }
  return w;
}

/// Sum of q^spread t^block over the partitions of [n] avoiding every pattern.
inline setpart::MultiPoly sb(int n, const std::vector<Blocks>& patterns) {
  setpart::MultiPoly out;
  for (const Blocks& p : all_partitions(n)) {
    bool avoid = true;
    for (const auto& s : patterns) avoid = avoid && !contains(p, n, s);
    if (avoid) out.add_term({spread(p), static_cast<int>(p.size()), 0}, 1);
  }
  return out;
}

inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline bool has_321(const std::vector<int>& p) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (p[i] > p[j] && p[j] > p[k]) return true;
  return false;
}

struct PermStats {
  int inv = 0, lrm = 0, fix = 0, des = 0, maj = 0;
};

inline PermStats perm_stats(const std::vector<int>& p) {
  PermStats s;
  const int n = static_cast<int>(p.size());
  int best = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) s.inv += p[i] > p[j];
    if (p[i] > best) {
      ++s.lrm;
      best = p[i];
    }
    s.fix += p[i] == i + 1;
    if (i + 1 < n && p[i] > p[i + 1]) {
      ++s.des;
      s.maj += i + 1;
    }
  }
  return s;
}

/// Every pair of binary vectors of length n meeting the ballot conditions,
/// by scanning all 4^n candidates.
inline std::vector<std::pair<std::vector<int>, std::vector<int>>> ballot_pairs(int n) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  for (std::uint32_t mask = 0; mask < (1U << (2 * n)); ++mask) {
    std::vector<int> p(static_cast<std::size_t>(n)), v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      p[i] = (mask >> i) & 1U;
      v[i] = (mask >> (n + i)) & 1U;
    }
    bool ok = std::accumulate(p.begin(), p.end(), 0) == std::accumulate(v.begin(), v.end(), 0);
    for (int i = 1; ok && i <= n; ++i) {
      ok = std::accumulate(p.begin(), p.begin() + i, 0) > std::accumulate(v.begin(), v.begin() + i - 1, 0);
    }
    if (ok) out.emplace_back(p, v);
  }
  return out;
}

}  // namespace oracle
