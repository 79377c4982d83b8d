#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "setpart/genfun.hpp"
#include "setpart/stats.hpp"

namespace setpart {

bool VerifyReport::all_equal() const noexcept {
  return std::all_of(records.begin(), records.end(), [](const VerifyRecord& r) { return r.equal; });
}

std::optional<int> VerifyReport::first_failure() const noexcept {
  for (const auto& r : records) {
    if (!r.equal) return r.n;
  }
  return std::nullopt;
}

VerifyReport verify(FormulaId id, int n_max, ParallelOptions opts) {
  if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
  const FormulaInfo& info = formula_info(id);
  VerifyReport report{id, std::string(info.name), info.expected_pass, {}};
  std::vector<FormulaValue> values = formula_table(id, n_max, opts);
  for (int n = 0; n <= n_max; ++n) {
    VerifyRecord r;
    r.n = n;
    r.formula = std::move(values[n].poly);
    r.mode = values[n].mode;
    r.oracle = oracle(id, n, opts);
    r.difference = r.formula - r.oracle;
    r.equal = r.difference.is_zero();
    report.records.push_back(std::move(r));
  }
  return report;
}

namespace {

// Occurrence counts per letter, without allocating per word.
bool letters_at_most_twice(const Rgf& w, std::vector<int>& counts) {
  counts.assign(w.size() + 1, 0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (++counts[w[i]] > 2) return false;
  }
  return true;
}

std::set<Rgf> prefix_family(int n) {
  const int c = (n + 1) / 2;
  const int f = n / 2;
  Word sigma(f);
  std::iota(sigma.begin(), sigma.end(), 1);
  std::set<Rgf> out;
  do {
    Word w(c);
    std::iota(w.begin(), w.end(), 1);
    w.insert(w.end(), sigma.begin(), sigma.end());
    out.insert(Rgf(std::move(w)));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

// For n = 2k+1: 12..k k sigma with sigma a permutation of [k].
std::set<Rgf> repeated_peak_family(int n) {
  const int k = (n - 1) / 2;
  std::set<Rgf> out;
  if (k < 1) return out;
  Word sigma(k);
  std::iota(sigma.begin(), sigma.end(), 1);
  do {
    Word w(k);
    std::iota(w.begin(), w.end(), 1);
    w.push_back(k);
    w.insert(w.end(), sigma.begin(), sigma.end());
    out.insert(Rgf(std::move(w)));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

}  // namespace

MaxSpreadReport max_spread_report(int n) {
  if (n < 1) throw std::invalid_argument("max_spread_report needs n >= 1");
  MaxSpreadReport r;
  r.n = n;
  r.expected_max = (n / 2) * ((n + 1) / 2);
  r.max_spread = -1;
  r.max_spread_all = -1;

  std::vector<int> counts;
  for (const Rgf& w : rgfs(n)) {
    const int s = spread(w);
    if (s > r.max_spread_all) {
      r.max_spread_all = s;
      r.maximizers_all.clear();
    }
    if (s == r.max_spread_all) r.maximizers_all.push_back(w);
    if (!letters_at_most_twice(w, counts)) continue;
    if (s > r.max_spread) {
      r.max_spread = s;
      r.maximizers.clear();
    }
    if (s == r.max_spread) r.maximizers.push_back(w);
  }

  const int c = (n + 1) / 2;
  const std::set<Rgf> family = prefix_family(n);
  r.max_matches = r.max_spread == r.expected_max;
  r.blocks_match = std::all_of(r.maximizers.begin(), r.maximizers.end(), [&](const Rgf& w) { return block(w) == c; });
  r.prefix_form = std::all_of(r.maximizers.begin(), r.maximizers.end(), [&](const Rgf& w) { return family.count(w) > 0; });
  r.family_exact = std::set<Rgf>(r.maximizers.begin(), r.maximizers.end()) == family;
  r.all_max_matches = r.max_spread_all == r.max_spread;

  if (n % 2 == 1) {
    std::set<Rgf> both = family;
    const std::set<Rgf> extra = repeated_peak_family(n);
    both.insert(extra.begin(), extra.end());
    for (const Rgf& w : r.maximizers_all) {
      if (both.count(w) == 0) r.unexplained.push_back(w);
    }
    r.odd_family_exact = std::set<Rgf>(r.maximizers_all.begin(), r.maximizers_all.end()) == both;
  }
  return r;
}

}  // namespace setpart
