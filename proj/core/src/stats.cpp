#include "setpart/stats.hpp"

#include <algorithm>
#include <stdexcept>

namespace setpart {

namespace {

int as_int(std::size_t i) { return static_cast<int>(i); }

}  // namespace

int spread(const Rgf& w) {
  const int k = w.max_letter();
  std::vector<int> first(static_cast<std::size_t>(k) + 1, -1);
  std::vector<int> last(static_cast<std::size_t>(k) + 1, -1);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (first[w[i]] < 0) first[w[i]] = as_int(i);
    last[w[i]] = as_int(i);
  }
  int total = 0;
  for (int letter = 1; letter <= k; ++letter) total += last[letter] - first[letter];
  return total;
}

int block(const Rgf& w) { return w.max_letter(); }

int dim(const Rgf& w) { return spread(w) + block(w); }

int spread(const SetPartition& p) { return spread(to_rgf(p)); }
int block(const SetPartition& p) { return block(to_rgf(p)); }
int dim(const SetPartition& p) { return dim(to_rgf(p)); }

FirstsLasts firsts_lasts(const Rgf& w) {
  FirstsLasts out;
  const std::size_t n = w.size();
  std::vector<char> seen(static_cast<std::size_t>(w.max_letter()) + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!seen[w[i]]) out.firsts.push_back(as_int(i) + 1);
    seen[w[i]] = 1;
  }
  std::fill(seen.begin(), seen.end(), 0);
  for (std::size_t i = n; i-- > 0;) {
    if (!seen[w[i]]) out.lasts.push_back(as_int(i) + 1);
    seen[w[i]] = 1;
  }
  std::reverse(out.lasts.begin(), out.lasts.end());
  return out;
}

IndexSet lrm_indices(const Rgf& w) {
  IndexSet out;
  int top = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > top) {
      out.push_back(as_int(i) + 1);
      top = w[i];
    }
  }
  return out;
}

IndexSet checkpoints(const Rgf& w) {
  const std::size_t n = w.size();
  // suffix_min[i] = min(w[i..n-1]), with a sentinel past the end.
  std::vector<int> suffix_min(n + 1, w.max_letter() + 1);
  for (std::size_t i = n; i-- > 0;) suffix_min[i] = std::min(suffix_min[i + 1], w[i]);
  IndexSet out;
  for (int i : lrm_indices(w)) {
    if (w[i - 1] < suffix_min[i]) out.push_back(i);
  }
  return out;
}

IndexSet apices(const Rgf& w) {
  IndexSet out;
  for (int i : lrm_indices(w)) {
    if (static_cast<std::size_t>(i) < w.size() && w[i - 1] >= w[i]) out.push_back(i);
  }
  return out;
}

int apex_major_index(const Rgf& w) {
  int total = 0;
  for (int i : apices(w)) total += i;
  return total;
}

int inversions(const Permutation& p) {
  int count = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) count += p[i] > p[j] ? 1 : 0;
  }
  return count;
}

IndexSet lrm_indices(const Permutation& p) {
  IndexSet out;
  int top = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > top) {
      out.push_back(as_int(i) + 1);
      top = p[i];
    }
  }
  return out;
}

IndexSet fixed_points(const Permutation& p) {
  IndexSet out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == as_int(i) + 1) out.push_back(as_int(i) + 1);
  }
  return out;
}

IndexSet descents(const Permutation& p) {
  IndexSet out;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i] > p[i + 1]) out.push_back(as_int(i) + 1);
  }
  return out;
}

int major_index(const Permutation& p) {
  int total = 0;
  for (int i : descents(p)) total += i;
  return total;
}

PosVal pos_val(const Permutation& p) {
  PosVal out{BitVector(p.size(), 0), BitVector(p.size(), 0)};
  for (int i : lrm_indices(p)) {
    out.pos[i - 1] = 1;
    out.val[p[i - 1] - 1] = 1;
  }
  return out;
}

std::int64_t StatProfile::at(std::string_view name) const {
  auto it = values_.find(name);
  if (it == values_.end()) throw std::out_of_range("no statistic named '" + std::string(name) + "'");
  return it->second;
}

StatProfile partition_stats(const Rgf& w) {
  StatProfile s;
  const IndexSet ap = apices(w);
  s.set("spread", spread(w));
  s.set("block", block(w));
  s.set("dim", dim(w));
  s.set("cp", as_int(checkpoints(w).size()));
  s.set("ap", as_int(ap.size()));
  s.set("maj", apex_major_index(w));
  return s;
}

StatProfile perm_stats(const Permutation& p) {
  StatProfile s;
  s.set("inv", inversions(p));
  s.set("lrm", as_int(lrm_indices(p).size()));
  s.set("fix", as_int(fixed_points(p).size()));
  s.set("des", as_int(descents(p).size()));
  s.set("maj", major_index(p));
  return s;
}

const std::vector<std::string>& partition_statistic_names() {
  static const std::vector<std::string> names{"spread", "block", "dim", "lrm", "cp", "ap", "maj"};
  return names;
}

const std::vector<std::string>& permutation_statistic_names() {
  static const std::vector<std::string> names{"inv", "lrm", "fix", "des", "maj"};
  return names;
}

int partition_statistic(const Rgf& w, std::string_view name) {
  if (name == "spread") return spread(w);
  if (name == "block" || name == "lrm") return block(w);
  if (name == "dim") return dim(w);
  if (name == "cp") return as_int(checkpoints(w).size());
  if (name == "ap") return as_int(apices(w).size());
  if (name == "maj") return apex_major_index(w);
  throw std::invalid_argument("unknown partition statistic '" + std::string(name) + "'");
}

int permutation_statistic(const Permutation& p, std::string_view name) {
  if (name == "inv") return inversions(p);
  if (name == "lrm") return as_int(lrm_indices(p).size());
  if (name == "fix") return as_int(fixed_points(p).size());
  if (name == "des") return as_int(descents(p).size());
  if (name == "maj") return major_index(p);
  throw std::invalid_argument("unknown permutation statistic '" + std::string(name) + "'");
}

}  // namespace setpart
