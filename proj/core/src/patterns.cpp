#include "setpart/patterns.hpp"

#include <algorithm>
#include <stdexcept>

namespace setpart {

namespace {

// Backtracking search for an occurrence of the RGF `sigma` inside `word`.
// With `anchor_last`, the final letter of sigma must sit at the last
// position of word, so only occurrences created by the newest letter count.
class RgfMatcher {
 public:
  RgfMatcher(std::span<const int> word, std::span<const int> sigma, bool anchor_last)
      : word_(word), sigma_(sigma), anchor_last_(anchor_last) {
    int word_max = 0;
    for (int c : word) word_max = std::max(word_max, c);
    int sigma_max = 0;
    for (int s : sigma) sigma_max = std::max(sigma_max, s);
    word_to_sigma_.assign(static_cast<std::size_t>(word_max) + 1, 0);
    sigma_to_word_.assign(static_cast<std::size_t>(sigma_max) + 1, 0);
  }

  bool found() {
    if (sigma_.empty()) return !anchor_last_;
    if (sigma_.size() > word_.size()) return false;
    return search(0, 0, 0);
  }

 private:
  bool search(std::size_t j, std::size_t from, int sigma_max) {
    if (j == sigma_.size()) return true;
    const std::size_t remaining = sigma_.size() - j;
    std::size_t lo = from;
    const std::size_t hi = word_.size() - remaining;
    if (anchor_last_ && remaining == 1) {
      if (from > word_.size() - 1) return false;
      lo = word_.size() - 1;
    }
    const int s = sigma_[j];
    for (std::size_t pos = lo; pos <= hi; ++pos) {
      const int c = word_[pos];
      if (s > sigma_max) {
        if (word_to_sigma_[c] != 0) continue;
        word_to_sigma_[c] = s;
        sigma_to_word_[s] = c;
        const bool hit = search(j + 1, pos + 1, s);
        word_to_sigma_[c] = 0;
        sigma_to_word_[s] = 0;
        if (hit) return true;
      } else if (sigma_to_word_[s] == c) {
        if (search(j + 1, pos + 1, sigma_max)) return true;
      }
    }
    return false;
  }

  std::span<const int> word_;
  std::span<const int> sigma_;
  bool anchor_last_;
  std::vector<int> word_to_sigma_;
  std::vector<int> sigma_to_word_;
};

bool contains_any_anchored(std::span<const int> word, const PatternSet& ps) {
  for (const Rgf& sigma : ps.words()) {
    if (RgfMatcher(word, sigma.letters(), true).found()) return true;
  }
  return false;
}

bool has_empty_pattern(const PatternSet& ps) {
  return std::any_of(ps.words().begin(), ps.words().end(), [](const Rgf& w) { return w.empty(); });
}

void walk(Rgf& current, std::size_t n, int running_max, const PatternSet& ps, const RgfVisitor& visit) {
  Word& w = detail::RgfAccess::word(current);
  if (w.size() == n) {
    visit(current);
    return;
  }
  for (int c = 1; c <= running_max + 1; ++c) {
    w.push_back(c);
    if (!contains_any_anchored(w, ps)) walk(current, n, std::max(running_max, c), ps, visit);
    w.pop_back();
  }
}

void collect_prefixes(Word& w, std::size_t depth, int running_max, const PatternSet& ps,
                      std::vector<Word>& out) {
  if (w.size() == depth) {
    out.push_back(w);
    return;
  }
  for (int c = 1; c <= running_max + 1; ++c) {
    w.push_back(c);
    if (!contains_any_anchored(w, ps)) collect_prefixes(w, depth, std::max(running_max, c), ps, out);
    w.pop_back();
  }
}

// Would appending `c` to `w` complete some x..c..x..c with x != c?
bool closes_xyxy(std::span<const int> w, int c) {
  for (std::size_t b = 0; b < w.size(); ++b) {
    if (w[b] != c) continue;
    for (std::size_t a = 0; a < b; ++a) {
      if (w[a] == c) continue;
      for (std::size_t d = b + 1; d < w.size(); ++d) {
        if (w[d] == w[a]) return true;
      }
    }
  }
  return false;
}

std::vector<Rgf> sorted(std::vector<Rgf> words) {
  std::sort(words.begin(), words.end());
  return words;
}

Word increasing(int m) {
  Word w(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) w[i] = i + 1;
  return w;
}

std::vector<Rgf> only_ones_and_twos(int n) {
  std::vector<Rgf> out;
  if (n == 0) return {Rgf()};
  for (unsigned long mask = 0; mask < (1UL << (n - 1)); ++mask) {
    Word w{1};
    for (int i = n - 2; i >= 0; --i) w.push_back((mask >> i) & 1UL ? 2 : 1);
    out.push_back(Rgf(std::move(w)));
  }
  return out;
}

// A single extra 1 inserted into 1^l 2 3 ... m, with the extra 1 at index
// l + k (1-based); l = 0 only yields 12...n.
std::vector<Rgf> one_inserted_one(int n) {
  if (n == 0) return {Rgf()};
  std::vector<Rgf> out{Rgf(increasing(n))};
  for (int l = 1; l <= n - 1; ++l) {
    for (int k = 1; k <= n - l; ++k) {
      Word w(static_cast<std::size_t>(l), 1);
      int next = 2;
      for (int pos = l + 1; pos <= n; ++pos) w.push_back(pos == l + k ? 1 : next++);
      out.push_back(Rgf(std::move(w)));
    }
  }
  return sorted(std::move(out));
}

void weakly_increasing(Word& w, std::size_t n, std::vector<Rgf>& out) {
  if (w.size() == n) {
    out.push_back(Rgf(w));
    return;
  }
  const int last = w.back();
  for (int c : {last, last + 1}) {
    w.push_back(c);
    weakly_increasing(w, n, out);
    w.pop_back();
  }
}

// 12...m followed by n - m copies of some c <= m, plus 12...n.
std::vector<Rgf> run_then_constant(int n) {
  std::vector<Rgf> out{Rgf(increasing(n))};
  for (int m = 1; m <= n - 1; ++m) {
    for (int c = 1; c <= m; ++c) {
      Word w = increasing(m);
      w.resize(static_cast<std::size_t>(n), c);
      out.push_back(Rgf(std::move(w)));
    }
  }
  return sorted(std::move(out));
}

void at_most_twice(Word& w, std::vector<int>& count, std::size_t n, int running_max, std::vector<Rgf>& out) {
  if (w.size() == n) {
    out.push_back(Rgf(w));
    return;
  }
  for (int c = 1; c <= running_max + 1; ++c) {
    if (count[c] == 2) continue;
    ++count[c];
    w.push_back(c);
    at_most_twice(w, count, n, std::max(running_max, c), out);
    w.pop_back();
    --count[c];
  }
}

void without_xyxy(Word& w, std::size_t n, int running_max, std::vector<Rgf>& out) {
  if (w.size() == n) {
    out.push_back(Rgf(w));
    return;
  }
  for (int c = 1; c <= running_max + 1; ++c) {
    if (closes_xyxy(w, c)) continue;
    w.push_back(c);
    without_xyxy(w, n, std::max(running_max, c), out);
    w.pop_back();
  }
}

void extend_321_free(Word& w, std::vector<char>& used, int n, int top, int top_non_lrm,
                     std::vector<Permutation>& out) {
  if (static_cast<int>(w.size()) == n) {
    out.push_back(Permutation(w));
    return;
  }
  for (int v = 1; v <= n; ++v) {
    if (used[v] || v < top_non_lrm) continue;
    used[v] = 1;
    w.push_back(v);
    if (v > top) {
      extend_321_free(w, used, n, v, top_non_lrm, out);
    } else {
      extend_321_free(w, used, n, top, v, out);
    }
    w.pop_back();
    used[v] = 0;
  }
}

}  // namespace

// ---------------------------------------------------------------------------

PatternSet::PatternSet(std::vector<SetPartition> patterns) : patterns_(std::move(patterns)) {
  words_.reserve(patterns_.size());
  for (const auto& p : patterns_) words_.push_back(to_rgf(p));
}

PatternSet PatternSet::parse(std::string_view text) {
  std::vector<SetPartition> patterns;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto semi = text.find(';', start);
    std::string_view piece = text.substr(start, semi == std::string_view::npos ? semi : semi - start);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    if (!piece.empty()) {
      if (piece.find(',') != std::string_view::npos) {
        throw std::invalid_argument("pattern '" + std::string(piece) +
                                    "': only single-digit block notation is accepted");
      }
      patterns.push_back(parse_partition(piece));
    } else if (semi != std::string_view::npos || start != 0) {
      throw std::invalid_argument("empty pattern in pattern set '" + std::string(text) + "'");
    }
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return PatternSet(std::move(patterns));
}

std::string PatternSet::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    if (i > 0) out += ';';
    out += format_partition(patterns_[i]);
  }
  return out;
}

bool rgf_contains(std::span<const int> word, std::span<const int> sigma) {
  return RgfMatcher(word, sigma, false).found();
}

bool partition_contains(const SetPartition& p, const SetPartition& sigma) {
  return rgf_contains(to_rgf(p).letters(), to_rgf(sigma).letters());
}

bool avoids_all(const Rgf& w, const PatternSet& ps) {
  return std::none_of(ps.words().begin(), ps.words().end(),
                      [&](const Rgf& sigma) { return rgf_contains(w.letters(), sigma.letters()); });
}

bool avoids_all(const SetPartition& p, const PatternSet& ps) { return avoids_all(to_rgf(p), ps); }

void for_each_avoider(int n, const PatternSet& ps, const RgfVisitor& visit) {
  for_each_avoider(n, ps, {}, visit);
}

void for_each_avoider(int n, const PatternSet& ps, std::span<const int> prefix, const RgfVisitor& visit) {
  if (n < 0) throw std::invalid_argument("length must be non-negative");
  if (prefix.size() > static_cast<std::size_t>(n) || !Rgf::is_valid(prefix)) {
    throw std::invalid_argument("invalid RGF prefix '" + format_word(prefix) + "'");
  }
  if (has_empty_pattern(ps)) return;
  Rgf current(Word(prefix.begin(), prefix.end()));
  if (!avoids_all(current, ps)) return;
  walk(current, static_cast<std::size_t>(n), current.max_letter(), ps, visit);
}

std::vector<Word> avoider_prefixes(int n, const PatternSet& ps, int depth) {
  if (n < 0 || depth < 0) throw std::invalid_argument("length must be non-negative");
  std::vector<Word> out;
  if (has_empty_pattern(ps)) return out;
  Word w;
  collect_prefixes(w, static_cast<std::size_t>(std::min(depth, n)), 0, ps, out);
  return out;
}

std::vector<SetPartition> avoidance_class(int n, const PatternSet& ps) {
  std::vector<SetPartition> out;
  for_each_avoider(n, ps, [&](const Rgf& w) { out.push_back(from_rgf(w)); });
  return out;
}

std::vector<Rgf> characterized_class(int n, const SetPartition& key) {
  if (n < 0) throw std::invalid_argument("length must be non-negative");
  const Word code = to_rgf(key).word();
  if (code == Word{1, 2, 3}) return only_ones_and_twos(n);
  if (code == Word{1, 2, 2}) return one_inserted_one(n);
  if (code == Word{1, 2, 1}) {
    std::vector<Rgf> out;
    if (n == 0) return {Rgf()};
    Word w{1};
    weakly_increasing(w, static_cast<std::size_t>(n), out);
    return out;
  }
  if (code == Word{1, 1, 2}) return n == 0 ? std::vector<Rgf>{Rgf()} : run_then_constant(n);
  if (code == Word{1, 1, 1}) {
    std::vector<Rgf> out;
    Word w;
    std::vector<int> count(static_cast<std::size_t>(n) + 2, 0);
    at_most_twice(w, count, static_cast<std::size_t>(n), 0, out);
    return out;
  }
  if (code == Word{1, 2, 1, 2}) {
    std::vector<Rgf> out;
    Word w;
    without_xyxy(w, static_cast<std::size_t>(n), 0, out);
    return out;
  }
  throw std::invalid_argument("no word characterization for pattern '" + format_partition(key) + "'");
}

bool subword_pattern_contains(std::span<const int> word, std::span<const int> pattern) {
  if (pattern.empty()) return true;
  int top = 0;
  for (int c : pattern) top = std::max(top, c);
  std::vector<int> value_of(static_cast<std::size_t>(top) + 1, 0);

  // value_of[c] is the word value bound to pattern letter c (0 when unbound).
  auto consistent = [&](int letter, int value) {
    for (int other = 1; other <= top; ++other) {
      const int v = value_of[other];
      if (v == 0 || other == letter) continue;
      if ((other < letter) != (v < value) || v == value) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t j, std::size_t from) -> bool {
    if (j == pattern.size()) return true;
    const int letter = pattern[j];
    for (std::size_t pos = from; pos + (pattern.size() - j) <= word.size(); ++pos) {
      const int value = word[pos];
      if (value_of[letter] != 0) {
        if (value_of[letter] == value && self(self, j + 1, pos + 1)) return true;
        continue;
      }
      if (!consistent(letter, value)) continue;
      value_of[letter] = value;
      const bool hit = self(self, j + 1, pos + 1);
      value_of[letter] = 0;
      if (hit) return true;
    }
    return false;
  };
  return search(search, 0, 0);
}

bool has_xyxy_subword(std::span<const int> word) {
  for (std::size_t end = 1; end <= word.size(); ++end) {
    if (closes_xyxy(word.first(end - 1), word[end - 1])) return true;
  }
  return false;
}

bool satisfies_noncrossing_condition(std::span<const int> word) {
  const std::size_t n = word.size();
  for (std::size_t i2 = 0; i2 < n; ++i2) {
    int prefix_max = 0;
    for (std::size_t k = 0; k <= i2; ++k) prefix_max = std::max(prefix_max, word[k]);
    bool repeated = false;
    for (std::size_t i = 0; i < i2; ++i) repeated = repeated || word[i] == word[i2];
    if (!repeated) continue;
    for (std::size_t j = i2 + 1; j < n; ++j) {
      if (!(word[j] <= word[i2] || word[j] > prefix_max)) return false;
    }
  }
  return true;
}

bool is_noncrossing(const Rgf& w) {
  static const Word kCrossing{1, 2, 1, 2};
  return !subword_pattern_contains(w.letters(), kCrossing);
}

bool perm_contains(const Permutation& p, const Permutation& tau) {
  const auto& word = p.word();
  const auto& pat = tau.word();
  if (pat.size() > word.size()) return false;
  std::vector<int> chosen;
  chosen.reserve(pat.size());
  auto search = [&](auto&& self, std::size_t from) -> bool {
    const std::size_t j = chosen.size();
    if (j == pat.size()) return true;
    for (std::size_t pos = from; pos + (pat.size() - j) <= word.size(); ++pos) {
      const int v = word[pos];
      bool ok = true;
      for (std::size_t k = 0; k < j && ok; ++k) ok = (chosen[k] < v) == (pat[k] < pat[j]);
      if (!ok) continue;
      chosen.push_back(v);
      const bool hit = self(self, pos + 1);
      chosen.pop_back();
      if (hit) return true;
    }
    return false;
  };
  return search(search, 0);
}

bool avoids_321(const Permutation& p) {
  int top = 0;
  int top_non_lrm = 0;
  for (int v : p.word()) {
    if (v < top_non_lrm) return false;
    if (v > top) {
      top = v;
    } else {
      top_non_lrm = v;
    }
  }
  return true;
}

std::vector<Permutation> av321(int n) {
  if (n < 0) throw std::invalid_argument("length must be non-negative");
  std::vector<Permutation> out;
  Word w;
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  extend_321_free(w, used, n, 0, 0, out);
  return out;
}

}  // namespace setpart
