#include "setpart/bijections.hpp"

#include <set>
#include <stdexcept>

#include "setpart/patterns.hpp"

namespace setpart {

namespace {

bool is_increasing_run(const Rgf& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

BitVector parse_bits(std::string_view text, std::string_view context) {
  BitVector out;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bad ballot pair '" + std::string(context) + "'");
    }
    out.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return out;
}

std::string format_bits(const BitVector& bits) {
  std::string out;
  for (auto b : bits) out += b ? '1' : '0';
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// BallotPair

BallotPair::BallotPair(BitVector p, BitVector v) : p_(std::move(p)), v_(std::move(v)) {
  if (!is_valid(p_, v_)) {
    throw std::invalid_argument("not a ballot pair: " + format_bits(p_) + "," + format_bits(v_));
  }
}

bool BallotPair::is_valid(const BitVector& p, const BitVector& v) noexcept {
  if (p.size() != v.size()) return false;
  int ones_p = 0;
  int ones_v_before = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 1 || v[i] > 1) return false;
    ones_p += p[i];
    if (ones_p <= ones_v_before) return false;
    ones_v_before += v[i];
  }
  return ones_p == ones_v_before;
}

BallotPair BallotPair::parse(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    throw std::invalid_argument("ballot pair needs two comma-separated bit strings: '" +
                                std::string(text) + "'");
  }
  return BallotPair(parse_bits(text.substr(0, comma), text), parse_bits(text.substr(comma + 1), text));
}

std::string BallotPair::to_string() const { return format_bits(p_) + "," + format_bits(v_); }

// ---------------------------------------------------------------------------
// tau

bool in_class_1_23(const Rgf& w) {
  // Letters above 1 are 2, 3, ..., m in order, each once, and at most one 1
  // follows the first of them.
  int expected = 2;
  int late_ones = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 1) {
      if (expected > 2) ++late_ones;
    } else if (w[i] == expected) {
      ++expected;
    } else {
      return false;
    }
  }
  return late_ones <= 1;
}

bool in_class_12_3(const Rgf& w) {
  std::size_t m = 0;
  while (m < w.size() && w[m] == static_cast<int>(m) + 1) ++m;
  for (std::size_t i = m; i < w.size(); ++i) {
    if (w[i] != w[m]) return false;
  }
  return true;
}

Rgf tau(const Rgf& w) {
  if (!in_class_1_23(w)) throw std::invalid_argument("tau: '" + format_rgf(w) + "' contains 1/23");
  if (is_increasing_run(w)) return w;
  const int n = static_cast<int>(w.size());
  const int m = w.max_letter();
  int leading = 0;
  while (leading < n && w[leading] == 1) ++leading;
  int late_one = 0;  // 1-based index of a 1 after the first letter above 1
  for (int i = leading; i < n; ++i) {
    if (w[i] == 1) late_one = i + 1;
  }
  const int l = late_one ? leading : leading - 1;
  const int k = late_one ? late_one - l : 1;
  Word out(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) out[i] = i + 1;
  out.resize(static_cast<std::size_t>(n), m - k + 1);
  return Rgf(std::move(out));
}

Rgf tau_inverse(const Rgf& v) {
  if (!in_class_12_3(v)) throw std::invalid_argument("tau_inverse: '" + format_rgf(v) + "' contains 12/3");
  if (is_increasing_run(v)) return v;
  const int n = static_cast<int>(v.size());
  const int m = v.max_letter();
  const int k = m - v[v.size() - 1] + 1;
  const int l = n - m;
  Word out(static_cast<std::size_t>(l), 1);
  int next = 2;
  for (int pos = l + 1; pos <= n; ++pos) out.push_back(pos == l + k ? 1 : next++);
  return Rgf(std::move(out));
}

// ---------------------------------------------------------------------------
// Noncrossing partitions, ballot pairs, 321-avoiders

BallotPair to_ballot(const Rgf& w) {
  if (!is_noncrossing(w)) throw std::invalid_argument("to_ballot: '" + format_rgf(w) + "' is crossing");
  const FirstsLasts fl = firsts_lasts(w);
  BitVector f(w.size(), 0);
  BitVector l(w.size(), 0);
  for (int i : fl.firsts) f[i - 1] = 1;
  for (int i : fl.lasts) l[i - 1] = 1;
  return BallotPair(std::move(f), std::move(l));
}

Rgf from_ballot(const BallotPair& b) {
  Word w;
  w.reserve(b.size());
  std::set<int> available;  // letters opened but not yet closed
  int top = 0;
  for (std::size_t j = 0; j < b.size(); ++j) {
    const bool first = b.p()[j] != 0;
    const bool last = b.v()[j] != 0;
    if (first) {
      ++top;
      w.push_back(top);
      if (!last) available.insert(top);
    } else {
      const int letter = *available.rbegin();
      w.push_back(letter);
      if (last) available.erase(letter);
    }
  }
  return Rgf(std::move(w));
}

Permutation ballot_to_perm(const BallotPair& b) {
  const std::size_t n = b.size();
  std::vector<int> lrm_values;
  std::vector<int> other_values;
  for (std::size_t i = 0; i < n; ++i) (b.v()[i] ? lrm_values : other_values).push_back(static_cast<int>(i) + 1);
  Word w(n);
  std::size_t next_lrm = 0;
  std::size_t next_other = 0;
  for (std::size_t i = 0; i < n; ++i) w[i] = b.p()[i] ? lrm_values[next_lrm++] : other_values[next_other++];
  return Permutation(std::move(w));
}

BallotPair perm_to_ballot(const Permutation& p) {
  if (!avoids_321(p)) throw std::invalid_argument("perm_to_ballot: '" + format_permutation(p) + "' contains 321");
  PosVal pv = pos_val(p);
  return BallotPair(std::move(pv.pos), std::move(pv.val));
}

Permutation partition_to_perm(const Rgf& w) { return ballot_to_perm(to_ballot(w)); }

Rgf perm_to_partition(const Permutation& p) { return from_ballot(perm_to_ballot(p)); }

}  // namespace setpart
