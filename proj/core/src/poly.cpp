#include "setpart/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string_view>

namespace setpart {

using Coeff = MultiPoly::Coeff;

namespace checked {

Coeff add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
  return r;
}

Coeff mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
  return r;
}

Coeff pow(Coeff base, unsigned exponent) {
  Coeff r = 1;
  for (unsigned i = 0; i < exponent; ++i) r = mul(r, base);
  return r;
}

}  // namespace checked

char var_name(Var v) noexcept {
  switch (v) {
    case Var::q: return 'q';
    case Var::t: return 't';
    case Var::x: return 'x';
  }
  return '?';
}

Var parse_var(std::string_view name) {
  if (name == "q") return Var::q;
  if (name == "t") return Var::t;
  if (name == "x") return Var::x;
  throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
}

int& Exponents::operator[](Var v) noexcept {
  switch (v) {
    case Var::q: return q;
    case Var::t: return t;
    case Var::x: return x;
  }
  return q;
}

int Exponents::operator[](Var v) const noexcept {
  switch (v) {
    case Var::q: return q;
    case Var::t: return t;
    case Var::x: return x;
  }
  return 0;
}

MultiPoly MultiPoly::constant(Coeff c) { return monomial(c, 0, 0, 0); }

MultiPoly MultiPoly::monomial(Coeff c, int eq, int et, int ex) {
  MultiPoly p;
  if (c == 0) return p;
  if (eq < 0 || et < 0 || ex < 0) throw std::domain_error("negative exponent in monomial");
  p.terms_.emplace(Exponents{eq, et, ex}, c);
  return p;
}

MultiPoly MultiPoly::var(Var v) {
  Exponents e;
  e[v] = 1;
  MultiPoly p;
  p.terms_.emplace(e, 1);
  return p;
}

int MultiPoly::degree(Var v) const noexcept {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
  return d;
}

bool MultiPoly::depends_on(Var v) const noexcept { return degree(v) > 0; }

void MultiPoly::add_term(const Exponents& e, Coeff c) {
  if (c == 0) return;
  if (e.q < 0 || e.t < 0 || e.x < 0) throw std::domain_error("negative exponent in term");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second = checked::add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, checked::mul(c, -1));
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term(Exponents{ea.q + eb.q, ea.t + eb.t, ea.x + eb.x}, checked::mul(ca, cb));
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  *this = *this * other;
  return *this;
}

MultiPoly MultiPoly::scale(Coeff c) const {
  MultiPoly out;
  if (c == 0) return out;
  for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, checked::mul(coeff, c));
  return out;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = constant(1);
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& replacement) const {
  if (replacement == var(v)) return *this;
  std::vector<MultiPoly> powers{constant(1)};
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    const int k = e[v];
    while (static_cast<int>(powers.size()) <= k) powers.push_back(powers.back() * replacement);
    Exponents rest = e;
    rest[v] = 0;
    for (const auto& [er, cr] : powers[k].terms_) {
      out.add_term(Exponents{rest.q + er.q, rest.t + er.t, rest.x + er.x}, checked::mul(c, cr));
    }
  }
  return out;
}

Coeff MultiPoly::coefficient_of(const Exponents& e) const noexcept {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

Coeff MultiPoly::evaluate(Coeff q, Coeff t, Coeff x) const {
  Coeff total = 0;
  for (const auto& [e, c] : terms_) {
    Coeff term = c;
    term = checked::mul(term, checked::pow(q, static_cast<unsigned>(e.q)));
    term = checked::mul(term, checked::pow(t, static_cast<unsigned>(e.t)));
    term = checked::mul(term, checked::pow(x, static_cast<unsigned>(e.x)));
    total = checked::add(total, term);
  }
  return total;
}

Coeff MultiPoly::coefficient_sum() const { return evaluate(1, 1, 1); }

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, Coeff>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    if (a.first.total() != b.first.total()) return a.first.total() < b.first.total();
    return a.first > b.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    Coeff magnitude = c;
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (c < 0) magnitude = checked::mul(c, -1);
    first = false;

    std::string factors;
    for (Var v : {Var::q, Var::t, Var::x}) {
      const int k = e[v];
      if (k == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += var_name(v);
      if (k > 1) factors += '^' + std::to_string(k);
    }
    if (factors.empty()) {
      out += std::to_string(magnitude);
    } else {
      if (magnitude != 1) out += std::to_string(magnitude) + '*';
      out += factors;
    }
  }
  return out;
}

MultiPoly q_int(int n) {
  MultiPoly out;
  for (int i = 0; i < n; ++i) out.add_term(Exponents{i, 0, 0}, 1);
  return out;
}

std::vector<std::vector<Coeff>> coefficient_rows(const MultiPoly& p, Var row, Var col) {
  if (row == col) throw std::invalid_argument("row and column variable must differ");
  Var other = Var::q;
  for (Var v : {Var::q, Var::t, Var::x}) {
    if (v != row && v != col) other = v;
  }
  if (p.depends_on(other)) {
    throw std::invalid_argument(std::string("polynomial depends on ") + var_name(other) +
                                "; specialize it before extracting rows");
  }
  std::vector<std::vector<Coeff>> rows(p.is_zero() ? 0 : static_cast<std::size_t>(p.degree(row)) + 1);
  for (const auto& [e, c] : p.terms()) {
    auto& r = rows[e[row]];
    if (r.size() <= static_cast<std::size_t>(e[col])) r.resize(static_cast<std::size_t>(e[col]) + 1, 0);
    r[e[col]] = c;
  }
  return rows;
}

std::vector<Coeff> univariate_coefficients(const MultiPoly& p, Var v) {
  std::vector<Coeff> out;
  for (const auto& [e, c] : p.terms()) {
    if (e.total() != e[v]) {
      throw std::invalid_argument(std::string("polynomial is not univariate in ") + var_name(v));
    }
    if (out.size() <= static_cast<std::size_t>(e[v])) out.resize(static_cast<std::size_t>(e[v]) + 1, 0);
    out[e[v]] = c;
  }
  return out;
}

}  // namespace setpart
