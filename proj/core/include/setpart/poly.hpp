#pragma once

// Sparse polynomials in q, t, x with exact 64-bit integer coefficients.
//
// Every coefficient operation is overflow-checked and throws
// std::overflow_error instead of wrapping. Terms are kept in a map ordered
// lexicographically on (e_q, e_t, e_x) with no zero coefficients, so
// structural equality is polynomial equality.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace setpart {

enum class Var { q = 0, t = 1, x = 2 };

char var_name(Var v) noexcept;
/// Throws std::invalid_argument for anything but "q", "t", "x".
Var parse_var(std::string_view name);

struct Exponents {
  int q = 0;
  int t = 0;
  int x = 0;

  int& operator[](Var v) noexcept;
  int operator[](Var v) const noexcept;
  int total() const noexcept { return q + t + x; }

  friend bool operator==(const Exponents&, const Exponents&) = default;
  friend auto operator<=>(const Exponents&, const Exponents&) = default;
};

class MultiPoly {
 public:
  using Coeff = std::int64_t;
  using TermMap = std::map<Exponents, Coeff>;

  MultiPoly() = default;

  static MultiPoly constant(Coeff c);
  /// Zero when c == 0. Throws std::domain_error if c != 0 and an exponent is
  /// negative.
  static MultiPoly monomial(Coeff c, int eq, int et = 0, int ex = 0);
  static MultiPoly var(Var v);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// Highest exponent of v over all terms; 0 for the zero polynomial.
  int degree(Var v) const noexcept;
  bool depends_on(Var v) const noexcept;

  /// Adds c * monomial(e) in place.
  void add_term(const Exponents& e, Coeff c);

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a) { return a.scale(-1); }

  MultiPoly scale(Coeff c) const;
  MultiPoly pow(unsigned exponent) const;

  /// Replaces v by `replacement` everywhere.
  MultiPoly substitute(Var v, const MultiPoly& replacement) const;

  Coeff coefficient_of(const Exponents& e) const noexcept;

  /// Exact value at integer q, t, x.
  Coeff evaluate(Coeff q, Coeff t, Coeff x) const;

  /// Sum of coefficients, i.e. evaluate(1, 1, 1).
  Coeff coefficient_sum() const;

  /// "q^2*t + 2*q*t^2 + t^3": terms by ascending total degree, ties by
  /// descending (e_q, e_t, e_x); unit coefficients and exponents elided.
  std::string to_string() const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  TermMap terms_;
};

namespace checked {
MultiPoly::Coeff add(MultiPoly::Coeff a, MultiPoly::Coeff b);
MultiPoly::Coeff mul(MultiPoly::Coeff a, MultiPoly::Coeff b);
MultiPoly::Coeff pow(MultiPoly::Coeff base, unsigned exponent);
}  // namespace checked

/// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
MultiPoly q_int(int n);

/// rows[i][j] is the coefficient of row^i * col^j. The third variable must not
/// occur (specialize it first); throws std::invalid_argument otherwise, or
/// when row == col. Row i has length degree-in-col of that row + 1 and is
/// empty when the row is zero.
std::vector<std::vector<MultiPoly::Coeff>> coefficient_rows(const MultiPoly& p, Var row, Var col);

/// Coefficients of a polynomial in v alone, indexed by exponent.
std::vector<MultiPoly::Coeff> univariate_coefficients(const MultiPoly& p, Var v);

}  // namespace setpart
