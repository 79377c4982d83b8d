#include <stdexcept>

#include "setpart/genfun.hpp"

namespace setpart {

namespace {

using Coeff = MultiPoly::Coeff;

Coeff value_of(const SequenceSpec& spec, Var v) {
  switch (v) {
    case Var::q: return spec.q;
    case Var::t: return spec.t;
    case Var::x: return spec.x;
  }
  return 1;
}

void append_row(const SequenceSpec& spec, const MultiPoly& p, std::vector<Coeff>& out) {
  MultiPoly row = p;
  for (Var v : {Var::q, Var::t, Var::x}) {
    if (v != spec.triangle_var) row = row.substitute(v, MultiPoly::constant(value_of(spec, v)));
  }
  const std::vector<Coeff> c = univariate_coefficients(row, spec.triangle_var);
  if (c.empty()) return;
  std::size_t lo = 0;
  if (spec.order != SequenceSpec::Order::kFull) {
    while (c[lo] == 0) ++lo;
  }
  if (spec.order == SequenceSpec::Order::kDescending) {
    for (std::size_t i = c.size(); i-- > lo;) out.push_back(c[i]);
  } else {
    out.insert(out.end(), c.begin() + static_cast<std::ptrdiff_t>(lo), c.end());
  }
}

}  // namespace

std::vector<Coeff> sequence(const SequenceSpec& spec, int n_lo, int n_hi, ParallelOptions opts) {
  if (n_lo < 0 || n_hi < n_lo) throw std::invalid_argument("invalid index range");
  if (spec.formula && !spec.patterns.empty()) {
    throw std::invalid_argument("give either a formula id or a pattern set, not both");
  }

  std::vector<MultiPoly> polys;
  if (spec.formula) {
    for (auto& v : formula_table(*spec.formula, n_hi, opts)) polys.push_back(std::move(v.poly));
  } else {
    if (spec.stats.names().empty() && spec.kind != SequenceSpec::Kind::kCount) {
      throw std::invalid_argument("statistics are required for evaluations and triangles");
    }
    polys.resize(static_cast<std::size_t>(n_hi) + 1);
    for (int n = n_lo; n <= n_hi; ++n) polys[n] = partition_genfun(n, spec.patterns, spec.stats, opts);
  }

  std::vector<Coeff> out;
  for (int n = n_lo; n <= n_hi; ++n) {
    const MultiPoly& p = polys[n];
    switch (spec.kind) {
      case SequenceSpec::Kind::kCount: out.push_back(p.coefficient_sum()); break;
      case SequenceSpec::Kind::kEvaluate: out.push_back(p.evaluate(spec.q, spec.t, spec.x)); break;
      case SequenceSpec::Kind::kTriangle: append_row(spec, p, out); break;
    }
  }
  return out;
}

}  // namespace setpart
