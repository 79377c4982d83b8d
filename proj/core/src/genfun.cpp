#include "setpart/genfun.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <stdexcept>
#include <thread>

#include "setpart/stats.hpp"

namespace setpart {

namespace {

using Coeff = MultiPoly::Coeff;

MultiPoly mono(Coeff c, int eq, int et, int ex = 0) { return MultiPoly::monomial(c, eq, et, ex); }

const MultiPoly kQ = MultiPoly::var(Var::q);
const MultiPoly kT = MultiPoly::var(Var::t);
const MultiPoly kX = MultiPoly::var(Var::x);
const MultiPoly kOne = MultiPoly::constant(1);

// ---------------------------------------------------------------------------
// Brute force

using RgfStat = std::function<int(const Rgf&)>;

RgfStat resolve_partition_stat(const std::string& name) {
  if (name == "spread") return [](const Rgf& w) { return spread(w); };
  if (name == "block" || name == "lrm") return [](const Rgf& w) { return block(w); };
  if (name == "dim") return [](const Rgf& w) { return dim(w); };
  const auto& known = partition_statistic_names();
  if (std::find(known.begin(), known.end(), name) == known.end()) {
    throw std::invalid_argument("unknown partition statistic '" + name + "'");
  }
  return [name](const Rgf& w) { return partition_statistic(w, name); };
}

Exponents exponents_for(const std::vector<RgfStat>& stats, const Rgf& w) {
  Exponents e;
  for (std::size_t i = 0; i < stats.size(); ++i) e[static_cast<Var>(i)] = stats[i](w);
  return e;
}

unsigned worker_count(ParallelOptions opts) {
  unsigned jobs = opts.jobs ? opts.jobs : std::thread::hardware_concurrency();
  return std::max(1U, jobs);
}

}  // namespace

StatTuple::StatTuple(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > 3) throw std::invalid_argument("at most three statistics (q, t, x)");
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("empty statistic name");
  }
}

StatTuple StatTuple::parse(std::string_view text) {
  std::vector<std::string> names;
  if (text.empty()) return StatTuple(names);
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    names.emplace_back(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return StatTuple(std::move(names));
}

std::string StatTuple::to_string() const {
  std::string out;
  for (const auto& n : names_) {
    if (!out.empty()) out += ',';
    out += n;
  }
  return out;
}

MultiPoly partition_genfun(int n, const PatternSet& ps, const StatTuple& stats, ParallelOptions opts) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  std::vector<RgfStat> fns;
  for (const auto& name : stats.names()) fns.push_back(resolve_partition_stat(name));

  const unsigned jobs = worker_count(opts);
  if (jobs == 1 || n < 8) {
    MultiPoly out;
    for_each_avoider(n, ps, [&](const Rgf& w) { out.add_term(exponents_for(fns, w), 1); });
    return out;
  }

  const std::vector<Word> prefixes = avoider_prefixes(n, ps, std::min(n, 6));
  std::atomic<std::size_t> next{0};
  std::vector<MultiPoly> partial(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> workers;
  for (unsigned j = 0; j < jobs; ++j) {
    workers.emplace_back([&, j] {
      try {
        for (std::size_t i = next++; i < prefixes.size(); i = next++) {
          for_each_avoider(n, ps, prefixes[i], [&](const Rgf& w) { partial[j].add_term(exponents_for(fns, w), 1); });
        }
      } catch (...) {
        errors[j] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  MultiPoly out;
  for (const auto& p : partial) out += p;
  return out;
}

MultiPoly av321_genfun(int n, const StatTuple& stats) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  const auto& known = permutation_statistic_names();
  for (const auto& name : stats.names()) {
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      throw std::invalid_argument("unknown permutation statistic '" + name + "'");
    }
  }
  MultiPoly out;
  for (const Permutation& p : av321(n)) {
    Exponents e;
    for (std::size_t i = 0; i < stats.names().size(); ++i) {
      e[static_cast<Var>(i)] = permutation_statistic(p, stats.names()[i]);
    }
    out.add_term(e, 1);
  }
  return out;
}

MultiPoly sb_bruteforce(int n, const PatternSet& ps, ParallelOptions opts) {
  return partition_genfun(n, ps, StatTuple({"spread", "block"}), opts);
}

MultiPoly dim_bruteforce(int n, const PatternSet& ps, ParallelOptions opts) {
  return partition_genfun(n, ps, StatTuple({"dim"}), opts);
}

MultiPoly i_bruteforce(int n) { return av321_genfun(n, StatTuple({"inv", "lrm", "fix"})); }

MultiPoly m_bruteforce(int n) { return av321_genfun(n, StatTuple({"maj", "des", "lrm"})); }

// ---------------------------------------------------------------------------
// Permutation recursions

std::vector<MultiPoly> i_formula_table(int n) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  std::vector<MultiPoly> I{kOne};
  std::vector<MultiPoly> at_x1{kOne};  // I_k(q, t, 1)
  const MultiPoly t_x_minus_1 = kT * (kX - kOne);
  for (int m = 1; m <= n; ++m) {
    MultiPoly next = kT * kX * I[m - 1];
    for (int j = 2; j <= m; ++j) {
      next += mono(1, j - 1, 0) * at_x1[j - 2] * (I[m - j + 1] - t_x_minus_1 * I[m - j]);
    }
    at_x1.push_back(next.substitute(Var::x, kOne));
    I.push_back(std::move(next));
  }
  return I;
}

std::vector<MultiPoly> m_formula_table(int n) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  std::vector<MultiPoly> M{kOne};
  // Shifted values M_j(q, q^k t, x), built on first use.
  std::map<std::pair<int, int>, MultiPoly> shifted;
  auto shift = [&](int j, int k) -> const MultiPoly& {
    auto [it, inserted] = shifted.try_emplace({j, k});
    if (inserted) it->second = M[j].substitute(Var::t, mono(1, k, 1));
    return it->second;
  };
  for (int m = 1; m <= n; ++m) {
    MultiPoly next = kX * shift(m - 1, 1);
    for (int k = 2; k <= m; ++k) {
      MultiPoly head = M[k - 1] + kX * (mono(1, k - 1, 1) - kOne) * M[k - 2];
      next += head * shift(m - k, k);
    }
    M.push_back(std::move(next));
  }
  return M;
}

MultiPoly i_formula(int n) { return i_formula_table(n).back(); }

MultiPoly m_formula(int n) { return m_formula_table(n).back(); }

// ---------------------------------------------------------------------------
// Partition closed forms and recursions

namespace {

MultiPoly sb_12_3(int n) {
  MultiPoly out = mono(1, 0, n);
  for (int i = 1; i < n; ++i) out += mono(1, n - i, i) * q_int(i);
  return out;
}

MultiPoly sb_13_2(int n) { return (kQ + kT).pow(static_cast<unsigned>(n - 1)) * kT; }

// One-block word plus the two-block words, summed case by case.
MultiPoly sb_1_2_3(int n) {
  MultiPoly inner = mono(n - 2, n - 1, 0) + mono(n - 1, n - 2, 0);
  for (int i = 2; i <= n - 2; ++i) {
    for (int j = i + 1; j <= n - 1; ++j) inner += mono(Coeff{1} << (j - i), n - 1 + j - i, 0);
  }
  return mono(1, n - 1, 1) + mono(1, 0, 2) * inner;
}

MultiPoly sb_1_2_3_literal(int n) {
  MultiPoly inner = mono(n - 2, n - 1, 0) + mono(n - 1, n - 2, 0);
  for (int i = 2; i <= n - 2; ++i) {
    for (int j = i + 1; j <= n - 1; ++j) {
      inner += mono(Coeff{1} << (j - i - 1), j - i, 0) * (kOne + mono(1, n - 1, 0));
    }
  }
  return mono(1, n - 1, 1) + mono(1, 0, 2) * inner;
}

MultiPoly sb_1_2_3_and_1_23(int n) { return mono(1, n - 1, 1) + mono(1, n - 1, 2) + mono(1, n - 2, 2); }

MultiPoly sb_1_2_3_and_13_2(int n) { return mono(1, n - 1, 1) + mono(n - 1, n - 2, 2); }

MultiPoly sb_1_23_and_13_2(int n) {
  MultiPoly out = mono(1, n - 1, 1);
  for (int k = 1; k < n; ++k) out += mono(1, k - 1, n - k + 1);
  return out;
}

MultiPoly sb_1_23_and_123(int n) { return kQ * q_int(n - 1) * mono(1, 0, n - 1) + mono(1, 0, n); }

MultiPoly sb_13_2_and_12_3(int n) {
  MultiPoly out;
  for (int k = 1; k <= n; ++k) out += mono(1, n - k, k);
  return out;
}

MultiPoly sb_1_2_3_and_13_24(int n) {
  MultiPoly sum;
  for (int k = 2; k < n; ++k) sum += q_int(n - k);
  return mono(1, n - 1, 1) + mono(1, 0, 2) * (mono(n - 1, n - 2, 0) + mono(1, n - 1, 0) * sum);
}

std::vector<MultiPoly> catalan_table(int n) {
  std::vector<MultiPoly> C{kOne, kT};
  for (int m = 2; m <= n; ++m) {
    MultiPoly next = kT * C[m - 1];
    for (int k = 2; k <= m; ++k) next += mono(1, k - 1, 0) * C[k - 2] * C[m - k + 1];
    C.push_back(std::move(next));
  }
  C.resize(static_cast<std::size_t>(n) + 1);
  return C;
}

std::vector<MultiPoly> fibonacci_table(int n) {
  std::vector<MultiPoly> F{kOne, kT};
  const MultiPoly qt = mono(1, 1, 1);
  for (int m = 2; m <= n; ++m) F.push_back(kT * F[m - 1] + qt * F[m - 2]);
  F.resize(static_cast<std::size_t>(n) + 1);
  return F;
}

std::vector<MultiPoly> motzkin_table(int n, bool with_block_factor) {
  std::vector<MultiPoly> S{kOne, kT};
  for (int m = 2; m <= n; ++m) {
    MultiPoly next = kT * S[m - 1];
    for (int k = 0; k <= m - 2; ++k) {
      MultiPoly term = mono(1, k + 1, 0) * S[k] * S[m - k - 2];
      next += with_block_factor ? kT * term : term;
    }
    S.push_back(std::move(next));
  }
  S.resize(static_cast<std::size_t>(n) + 1);
  return S;
}

using ClosedForm = MultiPoly (*)(int);
using Table = std::function<std::vector<MultiPoly>(int)>;

struct Implementation {
  ClosedForm closed = nullptr;  // exactly one of closed / table is set
  Table table;
};

Implementation implementation(FormulaId id) {
  switch (id) {
    case FormulaId::kSb12_3:
    case FormulaId::kSb1_23: return {sb_12_3, {}};
    case FormulaId::kSb13_2: return {sb_13_2, {}};
    case FormulaId::kSb1_2_3: return {sb_1_2_3, {}};
    case FormulaId::kSb1_2_3Literal: return {sb_1_2_3_literal, {}};
    case FormulaId::kSb13_24: return {nullptr, catalan_table};
    case FormulaId::kSb1_2_3And1_23:
    case FormulaId::kSb1_2_3And12_3: return {sb_1_2_3_and_1_23, {}};
    case FormulaId::kSb1_2_3And13_2: return {sb_1_2_3_and_13_2, {}};
    case FormulaId::kSb1_23And13_2: return {sb_1_23_and_13_2, {}};
    case FormulaId::kSb1_23And123:
    case FormulaId::kSb12_3And123: return {sb_1_23_and_123, {}};
    case FormulaId::kSb13_2And12_3: return {sb_13_2_and_12_3, {}};
    case FormulaId::kSb13_2And123: return {nullptr, fibonacci_table};
    case FormulaId::kSb123And13_24: return {nullptr, [](int n) { return motzkin_table(n, true); }};
    case FormulaId::kSb123And13_24Literal: return {nullptr, [](int n) { return motzkin_table(n, false); }};
    case FormulaId::kSb1_2_3And13_24: return {sb_1_2_3_and_13_24, {}};
    case FormulaId::kI: return {nullptr, i_formula_table};
    case FormulaId::kM: return {nullptr, m_formula_table};
  }
  throw std::invalid_argument("unknown formula id");
}

constexpr auto kSets = OracleDomain::kSetPartitions;
constexpr auto kPerms = OracleDomain::kAv321;

}  // namespace

const std::vector<FormulaInfo>& formula_catalog() {
  static const std::vector<FormulaInfo> catalog{
      {FormulaId::kSb12_3, "SB_12/3", "12/3", "spread,block", kSets, 1, true,
       "t^n + sum_{i=1}^{n-1} t^i q^{n-i} [i]_q"},
      {FormulaId::kSb1_23, "SB_1/23", "1/23", "spread,block", kSets, 1, true,
       "same polynomial as SB_12/3, via the block-preserving bijection"},
      {FormulaId::kSb13_2, "SB_13/2", "13/2", "spread,block", kSets, 1, true, "(q+t)^{n-1} t"},
      {FormulaId::kSb1_2_3, "SB_1/2/3", "1/2/3", "spread,block", kSets, 2, true,
       "q^{n-1}t + t^2((n-2)q^{n-1} + (n-1)q^{n-2} + sum_{2<=i<j<=n-1} 2^{j-i} q^{n-1+j-i})"},
      {FormulaId::kSb1_2_3Literal, "SB_1/2/3_literal", "1/2/3", "spread,block", kSets, 2, false,
       "printed double sum with 2^{j-i-1} q^{j-i} (1+q^{n-1}); disagrees with enumeration from n=4"},
      {FormulaId::kSb13_24, "SB_13/24", "13/24", "spread,block", kSets, 1, true,
       "SB_n = t SB_{n-1} + sum_{k=2}^n q^{k-1} SB_{k-2} SB_{n-k+1}"},
      {FormulaId::kSb1_2_3And1_23, "SB_1/2/3_1/23", "1/2/3;1/23", "spread,block", kSets, 3, true,
       "q^{n-1}(t+t^2) + q^{n-2}t^2 (n>=3)"},
      {FormulaId::kSb1_2_3And13_2, "SB_1/2/3_13/2", "1/2/3;13/2", "spread,block", kSets, 1, true,
       "q^{n-1}t + (n-1)q^{n-2}t^2"},
      {FormulaId::kSb1_2_3And12_3, "SB_1/2/3_12/3", "1/2/3;12/3", "spread,block", kSets, 3, true,
       "q^{n-1}(t+t^2) + q^{n-2}t^2 (n>=3)"},
      {FormulaId::kSb1_23And13_2, "SB_1/23_13/2", "1/23;13/2", "spread,block", kSets, 1, true,
       "q^{n-1}t + sum_{k=1}^{n-1} q^{k-1} t^{n-k+1}"},
      {FormulaId::kSb1_23And123, "SB_1/23_123", "1/23;123", "spread,block", kSets, 1, true,
       "q [n-1]_q t^{n-1} + t^n"},
      {FormulaId::kSb13_2And12_3, "SB_13/2_12/3", "13/2;12/3", "spread,block", kSets, 1, true,
       "sum_{k=1}^n q^{n-k} t^k"},
      {FormulaId::kSb12_3And123, "SB_12/3_123", "12/3;123", "spread,block", kSets, 1, true,
       "q [n-1]_q t^{n-1} + t^n"},
      {FormulaId::kSb13_2And123, "SB_13/2_123", "13/2;123", "spread,block", kSets, 1, true,
       "SB_n = t SB_{n-1} + qt SB_{n-2}"},
      {FormulaId::kSb123And13_24, "SB_123_13/24", "123;13/24", "spread,block", kSets, 1, true,
       "SB_n = t SB_{n-1} + sum_{k=0}^{n-2} q^{k+1} t SB_k SB_{n-k-2}"},
      {FormulaId::kSb123And13_24Literal, "SB_123_13/24_literal", "123;13/24", "spread,block", kSets, 1, false,
       "printed recursion without the factor t for the block of the two 1s"},
      {FormulaId::kSb1_2_3And13_24, "SB_1/2/3_13/24", "1/2/3;13/24", "spread,block", kSets, 1, true,
       "t q^{n-1} + t^2((n-1)q^{n-2} + q^{n-1} sum_{k=2}^{n-1} [n-k]_q)"},
      {FormulaId::kI, "I", "", "inv,lrm,fix", kPerms, 1, true,
       "I_n = tx I_{n-1} + sum_{j=2}^n q^{j-1} I_{j-2}(q,t,1)(I_{n-j+1} - t(x-1) I_{n-j})"},
      {FormulaId::kM, "M", "", "maj,des,lrm", kPerms, 1, true,
       "M_n = x M_{n-1}(q,qt,x) + sum_{k=2}^n (M_{k-1} + x(q^{k-1}t-1) M_{k-2}) M_{n-k}(q,q^k t,x)"},
  };
  return catalog;
}

const FormulaInfo& formula_info(FormulaId id) {
  for (const auto& info : formula_catalog()) {
    if (info.id == id) return info;
  }
  throw std::invalid_argument("unknown formula id");
}

FormulaId parse_formula_id(std::string_view name) {
  if (name == "I_n") return FormulaId::kI;
  if (name == "M_n") return FormulaId::kM;
  for (const auto& info : formula_catalog()) {
    if (info.name == name) return info.id;
  }
  throw std::invalid_argument("unknown formula id '" + std::string(name) + "'");
}

std::string_view to_string(FormulaMode mode) {
  switch (mode) {
    case FormulaMode::kFormula: return "formula";
    case FormulaMode::kConvention: return "convention";
    case FormulaMode::kFallback: return "fallback";
  }
  return "?";
}

MultiPoly oracle(FormulaId id, int n, ParallelOptions opts) {
  const FormulaInfo& info = formula_info(id);
  const StatTuple stats = StatTuple::parse(info.statistics);
  if (info.domain == OracleDomain::kAv321) return av321_genfun(n, stats);
  return partition_genfun(n, PatternSet::parse(info.patterns), stats, opts);
}

MultiPoly literal_closed_form(FormulaId id, int n) {
  const Implementation impl = implementation(id);
  if (!impl.closed) throw std::invalid_argument(std::string(formula_info(id).name) + " is a recursion");
  return impl.closed(n);
}

std::vector<FormulaValue> formula_table(FormulaId id, int n_max, ParallelOptions opts) {
  if (n_max < 0) throw std::invalid_argument("n must be non-negative");
  const FormulaInfo& info = formula_info(id);
  const Implementation impl = implementation(id);
  std::vector<FormulaValue> out;
  if (impl.table) {
    for (auto& p : impl.table(n_max)) out.push_back({std::move(p), FormulaMode::kFormula});
    return out;
  }
  out.push_back({kOne, FormulaMode::kConvention});
  for (int n = 1; n <= n_max; ++n) {
    if (n < info.formula_from) {
      out.push_back({oracle(id, n, opts), FormulaMode::kFallback});
    } else {
      out.push_back({impl.closed(n), FormulaMode::kFormula});
    }
  }
  return out;
}

FormulaValue formula(FormulaId id, int n, ParallelOptions opts) { return formula_table(id, n, opts).back(); }

}  // namespace setpart
