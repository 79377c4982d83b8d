#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "setpart/genfun.hpp"
#include "setpart/stats.hpp"

using namespace setpart;

namespace {

const MultiPoly q = MultiPoly::var(Var::q);
const MultiPoly t = MultiPoly::var(Var::t);
const MultiPoly x = MultiPoly::var(Var::x);
const MultiPoly one = MultiPoly::constant(1);

PatternSet ps(std::string_view s) { return PatternSet::parse(s); }

std::vector<oracle::Blocks> oracle_patterns(std::string_view spec) {
  std::vector<oracle::Blocks> out;
  const PatternSet set = PatternSet::parse(spec);
  for (const auto& p : set.patterns()) out.push_back(p.blocks());
  return out;
}

bool is_partition_sb(const FormulaInfo& info) { return info.domain == OracleDomain::kSetPartitions; }

}  // namespace

TEST(BruteForce, Examples) {
  EXPECT_EQ(sb_bruteforce(3, ps("13/24")), t.pow(3) + MultiPoly::monomial(2, 1, 2) + MultiPoly::monomial(1, 2, 2) +
                                               MultiPoly::monomial(1, 2, 1));
  EXPECT_EQ(sb_bruteforce(0, ps("13/2")), one);
  EXPECT_EQ(sb_bruteforce(2, ps("12/3")), t * t + q * t);
  EXPECT_EQ(dim_bruteforce(3, ps("13/24")), MultiPoly::monomial(4, 3, 0) + q.pow(4));
  EXPECT_EQ(dim_bruteforce(1, ps("13/24")), q);
  EXPECT_EQ(dim_bruteforce(0, ps("")), one);
}

TEST(BruteForce, MatchesSubsetOracle) {
  for (const char* spec : {"", "13/24", "1/2/3", "1/23", "13/2;123", "123;13/24", "1/2/3;13/24", "12/34"}) {
    for (int n = 0; n <= 7; ++n) {
      ASSERT_EQ(sb_bruteforce(n, ps(spec)), oracle::sb(n, oracle_patterns(spec))) << spec << " n=" << n;
    }
  }
}

TEST(BruteForce, ParallelMatchesSerial) {
  for (const char* spec : {"", "13/24", "123"}) {
    EXPECT_EQ(sb_bruteforce(9, ps(spec), {4}), sb_bruteforce(9, ps(spec), {1})) << spec;
  }
}

TEST(BruteForce, PermutationSums) {
  EXPECT_EQ(i_bruteforce(1), t * x);
  EXPECT_EQ(i_bruteforce(2), t * t * x * x + q * t);
  EXPECT_EQ(m_bruteforce(1), x);
  EXPECT_EQ(m_bruteforce(2), x * x + q * t * x);
  for (int n = 0; n <= 8; ++n) {
    MultiPoly i, m;
    for (const auto& p : oracle::all_permutations(n)) {
      if (oracle::has_321(p)) continue;
      const auto s = oracle::perm_stats(p);
      i.add_term({s.inv, s.lrm, s.fix}, 1);
      m.add_term({s.maj, s.des, s.lrm}, 1);
    }
    ASSERT_EQ(i_bruteforce(n), i) << "n=" << n;
    ASSERT_EQ(m_bruteforce(n), m) << "n=" << n;
  }
}

TEST(BruteForce, RejectsUnknownStatistic) {
  EXPECT_THROW(partition_genfun(3, ps(""), StatTuple({"spread", "nope"})), std::invalid_argument);
  EXPECT_THROW(av321_genfun(3, StatTuple({"spread"})), std::invalid_argument);
  EXPECT_THROW(StatTuple::parse("a,b,c,d"), std::invalid_argument);
  EXPECT_THROW(StatTuple::parse("spread,"), std::invalid_argument);
  EXPECT_EQ(StatTuple::parse("maj,des,lrm").to_string(), "maj,des,lrm");
}

TEST(Formula, Examples) {
  EXPECT_EQ(formula(FormulaId::kSb13_2, 3).poly, (q + t).pow(2) * t);
  EXPECT_EQ(formula(FormulaId::kSb13_24, 1).poly, t);
  EXPECT_EQ(formula(FormulaId::kSb13_2And123, 2).poly, t * t + q * t);
  EXPECT_EQ(i_formula(1), t * x);
  EXPECT_EQ(i_formula(2), t * t * x * x + q * t);
  EXPECT_EQ(m_formula(1), x);
  EXPECT_EQ(m_formula(2), x * x + q * t * x);
  EXPECT_EQ(i_formula(4).evaluate(1, 1, 1), 14);
  EXPECT_EQ(m_formula(4).evaluate(1, 1, 1), 14);
}

TEST(Formula, Modes) {
  EXPECT_EQ(formula(FormulaId::kSb13_2, 0).mode, FormulaMode::kConvention);
  EXPECT_EQ(formula(FormulaId::kSb13_2, 0).poly, one);
  EXPECT_EQ(formula(FormulaId::kSb1_2_3, 1).mode, FormulaMode::kFallback);
  EXPECT_EQ(formula(FormulaId::kSb1_2_3, 2).mode, FormulaMode::kFormula);
  EXPECT_EQ(formula(FormulaId::kSb13_24, 0).mode, FormulaMode::kFormula);
}

TEST(Catalog, Ids) {
  std::set<std::string_view> names;
  for (const auto& info : formula_catalog()) {
    EXPECT_TRUE(names.insert(info.name).second) << info.name;
    EXPECT_EQ(parse_formula_id(info.name), info.id);
    EXPECT_EQ(&formula_info(info.id), &info);
  }
  EXPECT_EQ(names.size(), 19U);
  EXPECT_EQ(parse_formula_id("I_n"), FormulaId::kI);
  EXPECT_EQ(parse_formula_id("M_n"), FormulaId::kM);
  EXPECT_THROW(parse_formula_id("SB_nope"), std::invalid_argument);
}

TEST(Verify, EveryGatingFormulaMatchesOracle) {
  for (const auto& info : formula_catalog()) {
    if (!info.expected_pass) continue;
    const bool single = is_partition_sb(info) && std::string_view(info.patterns).find(';') == std::string_view::npos;
    const int n_max = single ? 12 : 10;
    const VerifyReport r = verify(info.id, n_max);
    ASSERT_EQ(r.records.size(), static_cast<std::size_t>(n_max) + 1);
    EXPECT_TRUE(r.all_equal()) << info.name << " fails at n=" << r.first_failure().value_or(-1);
    EXPECT_TRUE(r.acceptable());
  }
}

TEST(Verify, LiteralMotzkinRecursionFailsAtTwo) {
  const VerifyReport r = verify(FormulaId::kSb123And13_24Literal, 4);
  EXPECT_FALSE(r.expected_pass);
  ASSERT_EQ(r.first_failure(), 2);
  EXPECT_EQ(r.records[2].difference, q - q * t);
  EXPECT_EQ(r.records[2].formula, t * t + q);
  EXPECT_TRUE(r.acceptable());
  for (int n = 2; n <= 4; ++n) EXPECT_FALSE(r.records[n].equal);
}

TEST(Verify, LiteralDoubleSumFailsAtFour) {
  const VerifyReport r = verify(FormulaId::kSb1_2_3Literal, 8);
  ASSERT_EQ(r.first_failure(), 4);
  EXPECT_EQ(r.records[4].difference, q * t * t - q.pow(4) * t * t);
}

TEST(Verify, TrivialRange) {
  const VerifyReport r = verify(FormulaId::kSb13_24, 0);
  ASSERT_EQ(r.records.size(), 1U);
  EXPECT_TRUE(r.records[0].equal);
}

TEST(Verify, PairFormulasNeedThreeElements) {
  // As printed, these two closed forms are wrong for n = 1, 2; the library
  // uses them from n = 3 and falls back to enumeration below.
  for (FormulaId id : {FormulaId::kSb1_2_3And1_23, FormulaId::kSb1_2_3And12_3}) {
    EXPECT_THROW(literal_closed_form(id, 1), std::domain_error);
    EXPECT_EQ(literal_closed_form(id, 2) - setpart::oracle(id, 2), q * t * t);
    EXPECT_EQ(literal_closed_form(id, 3), setpart::oracle(id, 3));
    EXPECT_EQ(formula(id, 2).mode, FormulaMode::kFallback);
  }
  EXPECT_THROW(literal_closed_form(FormulaId::kM, 2), std::invalid_argument);
}

TEST(Properties, DimConsistency) {
  for (const auto& info : formula_catalog()) {
    if (!is_partition_sb(info) || !info.expected_pass) continue;
    const auto table = formula_table(info.id, 10);
    for (int n = 0; n <= 10; ++n) {
      ASSERT_EQ(table[n].poly.substitute(Var::t, q), dim_bruteforce(n, ps(info.patterns))) << info.name << " n=" << n;
    }
  }
}

TEST(Properties, Specialization) {
  for (const auto& info : formula_catalog()) {
    if (!info.expected_pass) continue;
    const auto table = formula_table(info.id, 9);
    for (int n = 0; n <= 9; ++n) {
      const auto value = table[n].poly.evaluate(1, 1, 1);
      if (is_partition_sb(info)) {
        ASSERT_EQ(value, static_cast<MultiPoly::Coeff>(avoidance_class(n, ps(info.patterns)).size())) << info.name;
      } else {
        ASSERT_EQ(value, oracle::catalan(n)) << info.name;
      }
    }
  }
}

TEST(Properties, FibonacciCoefficients) {
  std::vector<MultiPoly::Coeff> counts;
  for (int n = 0; n <= 12; ++n) {
    const MultiPoly at_t1 = formula(FormulaId::kSb13_2And123, n).poly.substitute(Var::t, one);
    ASSERT_EQ(at_t1, sb_bruteforce(n, ps("13/2;123")).substitute(Var::t, one));
    // Spread counts dominoes in the tiling picture: j dominoes, n - 2j squares.
    for (int j = 0; j <= n; ++j) {
      ASSERT_EQ(at_t1.coefficient_of({j, 0, 0}), oracle::binomial(n - j, j)) << "n=" << n << " j=" << j;
    }
    // Block counts tiles: k tiles, n - k of them dominoes.
    const MultiPoly at_q1 = formula(FormulaId::kSb13_2And123, n).poly.substitute(Var::q, one);
    for (int k = 0; k <= n; ++k) {
      ASSERT_EQ(at_q1.coefficient_of({0, k, 0}), oracle::binomial(k, n - k)) << "n=" << n << " k=" << k;
    }
    counts.push_back(at_t1.coefficient_sum());
  }
  for (std::size_t n = 2; n < counts.size(); ++n) EXPECT_EQ(counts[n], counts[n - 1] + counts[n - 2]);
}

TEST(Properties, PrintedFibonacciIdentitySwapsVariables) {
  // sum_k C(k, n-k) q^k is the tile distribution, not the spread distribution.
  const MultiPoly at_t1 = formula(FormulaId::kSb13_2And123, 2).poly.substitute(Var::t, one);
  EXPECT_EQ(at_t1, one + q);
  EXPECT_NE(at_t1, q + q * q);
}

TEST(Properties, ComplementaryPatternsShareDistribution) {
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(sb_bruteforce(n, ps("1/23")), sb_bruteforce(n, ps("12/3"))) << "n=" << n;
}

TEST(Properties, MotzkinCounts) {
  const std::vector<MultiPoly::Coeff> motzkin{1, 1, 2, 4, 9, 21, 51, 127};
  const auto literal = formula_table(FormulaId::kSb123And13_24Literal, 7);
  const auto corrected = formula_table(FormulaId::kSb123And13_24, 7);
  for (int n = 0; n <= 7; ++n) {
    EXPECT_EQ(literal[n].poly.evaluate(1, 1, 1), motzkin[n]);
    EXPECT_EQ(corrected[n].poly.evaluate(1, 1, 1), motzkin[n]);
    EXPECT_EQ(oracle::motzkin(n), motzkin[n]);
  }
}

TEST(MaxSpread, Examples) {
  const MaxSpreadReport r11 = max_spread_report(11);
  EXPECT_EQ(r11.max_spread, 30);
  EXPECT_TRUE(r11.max_matches);
  const Rgf witness = parse_rgf("12345653142");
  EXPECT_EQ(spread(witness), 30);
  EXPECT_EQ(block(witness), 6);
  EXPECT_NE(std::find(r11.maximizers.begin(), r11.maximizers.end(), witness), r11.maximizers.end());

  const MaxSpreadReport r2 = max_spread_report(2);
  EXPECT_EQ(r2.max_spread, 1);
  ASSERT_EQ(r2.maximizers.size(), 1U);
  EXPECT_EQ(format_rgf(r2.maximizers[0]), "11");

  EXPECT_EQ(max_spread_report(6).max_spread, 9);
  EXPECT_THROW(max_spread_report(0), std::invalid_argument);
}

TEST(MaxSpread, OddFamiliesAreIncompleteAtFive) {
  const MaxSpreadReport r = max_spread_report(5);
  ASSERT_TRUE(r.odd_family_exact.has_value());
  EXPECT_FALSE(*r.odd_family_exact);
  std::set<std::string> unexplained;
  for (const auto& w : r.unexplained) unexplained.insert(format_rgf(w));
  EXPECT_EQ(unexplained, (std::set<std::string>{"12112", "12121"}));
  EXPECT_FALSE(max_spread_report(4).odd_family_exact.has_value());
}

TEST(MaxSpread, ExhaustiveAgainstBound) {
  for (int n = 1; n <= 10; ++n) {
    const MaxSpreadReport r = max_spread_report(n);
    EXPECT_EQ(r.max_spread, (n / 2) * ((n + 1) / 2));
    EXPECT_TRUE(r.blocks_match) << n;
    EXPECT_TRUE(r.prefix_form) << n;
    EXPECT_TRUE(r.family_exact) << n;
    EXPECT_TRUE(r.all_max_matches) << n;
  }
}

TEST(Sequence, Examples) {
  SequenceSpec counts;
  counts.patterns = ps("13/24");
  EXPECT_EQ(sequence(counts, 0, 8), (std::vector<MultiPoly::Coeff>{1, 1, 2, 5, 14, 42, 132, 429, 1430}));
  counts.patterns = ps("123;13/24");
  EXPECT_EQ(sequence(counts, 0, 6), (std::vector<MultiPoly::Coeff>{1, 1, 2, 4, 9, 21, 51}));

  SequenceSpec fib;
  fib.kind = SequenceSpec::Kind::kEvaluate;
  fib.formula = FormulaId::kSb13_2And123;
  EXPECT_EQ(sequence(fib, 1, 7), (std::vector<MultiPoly::Coeff>{1, 2, 3, 5, 8, 13, 21}));
}

TEST(Sequence, TriangleRows) {
  SequenceSpec tri;
  tri.kind = SequenceSpec::Kind::kTriangle;
  tri.formula = FormulaId::kSb123And13_24;
  tri.triangle_var = Var::t;
  tri.order = SequenceSpec::Order::kDescending;
  std::vector<MultiPoly::Coeff> expected;
  for (int n = 0; n <= 8; ++n) {
    for (int k = 0; 2 * k <= n; ++k) expected.push_back(oracle::binomial(n, 2 * k) * oracle::catalan(k));
  }
  EXPECT_EQ(sequence(tri, 0, 8), expected);

  tri.order = SequenceSpec::Order::kFull;
  tri.formula = FormulaId::kSb13_2;
  EXPECT_EQ(sequence(tri, 2, 2), (std::vector<MultiPoly::Coeff>{0, 1, 1}));
}

TEST(Sequence, InvalidSpecs) {
  SequenceSpec s;
  EXPECT_THROW(sequence(s, 3, 2), std::invalid_argument);
  s.formula = FormulaId::kI;
  s.patterns = ps("123");
  EXPECT_THROW(sequence(s, 0, 2), std::invalid_argument);
  SequenceSpec tri;
  tri.kind = SequenceSpec::Kind::kTriangle;
  tri.stats = StatTuple();
  EXPECT_THROW(sequence(tri, 0, 2), std::invalid_argument);
}
