#include <gtest/gtest.h>

#include "qinv/catalog.hpp"
#include "qinv/families.hpp"
#include "qinv/span.hpp"

using namespace qinv;

TEST(Catalog, LoadsAndResolves) {
  const auto& cat = Catalog::builtin();
  EXPECT_GT(cat.names().size(), 40u);
  for (const char* n : {"H", "L", "M", "N", "F4_1", "P", "F", "D1", "T2_0", "F5_12_4"}) EXPECT_TRUE(cat.has(n)) << n;
  EXPECT_EQ(cat.get("H").degree(), 2);
  EXPECT_EQ(cat.get("F").qubits(), 5);
}

TEST(Catalog, UnknownNameSuggests) {
  try {
    Catalog::builtin().get("F4_l");
    FAIL();
  } catch (const std::out_of_range& e) {
    EXPECT_NE(std::string(e.what()).find("F4_1"), std::string::npos);
  }
}

TEST(Catalog, ParseErrorsCarryLine) {
  try {
    Catalog::parse("A = comb(\"y y\")\nB = A + C\n");
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("2"), std::string::npos);
  }
  EXPECT_THROW(Catalog::parse("A = comb(\"y y\")\nB = A + comb(\"y y y y\")\n"), std::invalid_argument);
}

TEST(Catalog, HOnGhz) {
  // (s2)^4 maps |1111> to |0000>, so <<yyyy>> = 2 on |0000> + |1111>.
  auto ghz = state_from_kets<GaussQ>(4, {{0, GaussQ(1)}, {15, GaussQ(1)}});
  EXPECT_EQ(Catalog::builtin().get("H").eval(ghz), GaussQ(1));
}

TEST(Catalog, LMNSumToZero) {
  const auto& cat = Catalog::builtin();
  for (std::uint64_t s = 0; s < 5; ++s) {
    auto psi = random_exact_state(4, s);
    EXPECT_TRUE((cat.get("L") + cat.get("M") + cat.get("N")).eval(psi).is_zero());
  }
}

TEST(Catalog, T2IsTenthOfPSquaredMinus3Q) {
  // T2_0 is a 1/q! average; it comes out as (P^2 - 3Q)/10.
  const auto& cat = Catalog::builtin();
  Invariant rhs = cat.expression("(P^2 - 3*Q)/10");
  for (std::uint64_t s = 0; s < 5; ++s) {
    auto psi = random_exact_state(5, 40 + s);
    EXPECT_EQ(cat.get("T2_0").eval(psi), rhs.eval(psi));
  }
}

TEST(Catalog, NamedStates) {
  EXPECT_EQ(named_state("graph5_d").exact.value(), ring_graph_state(5));
  EXPECT_THROW(named_state("graph5_z"), std::out_of_range);
}

namespace {
EvaluationMatrix known_rank_matrix(std::size_t rank, std::size_t rows, std::size_t cols, std::uint64_t seed) {
  // rows are fixed integer combinations of `rank` random rows.
  std::vector<std::vector<GaussQ>> base;
  for (std::size_t r = 0; r < rank; ++r) {
    auto psi = random_exact_state(6, seed + r);
    base.emplace_back(psi.amplitudes().begin(), psi.amplitudes().begin() + cols);
  }
  EvaluationMatrix m;
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<GaussQ> row(cols, GaussQ(0));
    for (std::size_t k = 0; k < rank; ++k) {
      GaussQ c(static_cast<long>((r * 7 + k * 3) % 5) - 2, static_cast<long>((r + 2 * k) % 3) - 1);
      if (r < rank) c = r == k ? GaussQ(1) : GaussQ(0);
      for (std::size_t j = 0; j < cols; ++j) row[j] += c * base[k][j];
    }
    m.append_row("r" + std::to_string(r), row);
  }
  return m;
}
}  // namespace

TEST(Span, RanksAgreeOnKnownMatrix) {
  for (std::size_t rank : {1u, 5u, 12u}) {
    auto m = known_rank_matrix(rank, rank + 6, 30, 100 * rank);
    EXPECT_EQ(exact_rank(m).rank, rank);
    EXPECT_EQ(modular_rank(m).rank, rank);
    EXPECT_EQ(modular_rank(m, 2).rank, rank);
    EXPECT_EQ(float_rank(m).rank, rank);
    EXPECT_EQ(exact_rank(m).basis_rows.size(), rank);
  }
}

TEST(Span, RelationRecoversCoefficients) {
  auto m = known_rank_matrix(4, 4, 20, 5);
  std::vector<GaussQ> t(20);
  const GaussQ c[] = {GaussQ(3), GaussQ(0), GaussQ(Rational(-1, 2)), GaussQ(0, 1)};
  for (std::size_t j = 0; j < 20; ++j)
    for (int k = 0; k < 4; ++k) t[j] += c[k] * m.exact[k][j];
  auto rel = find_relation(t, m);
  ASSERT_TRUE(rel.member);
  for (int k = 0; k < 4; ++k) EXPECT_EQ(rel.coeffs[k], c[k]);
  t[0] += GaussQ(1);
  EXPECT_FALSE(find_relation(t, m).member);
}

TEST(Span, ModularSpanIncremental) {
  auto m = known_rank_matrix(3, 6, 12, 77);
  ModularSpan s(12);
  std::size_t kept = 0;
  for (const auto& r : m.exact) kept += s.add(r);
  EXPECT_EQ(kept, 3u);
  EXPECT_FALSE(s.independent(m.exact[5]));
}

TEST(Span, FourQubitDegreeFourDimension) {
  // H^2, L, M, N span a 3-dimensional space (L + M + N = 0).
  const auto& cat = Catalog::builtin();
  std::vector<NamedInvariant> invs = {{"H^2", Invariant::power(cat.get("H"), 2)},
                                      {"L", cat.get("L")}, {"M", cat.get("M")}, {"N", cat.get("N")}};
  auto m = build_matrix(invs, sample_states(4, 14, 3));
  EXPECT_EQ(exact_rank(m).rank, 3u);
  EXPECT_THROW(build_matrix({{"H", cat.get("H")}, {"L", cat.get("L")}}, 4, 5, Arithmetic::Exact, 1),
               std::invalid_argument);
}

TEST(Span, FilterCheckFindsProductWitnessForH) {
  auto rep = filter_check(Catalog::builtin().get("H"), 5, 2);
  EXPECT_FALSE(rep.is_filter());
  EXPECT_EQ(rep.parts.size(), 7u);
  auto f = filter_check(Catalog::builtin().get("F4_1"), 5, 2);
  EXPECT_TRUE(f.is_filter());
}
