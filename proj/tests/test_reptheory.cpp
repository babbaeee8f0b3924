#include <gtest/gtest.h>
#include <numeric>

#include "qinv/reptheory.hpp"

using namespace qinv;

namespace {
// Hook length formula.
Integer hook_dim(const Partition& l) {
  Integer num = factorial(std::accumulate(l.begin(), l.end(), 0)), den = 1;
  for (std::size_t i = 0; i < l.size(); ++i)
    for (int j = 0; j < l[i]; ++j) {
      int arm = l[i] - j - 1, leg = 0;
      for (std::size_t k = i + 1; k < l.size() && l[k] > j; ++k) ++leg;
      den *= arm + leg + 1;
    }
  return num / den;
}

// Power-series coefficients of 1 / prod (1 - t^e).
std::vector<long> series(const std::vector<int>& exps, int n) {
  std::vector<long> c(n + 1, 0);
  c[0] = 1;
  for (int e : exps)
    for (int k = e; k <= n; ++k) c[k] += c[k - e];
  return c;
}
}  // namespace

TEST(RepTheory, PartitionCounts) {
  const std::size_t p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int d = 0; d <= 10; ++d) EXPECT_EQ(partitions(d).size(), p[d]);
  EXPECT_EQ(partitions(4).front(), (Partition{4}));
  EXPECT_EQ(parse_partition("1^5"), (Partition{1, 1, 1, 1, 1}));
  EXPECT_EQ(parse_partition("[4,4]"), (Partition{4, 4}));
}

TEST(RepTheory, DimensionsAreHookLengths) {
  for (int d = 1; d <= 9; ++d)
    for (const auto& l : partitions(d)) EXPECT_EQ(mn_character(l, Partition(d, 1)), hook_dim(l));
}

TEST(RepTheory, ClassSizesSumToFactorial) {
  for (int d = 1; d <= 10; ++d) {
    Integer s = 0;
    for (const auto& t : partitions(d)) s += class_size(t);
    EXPECT_EQ(s, factorial(d));
  }
}

TEST(RepTheory, RowOrthogonality) {
  for (int d = 1; d <= 8; ++d) {
    auto ps = partitions(d);
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = 0; j < ps.size(); ++j)
        EXPECT_EQ(inner_product(irreducible_character(ps[i]), irreducible_character(ps[j])), i == j ? 1 : 0);
  }
}

TEST(RepTheory, SymAndExtPowerDimensions) {
  auto chi = irreducible_character({3, 1});  // dim 3
  EXPECT_EQ(sym_power_char(chi, 2).at({1, 1, 1, 1}), 6);
  EXPECT_EQ(ext_power_char(chi, 2).at({1, 1, 1, 1}), 3);
  EXPECT_EQ(ext_power_char(chi, 3).at({1, 1, 1, 1}), 1);
  EXPECT_EQ(ext_power_char(chi, 4).at({1, 1, 1, 1}), 0);
  // Lambda^3 of the standard representation is the sign representation.
  EXPECT_EQ(inner_product(ext_power_char(chi, 3), irreducible_character({1, 1, 1, 1})), 1);
}

TEST(RepTheory, FourQubitHilbertSeries) {
  // Polynomial rings with generators of degrees 2,4,4,6 and 2,6,8,12.
  auto sl = series({2, 4, 4, 6}, 24), sls = series({2, 6, 8, 12}, 24);
  for (int d = 0; d <= 24; d += 2) {
    EXPECT_EQ(dim_sl_invariants(2, 4, d), sl[d]) << d;
    EXPECT_EQ(dim_slstar(2, 4, d), sls[d]) << d;
  }
}

TEST(RepTheory, ThreeQubitHilbertSeries) {
  // One generator, the hyperdeterminant, of degree 4.
  for (int d = 0; d <= 20; ++d) EXPECT_EQ(dim_sl_invariants(2, 3, d), d % 4 == 0 ? 1 : 0) << d;
}

TEST(RepTheory, SlStarDegreeFourCountsOrbitsOfS3Module) {
  // Degree 4: S_3 invariants of Sym^q of its 2-dim irreducible, i.e. the
  // number of (a, b) with 2a + 3b = q.
  for (int q = 2; q <= 9; ++q) {
    long n = 0;
    for (int b = 0; 3 * b <= q; ++b) n += (q - 3 * b) % 2 == 0;
    EXPECT_EQ(dim_slstar(2, q, 4), n) << q;
  }
}

TEST(RepTheory, DecompositionTotalsMatchDimension) {
  for (int k : {4, 5})
    for (int d = 2; d <= 10; d += 2) {
      auto mult = decompose_invariant_space(k, d);
      Integer total = 0;
      auto ps = partitions(k);
      for (std::size_t i = 0; i < ps.size(); ++i) total += mult[i] * hook_dim(ps[i]);
      EXPECT_EQ(total, dim_sl_invariants(2, k, d));
      EXPECT_EQ(mult[0], dim_slstar(2, k, d));
    }
}

TEST(RepTheory, ReferenceOrderForS8) {
  auto o = s8_reference_order();
  ASSERT_EQ(o.size(), 22u);
  EXPECT_EQ(o.front(), Partition(8, 1));
  EXPECT_EQ(o.back(), (Partition{8}));
}
