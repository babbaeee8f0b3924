#include <gtest/gtest.h>

#include "qinv/comb.hpp"
#include "qinv/epsilon.hpp"
#include "qinv/symmetry.hpp"

using namespace qinv;

namespace {
GaussQ det2(const ExactState& p) { return p[0] * p[3] - p[1] * p[2]; }
}  // namespace

TEST(Comb, SigmaTwoVanishesOnOneQubit) {
  const Op y[] = {Op::S2};
  for (std::uint64_t s = 0; s < 100; ++s) {
    auto psi = random_exact_state(1, s);
    EXPECT_TRUE(bilinear_form<GaussQ>(y, psi, psi).is_zero());
  }
}

TEST(Comb, TwoQubitConcurrenceIsDeterminant) {
  // psi^T (s2 x s2) psi = -2 (a00 a11 - a01 a10), written out by hand.
  auto spec = parse_comb_spec("y y");
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto psi = random_exact_state(2, s);
    EXPECT_EQ(eval_comb(spec, psi), GaussQ(-2) * det2(psi));
  }
}

TEST(Comb, FloatMatchesExact) {
  auto spec = parse_comb_spec("m1 m2 y y | m1 y m3 y | y m2 m3 y");
  for (std::uint64_t s = 0; s < 5; ++s) {
    auto psi = random_exact_state(4, s);
    EXPECT_TRUE(approx_equal(eval_comb(spec, to_float(psi)), eval_comb(spec, psi).to_complex(), 1e-9));
  }
}

TEST(Comb, RejectsMalformedLabels) {
  EXPECT_THROW(parse_comb_spec("m1 y | y y"), std::invalid_argument);
  EXPECT_THROW(parse_comb_spec("m1 m1"), std::invalid_argument);
  EXPECT_THROW(parse_comb_spec("y q"), std::invalid_argument);
}

TEST(Comb, OddSigmaTwoRowFlagged) {
  auto d = validate_doubly_even(parse_comb_spec("y 0 0"));
  EXPECT_TRUE(d.forced_zero);
}

TEST(Epsilon, TwoFactorNetworkIsTwiceDeterminant) {
  // sum eps_ac eps_bd psi_ab psi_cd = 2 det, up to the orientation sign.
  auto net = parse_network("l1 l2\nu1 u2\n");
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto psi = random_exact_state(2, s);
    EXPECT_EQ(eval_network(net, psi), GaussQ(2) * det2(psi));
  }
}

TEST(Epsilon, InvalidPairingListsDefects) {
  auto net = parse_network("l1 l2\nl1 u2\n");
  EXPECT_FALSE(validate_network(net).valid);
  auto psi = random_exact_state(2, 1);
  EXPECT_THROW(eval_network(net, psi), std::invalid_argument);
}

TEST(Epsilon, NetworkSlInvariant) {
  auto net = parse_network("l1 l2 l3\nu1 l4 l5\nl6 u2 u3\nu6 u4 u5\n");
  ASSERT_TRUE(validate_network(net).valid);
  for (std::uint64_t s = 0; s < 5; ++s) {
    auto psi = random_exact_state(3, s);
    std::vector<Mat2<GaussQ>> g = {random_sl2_exact(s + 10), random_sl2_exact(s + 20), random_sl2_exact(s + 30)};
    EXPECT_EQ(eval_network(net, apply_sl_local<GaussQ>(psi, g)), eval_network(net, psi));
  }
}

TEST(Symmetry, GroupLawAndDuality) {
  auto perms = all_permutations(4);
  ASSERT_EQ(perms.size(), 24u);
  auto spec = parse_comb_spec("m1 m2 y y | m1 y m3 y | y m2 m3 y");
  for (int t = 0; t < 20; ++t) {
    const auto& pi = perms[(7 * t + 3) % 24];
    const auto& rho = perms[(5 * t + 11) % 24];
    auto psi = random_exact_state(4, t);
    EXPECT_EQ(permute_state(pi.compose(rho), psi), permute_state(pi, permute_state(rho, psi)));
    EXPECT_EQ(eval_comb(permute_spec(pi, spec), psi), eval_comb(spec, permute_state(pi.inverse(), psi)));
  }
}

TEST(Symmetry, CycleParsing) {
  auto p = QubitPermutation::parse_cycles("(1 2)(3 4 5)", 5);
  EXPECT_EQ(p.image(), (std::vector<int>{1, 0, 3, 4, 2}));
  EXPECT_EQ(p.to_cycles(), "(1 2)(3 4 5)");
  EXPECT_EQ(p.sign(), -1);
  EXPECT_THROW(QubitPermutation::parse_cycles("(1 1)", 3), std::invalid_argument);
}

TEST(Operators, SwapIsHalfPauliSum) {
  // Independent oracle: build the swap matrix by hand.
  CopyOperator swap(16, GaussQ(0));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) swap[(2 * a + b) * 4 + (2 * b + a)] = GaussQ(1);
  EXPECT_EQ(copy_permutation(2, {1, 0}), swap);
  for (const auto& id : copy_permutation_identities()) EXPECT_TRUE(id.holds()) << id.name;
}
