#include <gtest/gtest.h>
#include <sstream>

#include <random>

#include "qinv/state.hpp"

using namespace qinv;

TEST(GaussQ, FieldOpsAgreeWithComplex) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> u(-20, 20);
  for (int t = 0; t < 200; ++t) {
    GaussQ a(Rational(u(rng), 1 + (u(rng) + 20)), Rational(u(rng), 3));
    GaussQ b(Rational(u(rng), 7), Rational(1 + (u(rng) + 20), 5));
    Complex ca = a.to_complex(), cb = b.to_complex();
    EXPECT_TRUE(approx_equal((a * b).to_complex(), ca * cb));
    EXPECT_TRUE(approx_equal((a + b).to_complex(), ca + cb));
    EXPECT_TRUE(approx_equal((a / b).to_complex(), ca / cb));
    EXPECT_EQ(a * b / b, a);
  }
}

TEST(GaussQ, ParseRoundTrip) {
  for (const char* s : {"0", "3/2", "-1/5*i", "1/2+3*i", "-7-2/3*i", "i"}) {
    GaussQ z = parse_gauss(s);
    EXPECT_EQ(parse_gauss(z.to_string()), z) << s;
  }
  EXPECT_THROW(parse_gauss("1/0"), std::exception);
  EXPECT_THROW(parse_gauss("abc"), std::exception);
  EXPECT_THROW(GaussQ(1) / GaussQ(0), std::domain_error);
}

TEST(State, RandomSl2HasUnitDeterminant) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    auto m = random_sl2_exact(s);
    EXPECT_EQ(m[0] * m[3] - m[1] * m[2], GaussQ(1));
  }
}

TEST(State, SlLocalPreservesTwoQubitDeterminant) {
  // a00 a11 - a01 a10 is the SL x SL invariant of two qubits.
  auto det = [](const ExactState& p) { return p[0] * p[3] - p[1] * p[2]; };
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto psi = random_exact_state(2, s);
    std::vector<Mat2<GaussQ>> g = {random_sl2_exact(100 + s), random_sl2_exact(200 + s)};
    EXPECT_EQ(det(apply_sl_local<GaussQ>(psi, g)), det(psi));
  }
}

TEST(State, RejectsNonUnimodular) {
  auto psi = random_exact_state(1, 3);
  std::vector<Mat2<GaussQ>> g = {Mat2<GaussQ>{GaussQ(2), GaussQ(0), GaussQ(0), GaussQ(1)}};
  EXPECT_THROW(apply_sl_local<GaussQ>(psi, g), std::invalid_argument);
}

TEST(State, ProductStateAmplitudes) {
  auto a = random_exact_state(1, 1), b = random_exact_state(2, 2);
  auto p = product_state<GaussQ>(3, {{1}, {0, 2}}, {a, b});
  for (std::size_t n = 0; n < 8; ++n) {
    std::size_t i0 = n & 1, i1 = (n >> 1) & 1, i2 = (n >> 2) & 1;
    EXPECT_EQ(p[n], a[i1] * b[i0 + 2 * i2]);
  }
}

TEST(State, TextRoundTrip) {
  auto psi = random_exact_state(3, 9).scaled(GaussQ(Rational(1, 3)));
  std::stringstream ss;
  write_state(ss, psi);
  EXPECT_EQ(read_exact_state(ss), psi);
  std::stringstream bad("qubits=2\n7 1 0\n");
  EXPECT_THROW(read_exact_state(bad), std::exception);
}
