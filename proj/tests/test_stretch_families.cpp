#include <gtest/gtest.h>

#include "qinv/catalog.hpp"
#include "qinv/families.hpp"
#include "qinv/stretch.hpp"

using namespace qinv;

TEST(Stretch, RandomNetworksAreValid) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto net = random_eps_network(5, 8, s);
    EXPECT_TRUE(validate_network(net).valid);
  }
  EXPECT_THROW(random_eps_network(5, 7, 1), std::invalid_argument);
}

TEST(Stretch, FourQubitGeneratorDegrees) {
  // The four-qubit ring is free on generators of degree 2, 4, 4, 6.
  StretchOptions o;
  o.qubits = 4;
  o.max_degree = 10;
  o.measure_v_up_to = 10;
  auto counts = generator_counts(o);
  std::vector<std::size_t> got;
  for (const auto& g : counts) got.push_back(g.generators());
  EXPECT_EQ(got, (std::vector<std::size_t>{1, 2, 1, 0, 0}));
  for (const auto& g : counts) EXPECT_EQ(g.dim_v, g.dim_v_expected) << g.degree;
}

TEST(Families, FiveQubitDegreeFour) {
  auto states = sample_states(5, 15, 4);
  auto v4 = five_qubit_v4(Catalog::builtin(), states);
  EXPECT_EQ(exact_rank(v4.m).rank, 5u);
  auto dd = product_family(v4, v4, true);
  EXPECT_EQ(dd.size(), 15u);
  EXPECT_EQ(dd.invs[1].name, "D1*D2");
}

TEST(Families, OrbitNames) {
  auto orb = orbit_family("F5_1", Catalog::builtin().get("F5_1"));
  EXPECT_EQ(orb.size(), 60u);
  EXPECT_EQ(orb[0].name.rfind("F5_1@", 0), 0u);
}
