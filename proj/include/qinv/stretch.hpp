#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qinv/epsilon.hpp"

namespace qinv {

/// d factors on q qubits; every column is an independent uniformly random
/// perfect matching with random orientation. d must be even.
EpsNetwork random_eps_network(int q, int d, std::uint64_t seed);

struct GeneratorCount {
  int degree = 0;
  /// Float rank of the span of random networks; 0 when not measured.
  std::size_t dim_v = 0;
  /// Coefficient from the character formula.
  std::size_t dim_v_expected = 0;
  /// Float rank of the decomposable part sum_{a+b=d} V_a V_b.
  std::size_t dim_u = 0;
  /// dim_v (measured, else expected) - dim_u.
  std::size_t generators() const { return (dim_v ? dim_v : dim_v_expected) - dim_u; }
};

struct StretchOptions {
  int qubits = 5;
  int max_degree = 16;
  std::uint64_t seed = 1;
  /// Measure dim V_d by float rank for d <= measure_v_up_to; above it the
  /// character formula stands in (and nothing is built on those degrees).
  int measure_v_up_to = 16;
  double rel_tol = 1e-7;
  std::function<void(const std::string&)> log;
};

/// Counts of minimal generators per even degree, d = 2 .. max_degree.
std::vector<GeneratorCount> generator_counts(const StretchOptions& opt);

}  // namespace qinv
