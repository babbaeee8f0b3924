#pragma once

#include <string>
#include <vector>

#include "qinv/catalog.hpp"
#include "qinv/span.hpp"

namespace qinv {

/// Invariants together with their rows on a shared state sample.
struct Family {
  std::vector<NamedInvariant> invs;
  EvaluationMatrix m;

  std::size_t size() const { return invs.size(); }
  void add(NamedInvariant ni, std::vector<GaussQ> row);
  void add(NamedInvariant ni, std::vector<Complex> row);
  void append(const Family& other);
};

/// Orbit images named "<name>@<cycles>".
std::vector<NamedInvariant> orbit_family(const std::string& name, const Invariant& inv);

Family evaluate_family(const std::vector<NamedInvariant>& invs, const std::vector<ExactState>& states);
Family evaluate_family(const std::vector<NamedInvariant>& invs, const std::vector<FloatState>& states);

/// Entrywise products a_i * b_j (i <= j when symmetric), invariants multiplied
/// symbolically.
Family product_family(const Family& a, const Family& b, bool symmetric = false);

/// Appends to `into` the candidates that raise the rank of span, in order,
/// until target_dim. Candidates are evaluated lazily on states.
std::size_t greedy_take(ModularSpan& span, const std::vector<NamedInvariant>& candidates,
                        const std::vector<ExactState>& states, std::size_t target_dim, Family& into);
/// Same with precomputed rows.
std::size_t greedy_take(ModularSpan& span, const Family& candidates, std::size_t target_dim, Family& into);

/// Five-qubit bases built on an exact sample (columns >= dimension + 10).
Family five_qubit_v4(const Catalog& cat, const std::vector<ExactState>& states);
/// {D_i D_j} then F5_1 images up to 35, then F5_6.
Family five_qubit_v8(const Catalog& cat, const std::vector<ExactState>& states);
/// G10_tilde images (14) then P*F.
Family five_qubit_v10(const Catalog& cat, const std::vector<ExactState>& states);

struct Degree12Build {
  /// D_i * V8 rows and F^2: spans U12.
  Family u12_candidates;
  Family basis;
  std::size_t u12 = 0;
  std::size_t after_f4 = 0;
  std::size_t after_g2 = 0;
  std::size_t after_f2 = 0;
  std::size_t total = 0;
};
/// U12 = span{D_i * V8, F^2}, then F5_12_4, G5_12_2f, F5_12_2 images, then
/// F5_12_1 and G5_12_6f.
Degree12Build five_qubit_v12(const Catalog& cat, const std::vector<ExactState>& states, const Family& v8);

}  // namespace qinv
