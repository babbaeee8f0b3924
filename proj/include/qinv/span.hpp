#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qinv/invariant.hpp"
#include "qinv/scalar.hpp"
#include "qinv/state.hpp"

namespace qinv {

struct NamedInvariant {
  std::string name;
  Invariant inv;
};

/// Rows are invariants, columns sample states. Exactly one of exact/fl is
/// filled, according to mode.
struct EvaluationMatrix {
  int q = 0;
  Arithmetic mode = Arithmetic::Exact;
  std::vector<std::string> names;
  std::vector<std::vector<GaussQ>> exact;
  std::vector<std::vector<Complex>> fl;

  std::size_t rows() const { return names.size(); }
  std::size_t cols() const;
  void append(const EvaluationMatrix& other);
  void append_row(std::string name, std::vector<GaussQ> row);
  void append_row(std::string name, std::vector<Complex> row);
  EvaluationMatrix select(const std::vector<std::size_t>& rows) const;
};

/// random_exact_state(q, seed + k) for k < n.
std::vector<ExactState> sample_states(int q, std::size_t n, std::uint64_t seed);
/// random_float_state(q, seed + k) scaled to unit norm.
std::vector<FloatState> sample_float_states(int q, std::size_t n, std::uint64_t seed);

/// Deterministic given (invs, n_states, mode, seed). When stratified, all
/// rows must share one degree (std::invalid_argument otherwise).
EvaluationMatrix build_matrix(const std::vector<NamedInvariant>& invs, int q, std::size_t n_states,
                              Arithmetic mode, std::uint64_t seed, bool stratified = true);
EvaluationMatrix build_matrix(const std::vector<NamedInvariant>& invs, const std::vector<ExactState>& states);
EvaluationMatrix build_matrix(const std::vector<NamedInvariant>& invs, const std::vector<FloatState>& states);

/// Entrywise products a_i * b_j for every pair (i <= j when a and b are the
/// same matrix and symmetric is set).
EvaluationMatrix product_rows(const EvaluationMatrix& a, const EvaluationMatrix& b, bool symmetric = false);

struct RankReport {
  std::size_t rank = 0;
  /// Original indices of the rows that form a basis.
  std::vector<std::size_t> basis_rows;
  std::string method;
};

/// Fraction-free (Bareiss) elimination over Z[i] after clearing denominators.
RankReport exact_rank(const EvaluationMatrix& m);
/// Rank over F_p of the image of Z[i] under i -> sqrt(-1) mod p. Never
/// exceeds the exact rank.
RankReport modular_rank(const EvaluationMatrix& m, std::size_t prime_index = 0);
/// Singular values below rel_tol * sigma_max are treated as zero.
RankReport float_rank(const EvaluationMatrix& m, double rel_tol = 1e-7);
RankReport rank(const EvaluationMatrix& m);

/// Primes p = 1 mod 4 below 2^62 with a square root of -1.
struct ModPrime {
  std::uint64_t p;
  std::uint64_t sqrt_m1;
};
const std::vector<ModPrime>& mod_primes();

/// Incremental row echelon form over F_p; add() keeps a row only when it
/// raises the rank.
class ModularSpan {
 public:
  explicit ModularSpan(std::size_t cols, std::size_t prime_index = 0);
  bool add(const std::vector<GaussQ>& row);
  /// Would the row raise the rank? Does not modify the span.
  bool independent(const std::vector<GaussQ>& row) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

 private:
  std::vector<std::uint64_t> reduce(const std::vector<GaussQ>& row, std::size_t& pivot) const;
  std::size_t cols_;
  ModPrime prime_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::size_t> pivots_;
};

/// dim a + dim b - dim(a u b); matrices must share their columns.
std::size_t intersection_dim(const EvaluationMatrix& a, const EvaluationMatrix& b);

struct RelationReport {
  bool member = false;
  /// target = sum coeffs[k] * basis row k, when member (basis rows independent).
  std::vector<GaussQ> coeffs;
  std::size_t basis_rank = 0;
  std::size_t rank_with_target = 0;
  std::string describe(const std::vector<std::string>& names) const;
};

/// Requires cols >= basis rows + 10 (std::invalid_argument otherwise).
RelationReport find_relation(const std::vector<GaussQ>& target, const EvaluationMatrix& basis);

struct BipartitionResult {
  /// 1-indexed sites of the block holding qubit 1, and of its complement.
  std::vector<int> block;
  std::vector<int> rest;
  bool nonzero = false;
  GaussQ witness;
  std::string label() const;
};

struct BipartitionReport {
  std::vector<BipartitionResult> parts;
  bool is_filter() const;
  std::vector<std::string> nonzero_labels() const;
};

/// Every split of the q sites into two nonempty blocks, trials random exact
/// product states each.
BipartitionReport filter_check(const Invariant& inv, int trials, std::uint64_t seed = 1);

struct GreedyResult {
  std::vector<std::size_t> chosen;  // orbit indices taken
  std::size_t start_rank = 0;
  std::size_t final_rank = 0;
  bool reached = false;
};

/// Adds orbit rows (evaluated on the span's states) in order while they raise
/// the rank, stopping at target_dim. The rows of chosen elements are appended
/// to added when it is non-null.
GreedyResult greedy_basis_from_orbit(ModularSpan& span, const std::vector<InvariantOrbitElement>& orbit,
                                     const std::vector<ExactState>& states, std::size_t target_dim,
                                     EvaluationMatrix* added = nullptr);

/// Same over precomputed candidate rows, taken in order.
GreedyResult greedy_extend(ModularSpan& span, const EvaluationMatrix& candidates, std::size_t target_dim,
                           EvaluationMatrix* added = nullptr);

struct SymmetricDims {
  std::size_t sym = 0;
  std::size_t asym = 0;
};

/// Ranks of the symmetrized and antisymmetrized images of the generators
/// (which should generate the S_q-module in question) on the given states.
SymmetricDims symmetric_component_dims(const std::vector<NamedInvariant>& generators,
                                       const std::vector<ExactState>& states);

}  // namespace qinv
