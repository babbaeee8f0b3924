#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qinv/comb.hpp"
#include "qinv/scalar.hpp"
#include "qinv/state.hpp"

namespace qinv {

/// One index slot of a coefficient tensor in an epsilon network.
struct EpsSlot {
  int label = 0;
  bool upper = false;
  friend bool operator==(const EpsSlot&, const EpsSlot&) = default;
};

/// d copies of the coefficient tensor, q slots each; every label is shared by
/// two slots of one column, one lower and one upper, and stands for a
/// contraction with eps (lower end on the left index of eps).
class EpsNetwork {
 public:
  /// Checks the shape only; use validate_network for the pairing.
  EpsNetwork(int q, int d, std::vector<EpsSlot> slots, GaussQ prefactor = GaussQ(1));

  int qubits() const { return q_; }
  int factors() const { return d_; }
  int degree() const { return d_; }
  const EpsSlot& at(int factor, int col) const { return slots_[factor * q_ + col]; }
  const std::vector<EpsSlot>& slots() const { return slots_; }
  const GaussQ& prefactor() const { return prefactor_; }
  EpsNetwork with_prefactor(GaussQ p) const;
  EpsNetwork relabeled(int factor, int col, int label) const;

  /// One factor per line, "l<k>"/"u<k>" tokens; a leading line
  /// "prefactor=<scalar>" when the prefactor is not 1.
  std::string to_string() const;
  /// Factor order and labels renumbered by first appearance, factors sorted.
  EpsNetwork canonical() const;

  friend bool operator==(const EpsNetwork& a, const EpsNetwork& b) {
    return a.q_ == b.q_ && a.d_ == b.d_ && a.slots_ == b.slots_ && a.prefactor_ == b.prefactor_;
  }

 private:
  int q_;
  int d_;
  std::vector<EpsSlot> slots_;
  GaussQ prefactor_;
};

/// Parses the line format of EpsNetwork::to_string; '#' starts a comment.
EpsNetwork parse_network(std::string_view text);

struct NetworkDefect {
  int label;
  /// (factor, column) of every occurrence, 0-based.
  std::vector<std::pair<int, int>> cells;
  int lower = 0;
  int upper = 0;
  bool spans_columns = false;
  std::string describe() const;
};

struct NetworkRelabel {
  int factor;
  int column;
  int from;
  int to;
  std::string describe() const;
};

struct NetworkDiagnostic {
  bool valid = true;
  std::vector<NetworkDefect> defects;
  /// Single-slot relabelings that each repair two defects of one column.
  std::vector<NetworkRelabel> suggestions;
  std::string report() const;
};

NetworkDiagnostic validate_network(const EpsNetwork& net);

/// Full contraction; throws std::invalid_argument listing every defect when
/// the pairing is invalid.
template <class T>
T eval_network(const EpsNetwork& net, const BasicState<T>& psi);

/// Symmetric multi-form of multidegree (k_1..k_q). coeff(w) is the component
/// of the symmetric tensor with w_j of the k_j qubit-j indices equal to 1.
template <class T>
class BasicCovariant {
 public:
  BasicCovariant() = default;
  explicit BasicCovariant(std::vector<int> multidegree);

  int qubits() const { return static_cast<int>(k_.size()); }
  const std::vector<int>& multidegree() const { return k_; }
  std::size_t size() const { return coeffs_.size(); }
  bool is_scalar() const;
  std::size_t index(const std::vector<int>& w) const;
  const T& operator[](std::size_t n) const { return coeffs_[n]; }
  T& operator[](std::size_t n) { return coeffs_[n]; }
  const std::vector<T>& coeffs() const { return coeffs_; }

  /// f(1,..,1): every surviving index contracted with (1,1).
  T at_ones() const;

 private:
  std::vector<int> k_;
  std::vector<T> coeffs_;
};

using Covariant = BasicCovariant<GaussQ>;
using FloatCovariant = BasicCovariant<Complex>;

template <class T>
BasicCovariant<T> ground_form(const BasicState<T>& psi);

/// (P,Q)^e: e_j eps-contractions between P and Q on qubit j, then
/// symmetrization of the surviving indices. No factorial normalization.
template <class T>
BasicCovariant<T> transvectant(const BasicCovariant<T>& p, const BasicCovariant<T>& q,
                               const std::vector<int>& e);

struct OmegaStep {
  std::string name;
  std::string left;
  std::string right;
  std::vector<int> exponents;
};

struct OmegaRecipe {
  int qubits = 0;
  std::vector<OmegaStep> steps;
  /// Multidegree of every step result, checked on construction.
  std::vector<std::vector<int>> multidegrees;
  /// Number of ground forms consumed by the final step.
  int degree = 0;
};

/// Lines "NAME := (A, B)^e1e2..eq"; "f" is the ground form. Throws with the
/// step index on a malformed or inconsistent step, or an empty recipe.
OmegaRecipe parse_recipe(std::string_view text);

/// Runs every step and returns the last one, which must be a scalar.
template <class T>
T run_recipe(const OmegaRecipe& r, const BasicState<T>& psi);
template <class T>
BasicCovariant<T> run_recipe_covariant(const OmegaRecipe& r, const BasicState<T>& psi);

/// Rewrites a comb built from sigma_2 and mu-labels into a sum of epsilon
/// networks on 2m tensor factors (two per copy).
std::vector<EpsNetwork> comb_to_networks(const CombSpec& spec);

/// Dense operator on c copies of one qubit, copy 1 most significant.
using CopyOperator = std::vector<GaussQ>;

/// sigma_mu(x)sigma^mu summed with g, acting on copies (a, b) of c copies.
CopyOperator copy_comb(int copies, int a, int b);
CopyOperator copy_product(int copies, const std::vector<Op>& ops);
/// Permutation operator moving copy k to position perm[k].
CopyOperator copy_permutation(int copies, const std::vector<int>& perm);
CopyOperator matmul(const CopyOperator& a, const CopyOperator& b);
CopyOperator lincomb(const std::vector<std::pair<GaussQ, CopyOperator>>& terms);

struct OperatorIdentity {
  std::string name;
  CopyOperator lhs;
  CopyOperator rhs;
  bool holds() const { return lhs == rhs; }
};

/// The copy-permutation identities between sigma_2 products and combs on two
/// and three copies.
std::vector<OperatorIdentity> copy_permutation_identities();

}  // namespace qinv
