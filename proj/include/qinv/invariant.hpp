#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "qinv/comb.hpp"
#include "qinv/epsilon.hpp"
#include "qinv/scalar.hpp"
#include "qinv/state.hpp"
#include "qinv/symmetry.hpp"

namespace qinv {

/// Immutable expression tree over the evaluation engines. Leaves are combs,
/// epsilon networks, Omega recipes and 4x4 amplitude determinants; inner
/// nodes are linear combinations, products, powers, qubit-permuted images
/// and (anti)symmetrizations. Every expression is homogeneous.
class Invariant {
 public:
  enum class Kind { Comb, Network, Recipe, Det, Sum, Product, Power, Permuted, Symmetrized };

  static Invariant comb(CombSpec spec);
  static Invariant network(EpsNetwork net);
  static Invariant recipe(OmegaRecipe r);
  /// det of the matrix whose (r, c) entry is the amplitude a_{idx[4r+c]}.
  static Invariant det4(std::array<int, 16> idx);
  static Invariant sum(std::vector<std::pair<GaussQ, Invariant>> terms);
  static Invariant product(std::vector<Invariant> factors);
  static Invariant power(Invariant base, int k);
  /// Value on psi equals base on permute_state(pi^-1, psi). Comb and network
  /// leaves are permuted directly.
  static Invariant permuted(const QubitPermutation& pi, Invariant base);
  static Invariant symmetrized(Invariant base, SymMode mode);

  Invariant scaled(const GaussQ& c) const;

  Kind kind() const;
  int qubits() const;
  int degree() const;
  std::string to_string() const;

  /// Leaf accessors; throw std::logic_error on the wrong kind.
  const CombSpec& comb_spec() const;
  const EpsNetwork& eps_network() const;

  template <class T>
  T eval(const BasicState<T>& psi) const;

  struct Node;

 private:
  explicit Invariant(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

Invariant operator+(const Invariant& a, const Invariant& b);
Invariant operator-(const Invariant& a, const Invariant& b);
Invariant operator*(const Invariant& a, const Invariant& b);

/// Determinant of a 4x4 matrix of scalars (cofactor expansion, exact).
template <class T>
T det4x4(const std::array<T, 16>& m);

}  // namespace qinv

namespace qinv {

struct InvariantOrbitElement {
  QubitPermutation perm;
  Invariant inv;
};

/// Images under S_q in lexicographic permutation order. Comb and network leaves
/// are deduplicated by canonical form; other expressions keep all q! images.
std::vector<InvariantOrbitElement> invariant_orbit(const Invariant& inv, std::size_t max = 0);

}  // namespace qinv
