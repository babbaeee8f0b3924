#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qinv/comb.hpp"
#include "qinv/epsilon.hpp"
#include "qinv/state.hpp"

namespace qinv {

/// Bijection on qubit sites 0..q-1; site j is sent to image(j).
class QubitPermutation {
 public:
  QubitPermutation() = default;
  explicit QubitPermutation(std::vector<int> image);
  static QubitPermutation identity(int q);
  /// 1-indexed cycle notation, e.g. "(1 2)(3 4 5)"; "()" is the identity.
  static QubitPermutation parse_cycles(std::string_view text, int q);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int j) const { return image_[j]; }
  const std::vector<int>& image() const { return image_; }
  int sign() const;
  QubitPermutation inverse() const;
  /// (this * rho)(j) = this(rho(j)).
  QubitPermutation compose(const QubitPermutation& rho) const;
  std::string to_cycles() const;

  friend bool operator==(const QubitPermutation&, const QubitPermutation&) = default;

 private:
  std::vector<int> image_;
};

/// All q! permutations, images in lexicographic order.
std::vector<QubitPermutation> all_permutations(int q);

/// Qubit j of psi becomes qubit pi(j) of the result.
template <class T>
BasicState<T> permute_state(const QubitPermutation& pi, const BasicState<T>& psi);
template <class T>
BasicState<T> permute_state_by_image(const std::vector<int>& image, const BasicState<T>& psi);

/// Column j of the input becomes column pi(j). Evaluating the result on psi
/// equals evaluating the input on permute_state(pi^-1, psi).
CombSpec permute_spec(const QubitPermutation& pi, const CombSpec& spec);
EpsNetwork permute_network(const QubitPermutation& pi, const EpsNetwork& net);

enum class SymMode { Sym, Asym };

/// (1/q!) sum_pi [sign pi] f(permute_state(pi, psi)). f(pi psi) equals the
/// permuted invariant pi^-1 . f evaluated on psi, so the two conventions give
/// the same average.
template <class T, class F>
T symmetrized_value(F&& f, const BasicState<T>& psi, SymMode mode) {
  const int q = psi.qubits();
  T acc = from_rational<T>(0);
  std::size_t count = 0;
  for (const auto& pi : all_permutations(q)) {
    T v = f(permute_state(pi, psi));
    if (mode == SymMode::Asym && pi.sign() < 0) v = -v;
    acc += v;
    ++count;
  }
  return acc * from_rational<T>(Rational(1, static_cast<long>(count)));
}

/// Distinct images of a spec under S_q, deduplicated by canonical form, in
/// lexicographic permutation order. Stops after max elements (0 = no limit).
struct CombOrbitElement {
  QubitPermutation perm;
  CombSpec spec;
};
std::vector<CombOrbitElement> comb_orbit(const CombSpec& spec, std::size_t max = 0);

struct NetworkOrbitElement {
  QubitPermutation perm;
  EpsNetwork net;
};
std::vector<NetworkOrbitElement> network_orbit(const EpsNetwork& net, std::size_t max = 0);

}  // namespace qinv
