#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qinv/scalar.hpp"

namespace qinv {

/// Single-qubit constant operators. Eps is the lower-index spinor metric
/// i*sigma_2 (eps_01 = 1, eps_10 = -1); J is the all-ones matrix.
enum class Op : std::uint8_t { S0 = 0, S1 = 1, S2 = 2, S3 = 3, J = 4, Eps = 5 };

/// tau_1 = sigma_0, tau_2 = sigma_1, tau_3 = sigma_3 (k in 1..3).
Op tau(int k);

char op_symbol(Op op);

/// Row-major 2x2 matrix [a b; c d].
template <class T>
using Mat2 = std::array<T, 4>;

template <class T>
Mat2<T> op_matrix(Op op);

/// Pseudo-metric used for mu-contractions; g_2 = 0.
inline constexpr std::array<int, 4> kMetric = {-1, 1, 0, 1};
/// Diagonal of M_{mu nu} times 2, i.e. M = diag(1,-1,1,-1)/2.
inline constexpr std::array<int, 4> kHalfM = {1, -1, 1, -1};

/// Pure state of q qubits with 2^q amplitudes. Ket |i_1 ... i_q> is stored at
/// index i_1 + 2 i_2 + ... + 2^{q-1} i_q. States are never normalized.
template <class T>
class BasicState {
 public:
  static constexpr int kMaxQubits = 8;

  BasicState() = default;
  BasicState(int q, std::vector<T> amps);

  static BasicState zero(int q) { return BasicState(q, std::vector<T>(std::size_t{1} << q)); }

  int qubits() const { return q_; }
  std::size_t dim() const { return amps_.size(); }
  const T& operator[](std::size_t n) const { return amps_[n]; }
  T& operator[](std::size_t n) { return amps_[n]; }
  std::span<const T> amplitudes() const { return amps_; }

  BasicState scaled(const T& c) const;

  friend bool operator==(const BasicState& a, const BasicState& b) {
    return a.q_ == b.q_ && a.amps_ == b.amps_;
  }

 private:
  int q_ = 0;
  std::vector<T> amps_;
};

using ExactState = BasicState<GaussQ>;
using FloatState = BasicState<Complex>;

enum class Arithmetic { Exact, Float };

/// Builds a state from (ket-index, amplitude) terms; duplicates are summed.
/// Throws std::out_of_range for an index outside [0, 2^q).
template <class T>
BasicState<T> state_from_kets(int q, const std::vector<std::pair<std::uint64_t, T>>& terms);

/// Sum over a, b of prod_j op_j^{a_j b_j} phi_a psi_b. phi is not conjugated.
template <class T>
T bilinear_form(std::span<const Op> ops, const BasicState<T>& phi, const BasicState<T>& psi);

/// (S_1 x ... x S_q) psi, site j acting on qubit j (bit j of the index).
/// Every matrix must have determinant 1 (exactly, or within 1e-12 for floats).
template <class T>
BasicState<T> apply_sl_local(const BasicState<T>& psi, std::span<const Mat2<T>> mats);

/// Gaussian-integer amplitudes with real and imaginary parts uniform in [-9, 9].
ExactState random_exact_state(int q, std::uint64_t seed);
/// Standard complex Gaussian amplitudes.
FloatState random_float_state(int q, std::uint64_t seed);

/// Random exact SL(2) matrix: a product of two integer shears and a diagonal,
/// entries small Gaussian integers/rationals.
Mat2<GaussQ> random_sl2_exact(std::uint64_t seed);

FloatState to_float(const ExactState& psi);

/// Tensor product of block states. blocks[b] lists the (0-based) qubits of
/// block b in increasing order; factors[b] is a state on those qubits.
template <class T>
BasicState<T> product_state(int q, const std::vector<std::vector<int>>& blocks,
                            const std::vector<BasicState<T>>& factors);

/// Text state file: line 1 "qubits=<q>", then "<index> <re> <im>" lines.
/// Exact files use rationals "n/d"; float files decimal numbers.
ExactState read_exact_state(std::istream& in);
FloatState read_float_state(std::istream& in);
void write_state(std::ostream& out, const ExactState& psi);
void write_state(std::ostream& out, const FloatState& psi);

}  // namespace qinv
