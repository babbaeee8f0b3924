#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qinv/scalar.hpp"
#include "qinv/state.hpp"

namespace qinv {

/// One cell of a comb grid: a fixed operator (sigma_0..3 or J) or one end of
/// a mu-contraction identified by its label.
struct CombToken {
  enum class Kind : std::uint8_t { Fixed, Contract };
  Kind kind = Kind::Fixed;
  Op op = Op::S2;
  int label = 0;

  static CombToken fixed(Op op) { return {Kind::Fixed, op, 0}; }
  static CombToken contract(int label) { return {Kind::Contract, Op::S0, label}; }
  bool is_label() const { return kind == Kind::Contract; }
  friend bool operator==(const CombToken&, const CombToken&) = default;
};

/// A multi-copy antilinear expectation value ((row_1 . row_2 . ... . row_m)).
/// Every label occurs exactly twice, in one column and two distinct rows; two
/// labels sharing a column occupy four distinct rows.
class CombSpec {
 public:
  /// Validates; throws std::invalid_argument naming the offending cell.
  CombSpec(int q, int m, std::vector<CombToken> grid, Rational prefactor = 1);

  int qubits() const { return q_; }
  int copies() const { return m_; }
  int degree() const { return 2 * m_; }
  const CombToken& at(int row, int col) const { return grid_[row * q_ + col]; }
  const std::vector<CombToken>& grid() const { return grid_; }
  const Rational& prefactor() const { return prefactor_; }
  CombSpec with_prefactor(Rational p) const;

  struct Label {
    int id;
    int column;
    int row_a;
    int row_b;
  };
  /// Labels in order of first appearance (row-major).
  const std::vector<Label>& labels() const { return labels_; }

  std::string to_string() const;
  /// Relabels in first-appearance order and picks the lexicographically
  /// smallest row ordering.
  CombSpec canonical() const;

  friend bool operator==(const CombSpec& a, const CombSpec& b) {
    return a.q_ == b.q_ && a.m_ == b.m_ && a.grid_ == b.grid_ && a.prefactor_ == b.prefactor_;
  }

 private:
  int q_;
  int m_;
  std::vector<CombToken> grid_;
  Rational prefactor_;
  std::vector<Label> labels_;
};

/// DSL: rows separated by '|', cells by whitespace; cells 0 1 2 3 (Pauli),
/// y (sigma_2), J (all-ones), m<k> (contraction label k); optional leading
/// "<rational>*" prefactor.
CombSpec parse_comb_spec(std::string_view text);

/// Pairwise contraction schedule over per-copy tensors. Each copy tensor is
/// indexed by the copy's labels over mu in {0,1,3} (g_2 = 0 drops mu = 2).
struct ContractionPlan {
  struct Step {
    int left;
    int right;
    std::vector<int> result_labels;
    std::uint64_t cost;
  };
  /// copy_labels[k] are the label ids incident on copy k, in tensor axis order.
  std::vector<std::vector<int>> copy_labels;
  /// Tensor ids: 0..m-1 are copy tensors, m+s is the result of step s.
  std::vector<Step> steps;
  std::uint64_t precompute_cost = 0;
  std::uint64_t contraction_cost = 0;

  std::uint64_t cost() const { return precompute_cost + contraction_cost; }
  std::string report() const;
};

/// Greedy smallest-intermediate-first ordering.
ContractionPlan plan_contraction(const CombSpec& spec);

/// prefactor * sum_mu prod g_mu prod_k <row_k(mu)>(psi, psi).
template <class T>
T eval_comb(const CombSpec& spec, const BasicState<T>& psi);
template <class T>
T eval_comb(const CombSpec& spec, const ContractionPlan& plan, const BasicState<T>& psi);

struct DoublyEvenDiagnostic {
  /// Rows whose fixed operators include an odd number of sigma_2.
  std::vector<int> odd_sigma2_rows;
  bool forced_zero = false;
  /// For odd q: a nonzero spec needs an even number of copies.
  bool copies_even = true;
  std::string message;
};

DoublyEvenDiagnostic validate_doubly_even(const CombSpec& spec);

}  // namespace qinv
