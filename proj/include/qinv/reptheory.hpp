#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qinv/scalar.hpp"

namespace qinv {

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;

/// All partitions of d, reverse lexicographic ([d] first, [1^d] last).
std::vector<Partition> partitions(int d);
std::string partition_to_string(const Partition& p);  // "[4,4]"
/// Accepts "4,4", "[4,4]" or "4 4".
Partition parse_partition(const std::string& text);

/// Size of the S_d conjugacy class with cycle type t.
Integer class_size(const Partition& t);
Integer factorial(int n);

/// Murnaghan-Nakayama. Throws std::invalid_argument if |lambda| != |t|.
Integer mn_character(const Partition& lambda, const Partition& t);

/// Cycle type of g^alpha for g of cycle type t (alpha >= 1).
Partition power_cycle_type(const Partition& t, int alpha);

/// Character values indexed by partitions(d) order.
struct CharVector {
  int d = 0;
  std::vector<Rational> values;
  const Rational& at(const Partition& t) const;
};

CharVector irreducible_character(const Partition& lambda);
/// Inner product (1/d!) sum_classes size * a * b (characters are real).
Rational inner_product(const CharVector& a, const CharVector& b);

/// Characters of S^k and Lambda^k of the module with character chi.
CharVector sym_power_char(const CharVector& chi, int k);
CharVector ext_power_char(const CharVector& chi, int k);

/// Dimension of local SL(n) invariants of degree d on k parties:
/// (1/d!) sum chi_{[r^n]}(g)^k, zero unless n | d.
Integer dim_sl_invariants(int n, int k, int d);
/// Dimension of those also symmetric (antisym = false) or alternating
/// (antisym = true) under permutations of the k parties.
Integer dim_slstar(int n, int k, int d, bool antisym = false);

/// S_k-module structure of the degree-d qubit invariants of k qubits:
/// multiplicity of each irreducible, indexed by partitions(k).
std::vector<Integer> decompose_invariant_space(int k, int d);

/// X_i labels for the irreducibles of S_4 and S_5 (1-based index into the
/// label order). Throws for other k.
const std::vector<Partition>& x_dictionary(int k);
/// "12X1 + 15X2 + ..." using the dictionary; "0" when empty.
std::string format_decomposition(int k, const std::vector<Integer>& mult);

struct DimFormulas {
  Integer sl_deg4;
  Integer slstar_deg4;
  Integer sl_deg2;
};
/// Closed forms: (2^{q-1} + (-1)^q)/3, floor((q+5)/6), and [q even].
DimFormulas dim_formulas(int q);

/// Cycle types of S_8 in the reference order of the character lists:
/// ascending lexicographic on the parts (1^8 first, [8] last).
std::vector<Partition> s8_reference_order();
/// Values of chi on the classes of s8_reference_order().
std::vector<Integer> on_reference_order(const CharVector& chi);

}  // namespace qinv
