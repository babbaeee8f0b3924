#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qinv/invariant.hpp"
#include "qinv/state.hpp"

namespace qinv {

/// Text of a bundled data file (catalog manifest, networks, recipes).
/// Throws std::out_of_range for an unknown file name.
const std::string& bundled_file(std::string_view name);
std::vector<std::string> bundled_files();

struct CatalogEntry {
  std::string name;
  std::string source;
  std::string note;
  Invariant inv;
};

struct NamedState {
  std::string name;
  std::string note;
  FloatState amps;
  /// Exact amplitudes when all of them are rational.
  std::optional<ExactState> exact;
};

/// Name -> invariant expression table, built from a manifest.
class Catalog {
 public:
  /// Parses a manifest; file references resolve through bundled_file.
  /// Throws std::invalid_argument with the line number on any error.
  static Catalog parse(std::string_view manifest);
  /// The bundled manifest, parsed once.
  static const Catalog& builtin();

  bool has(std::string_view name) const;
  /// Throws std::out_of_range listing the closest names.
  const CatalogEntry& entry(std::string_view name) const;
  const Invariant& get(std::string_view name) const { return entry(name).inv; }
  /// Names in manifest order.
  const std::vector<std::string>& names() const { return order_; }

  /// Evaluates an expression in the manifest language against this catalog.
  Invariant expression(std::string_view text) const;

  /// Names sorted by edit distance, best first.
  std::vector<std::string> nearest(std::string_view name, std::size_t count = 3) const;

 private:
  std::map<std::string, CatalogEntry, std::less<>> entries_;
  std::vector<std::string> order_;
};

/// Named states. Throws std::out_of_range with suggestions for unknown names.
const NamedState& named_state(std::string_view name);
std::vector<std::string> named_state_names();

/// Ring graph state on q qubits: amplitude (-1)^(sum x_j x_{j+1}), edges cyclic.
ExactState ring_graph_state(int q);

/// <psi|psi> (with conjugation).
Rational norm_squared(const ExactState& psi);
double norm_squared(const FloatState& psi);

/// value / <psi|psi>^(degree/2): the value on the normalized state.
GaussQ normalized_value(const Invariant& inv, const ExactState& psi);
Complex normalized_value(const Invariant& inv, const FloatState& psi);

std::size_t edit_distance(std::string_view a, std::string_view b);

}  // namespace qinv
