#include "qinv/families.hpp"

#include <stdexcept>

namespace qinv {

void Family::add(NamedInvariant ni, std::vector<GaussQ> row) {
  m.append_row(ni.name, std::move(row));
  m.q = ni.inv.qubits();
  invs.push_back(std::move(ni));
}

void Family::add(NamedInvariant ni, std::vector<Complex> row) {
  m.append_row(ni.name, std::move(row));
  m.q = ni.inv.qubits();
  invs.push_back(std::move(ni));
}

void Family::append(const Family& other) {
  m.append(other.m);
  invs.insert(invs.end(), other.invs.begin(), other.invs.end());
}

std::vector<NamedInvariant> orbit_family(const std::string& name, const Invariant& inv) {
  std::vector<NamedInvariant> out;
  for (auto& e : invariant_orbit(inv)) out.push_back({name + "@" + e.perm.to_cycles(), e.inv});
  return out;
}

Family evaluate_family(const std::vector<NamedInvariant>& invs, const std::vector<ExactState>& states) {
  return {invs, build_matrix(invs, states)};
}

Family evaluate_family(const std::vector<NamedInvariant>& invs, const std::vector<FloatState>& states) {
  return {invs, build_matrix(invs, states)};
}

Family product_family(const Family& a, const Family& b, bool symmetric) {
  Family out;
  out.m = product_rows(a.m, b.m, symmetric);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = symmetric ? i : 0; j < b.size(); ++j)
      out.invs.push_back({a.invs[i].name + "*" + b.invs[j].name, a.invs[i].inv * b.invs[j].inv});
  return out;
}

std::size_t greedy_take(ModularSpan& span, const std::vector<NamedInvariant>& candidates,
                        const std::vector<ExactState>& states, std::size_t target_dim, Family& into) {
  std::size_t taken = 0;
  for (const auto& c : candidates) {
    if (span.rank() >= target_dim) break;
    std::vector<GaussQ> row;
    row.reserve(states.size());
    for (const auto& s : states) row.push_back(c.inv.eval(s));
    if (!span.add(row)) continue;
    into.add(c, std::move(row));
    ++taken;
  }
  return taken;
}

std::size_t greedy_take(ModularSpan& span, const Family& candidates, std::size_t target_dim, Family& into) {
  std::size_t taken = 0;
  for (std::size_t k = 0; k < candidates.size() && span.rank() < target_dim; ++k) {
    if (!span.add(candidates.m.exact[k])) continue;
    into.add(candidates.invs[k], candidates.m.exact[k]);
    ++taken;
  }
  return taken;
}

Family five_qubit_v4(const Catalog& cat, const std::vector<ExactState>& states) {
  std::vector<NamedInvariant> d;
  for (const char* n : {"D1", "D2", "D3", "D4", "D5"}) d.push_back({n, cat.get(n)});
  return evaluate_family(d, states);
}

Family five_qubit_v8(const Catalog& cat, const std::vector<ExactState>& states) {
  Family v4 = five_qubit_v4(cat, states);
  Family out = product_family(v4, v4, true);
  ModularSpan span(states.size());
  for (const auto& r : out.m.exact) span.add(r);
  greedy_take(span, orbit_family("F5_1", cat.get("F5_1")), states, 35, out);
  greedy_take(span, {{"F5_6", cat.get("F5_6")}}, states, 36, out);
  return out;
}

Family five_qubit_v10(const Catalog& cat, const std::vector<ExactState>& states) {
  Family out;
  ModularSpan span(states.size());
  greedy_take(span, orbit_family("G10_tilde", cat.get("G10_tilde")), states, 14, out);
  greedy_take(span, {{"P*F", cat.get("PF")}}, states, 15, out);
  return out;
}

Degree12Build five_qubit_v12(const Catalog& cat, const std::vector<ExactState>& states, const Family& v8) {
  if (v8.m.cols() != states.size()) throw std::invalid_argument("five_qubit_v12: V8 rows use another sample");
  Degree12Build b;
  Family v4 = five_qubit_v4(cat, states);
  Family& u = b.u12_candidates;
  u = product_family(v4, v8);
  u.append(evaluate_family({{"F^2", Invariant::power(cat.get("F"), 2)}}, states));
  ModularSpan span(states.size());
  greedy_take(span, u, 228, b.basis);
  b.u12 = span.rank();
  greedy_take(span, orbit_family("F5_12_4", cat.get("F5_12_4")), states, 228, b.basis);
  b.after_f4 = span.rank();
  greedy_take(span, orbit_family("G5_12_2f", cat.get("G5_12_2f")), states, 228, b.basis);
  b.after_g2 = span.rank();
  greedy_take(span, orbit_family("F5_12_2", cat.get("F5_12_2")), states, 228, b.basis);
  b.after_f2 = span.rank();
  greedy_take(span, {{"F5_12_1", cat.get("F5_12_1")}, {"G5_12_6f", cat.get("G5_12_6f")}}, states, 228, b.basis);
  b.total = span.rank();
  return b;
}

}  // namespace qinv
