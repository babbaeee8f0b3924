#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qinv/catalog.hpp"
#include "qinv/claims.hpp"
#include "qinv/families.hpp"
#include "qinv/reptheory.hpp"
#include "qinv/span.hpp"
#include "qinv/symmetry.hpp"

using namespace qinv;

namespace {

struct Common {
  std::string mode = "exact";
  std::uint64_t seed = 1;
  Arithmetic arith() const { return mode == "float" ? Arithmetic::Float : Arithmetic::Exact; }
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--mode", c.mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  app->add_option("--seed", c.seed, "random seed");
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// "orbit:NAME" expands to the S_q orbit of NAME; anything else is an expression.
std::vector<NamedInvariant> resolve_invariants(const std::string& list) {
  const Catalog& cat = Catalog::builtin();
  std::vector<NamedInvariant> out;
  for (const auto& item : split_list(list)) {
    if (item.rfind("orbit:", 0) == 0) {
      auto orb = orbit_family(item.substr(6), cat.get(item.substr(6)));
      out.insert(out.end(), orb.begin(), orb.end());
    } else {
      out.push_back({item, cat.has(item) ? cat.get(item) : cat.expression(item)});
    }
  }
  if (out.empty()) throw std::invalid_argument("no invariants given");
  return out;
}

FloatState load_float(const std::string& spec) {
  if (spec.find('/') == std::string::npos && spec.find('.') == std::string::npos) return named_state(spec).amps;
  std::ifstream in(spec);
  if (!in) throw std::runtime_error("cannot open state file '" + spec + "'");
  return read_float_state(in);
}

ExactState load_exact(const std::string& spec) {
  if (spec.find('/') == std::string::npos && spec.find('.') == std::string::npos) {
    const auto& s = named_state(spec);
    if (!s.exact) throw std::invalid_argument("state '" + spec + "' has irrational amplitudes; use --mode float");
    return *s.exact;
  }
  std::ifstream in(spec);
  if (!in) throw std::runtime_error("cannot open state file '" + spec + "'");
  return read_exact_state(in);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qinv: polynomial SL-invariants of multi-qubit states"};
  app.require_subcommand(1);

  Common com;

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate invariants on a state");
  std::string inv_list, state_spec, perm_text;
  bool normalized = false;
  add_common(eval, com);
  eval->add_option("--inv", inv_list, "comma-separated names or expressions")->required();
  eval->add_option("--state", state_spec, "named state or state file")->required();
  eval->add_option("--perm", perm_text, "apply a qubit permutation to the state first, e.g. \"(1 2)\"");
  eval->add_flag("--normalized", normalized, "value on the unit-norm state");

  // orbit
  auto* orbit = app.add_subcommand("orbit", "S_q orbit of an invariant");
  std::string orbit_inv;
  std::size_t orbit_states = 0;
  add_common(orbit, com);
  orbit->add_option("--inv", orbit_inv, "catalog name")->required();
  orbit->add_option("--rank-states", orbit_states, "also print the rank on this many random states");

  // rank
  auto* rank_cmd = app.add_subcommand("rank", "rank of a family on random states");
  std::string rank_invs;
  std::size_t rank_states = 0;
  add_common(rank_cmd, com);
  rank_cmd->add_option("--inv", rank_invs, "comma list; orbit:NAME expands an orbit")->required();
  rank_cmd->add_option("--states", rank_states, "number of states (default rows + 10)");

  // relation
  auto* rel = app.add_subcommand("relation", "express a target in a basis");
  std::string rel_target, rel_basis;
  add_common(rel, com);
  rel->add_option("--target", rel_target, "expression")->required();
  rel->add_option("--inv", rel_basis, "basis, comma list")->required();

  // filter-check
  auto* filt = app.add_subcommand("filter-check", "vanishing on product states per bipartition");
  std::string filt_inv;
  int trials = 20;
  add_common(filt, com);
  filt->add_option("--inv", filt_inv, "name or expression")->required();
  filt->add_option("--trials", trials, "product states per bipartition");

  // hilbert
  auto* hil = app.add_subcommand("hilbert", "Hilbert series coefficients from characters");
  int qubits = 5, max_degree = 18;
  std::string symmetry = "sl";
  add_common(hil, com);
  hil->add_option("--qubits", qubits)->check(CLI::Range(1, 12));
  hil->add_option("--max-degree", max_degree)->check(CLI::Range(0, 40));
  hil->add_option("--symmetry", symmetry, "sl, slstar, slstar-minus or relative")
      ->check(CLI::IsMember({"sl", "slstar", "slstar-minus", "relative"}));

  // decompose
  auto* dec = app.add_subcommand("decompose", "S_q-module structure of the degree-d invariants");
  int dec_q = 5, dec_d = 12;
  add_common(dec, com);
  dec->add_option("--qubits", dec_q)->check(CLI::Range(2, 8));
  dec->add_option("--degree", dec_d)->check(CLI::Range(0, 24));

  // verify
  auto* ver = app.add_subcommand("verify", "run the claim ledger");
  std::vector<std::string> suites;
  bool all_suites = false, list_suites = false;
  add_common(ver, com);
  ver->add_option("--suite", suites, "suite name (repeatable); default: the default suites");
  ver->add_flag("--all", all_suites, "include the slow suites");
  ver->add_flag("--list", list_suites, "list suites");
  ver->add_flag("--progress", "progress on stderr");

  // catalog
  auto* catc = app.add_subcommand("catalog", "list catalog entries and named states");
  std::string cat_action = "list", cat_name;
  catc->add_option("action", cat_action, "list, show or states")->check(CLI::IsMember({"list", "show", "states"}));
  catc->add_option("name", cat_name, "entry for show");

  CLI11_PARSE(app, argc, argv);

  try {
    const Catalog& cat = Catalog::builtin();
    if (*eval) {
      auto invs = resolve_invariants(inv_list);
      for (const auto& ni : invs) {
        std::string value;
        if (com.arith() == Arithmetic::Exact) {
          ExactState psi = load_exact(state_spec);
          if (!perm_text.empty()) psi = permute_state(QubitPermutation::parse_cycles(perm_text, psi.qubits()), psi);
          value = (normalized ? normalized_value(ni.inv, psi) : ni.inv.eval(psi)).to_string();
        } else {
          FloatState psi = load_float(state_spec);
          if (!perm_text.empty()) psi = permute_state(QubitPermutation::parse_cycles(perm_text, psi.qubits()), psi);
          value = to_string(normalized ? normalized_value(ni.inv, psi) : ni.inv.eval(psi));
        }
        std::cout << ni.name << " = " << value << "\n";
      }
    } else if (*orbit) {
      auto orb = orbit_family(orbit_inv, cat.get(orbit_inv));
      std::cout << "orbit size " << orb.size() << "\n";
      for (const auto& ni : orb) std::cout << ni.name << "\n";
      if (orbit_states) {
        const int q = cat.get(orbit_inv).qubits();
        auto m = com.arith() == Arithmetic::Exact
                     ? build_matrix(orb, sample_states(q, orbit_states, com.seed))
                     : build_matrix(orb, sample_float_states(q, orbit_states, com.seed));
        auto r = rank(m);
        std::cout << "rank " << r.rank << " (" << r.method << ")\n";
      }
    } else if (*rank_cmd) {
      auto invs = resolve_invariants(rank_invs);
      const int q = invs[0].inv.qubits();
      const std::size_t n = rank_states ? rank_states : invs.size() + 10;
      auto m = com.arith() == Arithmetic::Exact ? build_matrix(invs, sample_states(q, n, com.seed))
                                                : build_matrix(invs, sample_float_states(q, n, com.seed));
      auto r = rank(m);
      std::cout << "rows " << m.rows() << " states " << m.cols() << "\nrank " << r.rank << " (" << r.method
                << ")\n";
    } else if (*rel) {
      auto basis = resolve_invariants(rel_basis);
      Invariant target = cat.has(rel_target) ? cat.get(rel_target) : cat.expression(rel_target);
      const int q = target.qubits();
      auto states = sample_states(q, basis.size() + 10, com.seed);
      auto m = build_matrix(basis, states);
      std::vector<GaussQ> row;
      for (const auto& s : states) row.push_back(target.eval(s));
      std::vector<std::string> names;
      for (const auto& b : basis) names.push_back(b.name);
      std::cout << find_relation(row, m).describe(names) << "\n";
    } else if (*filt) {
      Invariant inv = cat.has(filt_inv) ? cat.get(filt_inv) : cat.expression(filt_inv);
      auto rep = filter_check(inv, trials, com.seed);
      for (const auto& p : rep.parts)
        std::cout << p.label() << " " << (p.nonzero ? "nonzero witness=" + p.witness.to_string() : "zero") << "\n";
      std::cout << (rep.is_filter() ? "filter" : "not a filter") << "\n";
    } else if (*hil) {
      std::string sep;
      for (int d = 0; d <= max_degree; d += 2) {
        Integer v;
        if (symmetry == "sl") v = dim_sl_invariants(2, qubits, d);
        else if (symmetry == "slstar") v = dim_slstar(2, qubits, d);
        else if (symmetry == "slstar-minus") v = dim_slstar(2, qubits, d, true);
        else v = dim_slstar(2, qubits, d) + dim_slstar(2, qubits, d, true);
        std::cout << sep << v.get_str();
        sep = ",";
      }
      std::cout << "\n";
    } else if (*dec) {
      auto mult = decompose_invariant_space(dec_q, dec_d);
      if (dec_q == 4 || dec_q == 5) {
        std::cout << format_decomposition(dec_q, mult) << "\n";
      } else {
        auto parts = partitions(dec_q);
        for (std::size_t k = 0; k < parts.size(); ++k)
          if (mult[k] != 0) std::cout << partition_to_string(parts[k]) << " " << mult[k].get_str() << "\n";
      }
    } else if (*ver) {
      if (list_suites) {
        for (const auto& s : suite_list())
          std::cout << s.name << (s.in_default ? "" : " (slow)") << ": " << s.summary << "\n";
        return 0;
      }
      if (suites.empty())
        for (const auto& s : suite_list())
          if (s.in_default || all_suites) suites.push_back(s.name);
      SuiteOptions opt;
      opt.seed = com.seed;
      opt.mode = com.arith();
      if (ver->count("--progress")) opt.log = &std::cerr;
      bool ok = true;
      for (const auto& name : suites) {
        auto res = run_suite(name, opt);
        for (const auto& r : res) std::cout << r.line() << (r.gating ? "" : " (info)") << "\n";
        bool pass = suite_passed(res);
        ok = ok && pass;
        std::cout << "suite=" << name << " status=" << (pass ? "PASS" : "FAIL") << "\n";
      }
      return ok ? 0 : 1;
    } else if (*catc) {
      if (cat_action == "list") {
        std::cout << "# qinv catalog v1\n";
        for (const auto& n : cat.names()) {
          const auto& e = cat.entry(n);
          std::cout << n << "\tq=" << e.inv.qubits() << "\tdeg=" << e.inv.degree() << "\n";
        }
      } else if (cat_action == "show") {
        const auto& e = cat.entry(cat_name);
        std::cout << e.name << " = " << e.source << "\n";
        if (!e.note.empty()) std::cout << "# " << e.note << "\n";
        std::cout << "qubits " << e.inv.qubits() << ", degree " << e.inv.degree() << "\n";
      } else {
        for (const auto& n : named_state_names()) {
          const auto& s = named_state(n);
          std::cout << n << "\tq=" << s.amps.qubits() << "\t" << (s.exact ? "exact" : "float") << "\t" << s.note
                    << "\n";
        }
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
