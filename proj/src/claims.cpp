#include "qinv/claims.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qinv/catalog.hpp"
#include "qinv/epsilon.hpp"
#include "qinv/families.hpp"
#include "qinv/reptheory.hpp"
#include "qinv/span.hpp"
#include "qinv/stretch.hpp"
#include "qinv/symmetry.hpp"

namespace qinv {

std::string ClaimResult::line() const {
  return "claim=" + id + " expected=" + expected + " got=" + got + " status=" + (pass ? "PASS" : "FAIL");
}

bool suite_passed(const std::vector<ClaimResult>& claims) {
  for (const auto& c : claims)
    if (c.gating && !c.pass) return false;
  return true;
}

namespace {

// Float comparisons on unit-norm states, where values are O(1).
constexpr double kIdentityTol = 1e-9;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
  return h;
}

std::string str(std::size_t n) { return std::to_string(n); }

template <class V>
std::string join(const V& v) {
  std::string s;
  bool first = true;
  for (const auto& x : v) {
    if (!first) s += ",";
    first = false;
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, std::string>) s += x;
    else if constexpr (std::is_arithmetic_v<std::decay_t<decltype(x)>>) s += std::to_string(x);
    else s += x.get_str();
  }
  return s.empty() ? "none" : s;
}

struct Ctx {
  const Catalog& cat = Catalog::builtin();
  SuiteOptions opt;
  std::vector<ClaimResult> out;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  bool exact() const { return opt.mode == Arithmetic::Exact; }
  std::uint64_t seed(const std::string& id) const { return opt.seed * 0x9E3779B97F4A7C15ULL ^ fnv1a(id); }

  void log(const std::string& msg) const {
    if (!opt.log) return;
    double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(1);
    os << "[" << t << "s] " << msg << "\n";
    *opt.log << os.str() << std::flush;
  }

  ClaimResult& claim(std::string id, std::string expected, std::string got, bool gating = true,
                     std::string note = "") {
    bool pass = expected == got;
    out.push_back({std::move(id), std::move(expected), std::move(got), pass, gating, std::move(note)});
    log(out.back().line());
    return out.back();
  }
  ClaimResult& count(std::string id, std::size_t expected, std::size_t got, bool gating = true) {
    return claim(std::move(id), str(expected), str(got), gating);
  }

  std::size_t rank_of(const EvaluationMatrix& m) const { return exact() ? exact_rank(m).rank : float_rank(m).rank; }

  Family family(const std::vector<NamedInvariant>& invs, int q, std::size_t n, const std::string& tag) const {
    if (exact()) return evaluate_family(invs, sample_states(q, n, seed(tag)));
    return evaluate_family(invs, sample_float_states(q, n, seed(tag)));
  }

  // lhs == rhs on n random states; rhs empty means 0.
  void identity(const std::string& id, const std::string& lhs, const std::string& rhs, int q, std::size_t n,
                bool gating = true) {
    Invariant l = cat.expression(lhs);
    std::optional<Invariant> r;
    if (!rhs.empty()) r = cat.expression(rhs);
    std::size_t ok = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (exact()) {
        auto psi = random_exact_state(q, seed(id) + k);
        if (l.eval(psi) == (r ? r->eval(psi) : GaussQ(0))) ++ok;
      } else {
        auto psi = sample_float_states(q, 1, seed(id) + k)[0];
        Complex a = l.eval(psi), b = r ? r->eval(psi) : Complex(0);
        if (std::abs(a - b) <= kIdentityTol * (1 + std::abs(a) + std::abs(b))) ++ok;
      }
    }
    count(id, n, ok, gating);
  }
};

// ---------------------------------------------------------------------------

void suite_sl_invariance(Ctx& c) {
  std::size_t zero = 0;
  const Op y[] = {Op::S2};
  for (std::size_t k = 0; k < 1000; ++k) {
    auto psi = random_exact_state(1, c.seed("COMB.sigma2") + k);
    if (bilinear_form<GaussQ>(y, psi, psi).is_zero()) ++zero;
  }
  c.count("COMB.sigma2-single-qubit", 1000, zero);

  for (const auto& name : c.cat.names()) {
    const Invariant& inv = c.cat.get(name);
    const int q = inv.qubits();
    std::size_t ok = 0, total = 0;
    const std::string id = "SL." + name;
    for (int s = 0; s < 10; ++s) {
      auto psi = random_exact_state(q, c.seed(id) + s);
      if (c.exact()) {
        GaussQ v = inv.eval(psi);
        for (int t = 0; t < 20; ++t, ++total) {
          std::vector<Mat2<GaussQ>> g;
          for (int j = 0; j < q; ++j) g.push_back(random_sl2_exact(c.seed(id) + 1000 * s + 37 * t + j));
          if (inv.eval(apply_sl_local<GaussQ>(psi, g)) == v) ++ok;
        }
      } else {
        FloatState f = to_float(psi);
        Complex v = inv.eval(f);
        double scale = std::abs(v) + std::pow(norm_squared(f), inv.degree() / 2.0);
        for (int t = 0; t < 20; ++t, ++total) {
          std::vector<Mat2<Complex>> g;
          for (int j = 0; j < q; ++j) {
            auto m = random_sl2_exact(c.seed(id) + 1000 * s + 37 * t + j);
            g.push_back({m[0].to_complex(), m[1].to_complex(), m[2].to_complex(), m[3].to_complex()});
          }
          Complex w = inv.eval(apply_sl_local<Complex>(f, g));
          if (std::abs(w - v) <= 1e-8 * (scale + std::abs(w))) ++ok;
        }
      }
    }
    c.count(id, total, ok);
  }
}

void suite_four_qubit(Ctx& c) {
  const std::size_t n = 30;
  c.identity("C4.LMN-sum", "L + M + N", "", 4, n);
  c.identity("C4.L-from-C4", "L", "(C4_4_13 - C4_4_14)/48", 4, n);
  c.identity("C4.M-from-C4", "M", "(C4_4_14 - C4_4_12)/48", 4, n);
  c.identity("C4.N-from-C4", "N", "(C4_4_12 - C4_4_13)/48", 4, n);
  c.identity("C4.H2-from-C4", "H^2", "(C4_4_12 + C4_4_13 + C4_4_14)/12", 4, n);
  c.identity("C4.C12-eq-C34", "C4_4_12", "C4_4_34", 4, n, false);
  c.identity("C4.C13-eq-C24", "C4_4_13", "C4_4_24", 4, n, false);
  c.identity("C4.C14-eq-C23", "C4_4_14", "C4_4_23", 4, n, false);
  c.identity("C4.mmmm-36H2", "mmmm", "36*H^2", 4, n);
  c.identity("C4.F1-8(4W-H3)", "F4_1", "8*(4*W - H^3)", 4, n);
  c.identity("C4.Dsum-W", "D_xy + D_xz + D_xt", "W", 4, n);
  c.identity("C4.F2-display", "F4_2", "16*(H^4 + 4*H^2*(M - L) - 16*H*D_xt - 16*L*M)", 4, n);
  c.identity("C4.F2s-display", "F4_2s", "16/3*(8*Sigma - H^4) - 64/3*H*(4*W - H^3)", 4, n);
  c.identity("C4.F3-product-form", "F4_3", "1/2*C4_4_12*C4_4_13*C4_4_14", 4, n);
  c.identity("C4.F3-HSigmaPi-form", "F4_3", "-96*H^2*(8*Sigma - H^4) - 64*(32*Pi + H^6)", 4, n);
  c.identity("C4.idgen-W", "4*W - H^3", "1/8*F4_1", 4, n);
  c.identity("C4.idgen-Sigma", "8*Sigma - H^4", "3/16*(F4_2s + 8/3*H*F4_1)", 4, n);
  c.identity("C4.idgen-Pi", "32*Pi + H^6", "-1/64*(F4_3 + 18*H^2*F4_2s + 48*H^3*F4_1)", 4, n);
  c.claim("C4.H-GHZ4", "1", c.cat.get("H").eval(*named_state("GHZ4").exact).to_string(), false);
}

void suite_filters(Ctx& c) {
  const int trials = 20;
  auto check = [&](const std::string& id, const std::string& name, const std::string& expected, bool gating) {
    auto rep = filter_check(c.cat.get(name), trials, c.seed(id));
    auto labels = rep.nonzero_labels();
    std::string got = labels.empty() ? "filter" : join(labels);
    c.claim(id, expected, got, gating);
    return rep;
  };
  for (const char* n : {"F4_1", "F4_2", "F4_3"}) check(std::string("FILT.") + n, n, "filter", true);
  auto h = check("FILT.H-not-filter", "H", "(1,2)|(3,4),(1,3)|(2,4),(1,4)|(2,3)", true);
  c.claim("FILT.H-witness", "nonzero", h.is_filter() ? "none" : "nonzero");
  for (const char* n : {"F5_1", "F5_5", "F5_6", "F5_0", "F5_12_1", "F5_12_2", "F5_12_4", "G5_12_2f", "G5_12_6f"})
    check(std::string("FILT.") + n, n, "filter", true);
  check("FILT.G5_12_2-uncorrected", "G5_12_2", "(1,2)|(3,4,5)", true);
  check("FILT.G5_12_6-uncorrected", "G5_12_6", "(1,3,5)|(2,4)", false);

  // Closed forms on the surviving bipartitions: G = k * C^6 * tau^3.
  const auto C = Invariant::comb(parse_comb_spec("y y"));
  const auto& tau = c.cat.get("tau3");
  auto ratio = [&](const char* name, std::vector<int> two, std::vector<int> three) {
    std::vector<std::string> seen;
    for (int s = 0; s < 3; ++s) {
      auto a = random_exact_state(2, c.seed(name) + s), b = random_exact_state(3, c.seed(name) + 100 + s);
      GaussQ cv = c.cat.get(name).eval(product_state<GaussQ>(5, {two, three}, {a, b}));
      GaussQ x = C.eval(a), t = tau.eval(b);
      GaussQ den = x * x * x * x * x * x * t * t * t;
      seen.push_back(den.is_zero() ? "undefined" : (cv / den).to_string());
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    return join(seen);
  };
  c.claim("FILT.G5_12_2-closed-form", "9", ratio("G5_12_2", {0, 1}, {2, 3, 4}), false);
  c.claim("FILT.G5_12_6-closed-form", "3", ratio("G5_12_6", {1, 3}, {0, 2, 4}), false);
}

void suite_five_low(Ctx& c) {
  std::vector<NamedInvariant> d;
  for (const char* n : {"D1", "D2", "D3", "D4", "D5"}) d.push_back({n, c.cat.get(n)});
  c.count("C5.D-rank", 5, c.rank_of(c.family(d, 5, 30, "C5.D-rank").m));
  c.identity("C5.mmm22-identity", "mmm22", "3*(D4 + D5) - P", 5, 50);
  c.identity("C5.Psymm-identity", "Psymm", "-3*P", 5, 50);
  c.identity("C5.F6b-factorizes", "F5_6b", "mmm22*comb(\"m4 y y m5 m6 | m4 y y m5 m6\")", 5, 10, false);

  auto fixed = validate_network(parse_network(bundled_file("F_epsilon.net")));
  auto raw = validate_network(parse_network(bundled_file("F_epsilon_raw.net")));
  c.claim("C5.F-network-valid", "valid", fixed.valid ? "valid" : "invalid");
  c.claim("C5.F-raw-network-rejected", "invalid", raw.valid ? "valid" : "invalid", false);

  const auto& f = c.cat.get("F");
  std::size_t odd = 0, total = 0;
  for (int s = 0; s < 3; ++s) {
    auto psi = random_exact_state(5, c.seed("C5.F-odd") + s);
    GaussQ v = f.eval(psi);
    for (const auto& pi : all_permutations(5)) {
      ++total;
      GaussQ w = f.eval(permute_state(pi, psi));
      if (w == (pi.sign() < 0 ? -v : v) && !v.is_zero()) ++odd;
    }
  }
  c.count("C5.F-odd", total, odd);
  for (const char* s : {"graph5_a", "graph5_b", "graph5_c", "graph5_d"})
    c.claim(std::string("C5.F-zero-") + s, "0", f.eval(*named_state(s).exact).to_string());
  c.count("C5.F-rank", 1, c.rank_of(c.family({{"F", f}}, 5, 10, "C5.F-rank").m));
}


Family join_families(std::initializer_list<const Family*> fs) {
  Family out;
  for (const Family* f : fs) out.append(*f);
  return out;
}

std::vector<NamedInvariant> d_family(const Catalog& cat) {
  std::vector<NamedInvariant> d;
  for (const char* n : {"D1", "D2", "D3", "D4", "D5"}) d.push_back({n, cat.get(n)});
  return d;
}

// Distinct values of num/den over a few random states.
std::string ratio_set(Ctx& c, const std::string& tag, const std::string& num, const std::string& den, int q) {
  Invariant a = c.cat.expression(num), b = c.cat.expression(den);
  std::vector<std::string> seen;
  for (int s = 0; s < 5; ++s) {
    auto psi = random_exact_state(q, c.seed(tag) + s);
    GaussQ d = b.eval(psi);
    seen.push_back(d.is_zero() ? "undefined" : (a.eval(psi) / d).to_string());
  }
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  return join(seen);
}

void suite_degree8(Ctx& c) {
  const auto& cat = c.cat;
  const std::size_t n = 46;
  const std::string tag = "deg8";
  Family v4 = c.family(d_family(cat), 5, n, tag);
  Family dd = product_family(v4, v4, true);
  Family o1 = c.family(orbit_family("F5_1", cat.get("F5_1")), 5, n, tag);
  Family o5 = c.family(orbit_family("F5_5", cat.get("F5_5")), 5, n, tag);
  Family f6 = c.family({{"F5_6", cat.get("F5_6")}}, 5, n, tag);
  c.log("degree 8: families evaluated");

  const std::size_t u8 = c.rank_of(dd.m);
  c.count("C5.deg8.U8-dim", 15, u8);
  const std::size_t r1 = c.rank_of(o1.m);
  c.count("C5.deg8.F1-orbit-rank", 24, r1);
  const std::size_t r15 = c.rank_of(join_families({&dd, &o1}).m);
  c.count("C5.deg8.U8+F1-orbit", 35, r15);
  c.count("C5.deg8.F1-orbit-meets-U8", 4, u8 + r1 - r15);
  c.count("C5.deg8.V8-dim", 36, c.rank_of(join_families({&dd, &o1, &f6}).m));
  const std::size_t r5 = c.rank_of(o5.m);
  c.count("C5.deg8.F5-orbit-rank", 24, r5, false);
  c.count("C5.deg8.F1-F5-overlap", 23, r1 + r5 - c.rank_of(join_families({&o1, &o5}).m));
  if (c.exact()) {
    ModularSpan span(n);
    for (const auto& r : dd.m.exact) span.add(r);
    Family taken;
    c.count("C5.deg8.greedy-F1-images", 20, greedy_take(span, o1, 35, taken));
  }
  c.count("C5.deg8.hilbert-coefficient", 36, dim_sl_invariants(2, 5, 8).get_ui(), false);

  auto& t2 = c.claim("C5.deg8.T2-equals-P2-3Q", "1", ratio_set(c, "T2", "T2_0", "P^2 - 3*Q", 5));
  t2.note = "ratio T2_0/(P^2-3Q) on random states";
  c.identity("C5.deg8.T2-tenth", "T2_0", "(P^2 - 3*Q)/10", 5, 5, false);

  std::vector<NamedInvariant> gens = dd.invs;
  gens.push_back({"F5_1", cat.get("F5_1")});
  gens.push_back({"F5_6", cat.get("F5_6")});
  auto sd = symmetric_component_dims(gens, sample_states(5, 14, c.seed("deg8-sym")));
  c.count("C5.deg8.sym-dim", 4, sd.sym);
  c.count("C5.deg8.asym-dim", 0, sd.asym, false);
}

void suite_degree10(Ctx& c) {
  const auto& cat = c.cat;
  const std::size_t n = 25;
  const std::string tag = "deg10";
  const Invariant& g10 = cat.get("G10");
  c.count("C5.deg10.recipe-degree", 10, static_cast<std::size_t>(g10.degree()));
  {
    std::size_t ok = 0;
    for (int s = 0; s < 3; ++s) {
      auto psi = random_exact_state(5, c.seed("recipe") + s);
      std::vector<Mat2<GaussQ>> g;
      for (int j = 0; j < 5; ++j) g.push_back(random_sl2_exact(c.seed("recipe-g") + 10 * s + j));
      GaussQ v = g10.eval(psi);
      if (!v.is_zero() && g10.eval(apply_sl_local<GaussQ>(psi, g)) == v) ++ok;
    }
    c.claim("C5.deg10.recipe-runs", "nonzero-invariant", ok == 3 ? "nonzero-invariant" : "failed");
  }
  Family o = c.family(orbit_family("G10_tilde", cat.get("G10_tilde")), 5, n, tag);
  Family pf = c.family({{"P*F", cat.get("PF")}}, 5, n, tag);
  Family g = c.family({{"G10", g10}}, 5, n, tag);
  c.count("C5.deg10.Gt-orbit-rank", 14, c.rank_of(o.m));
  const std::size_t v10 = c.rank_of(join_families({&o, &pf}).m);
  c.count("C5.deg10.V10-dim", 15, v10);
  c.claim("C5.deg10.recipe-in-V10", "member",
          c.rank_of(join_families({&o, &pf, &g}).m) == v10 ? "member" : "outside", false);
  if (c.exact()) {
    Family basis = five_qubit_v10(cat, sample_states(5, n, c.seed(tag)));
    auto rel = find_relation(pf.m.exact[0], basis.m);
    c.claim("C5.deg10.PF-relation", "member", rel.member ? "member" : "outside", false);
  }
  c.count("C5.deg10.hilbert-coefficient", 15, dim_sl_invariants(2, 5, 10).get_ui(), false);
  std::vector<NamedInvariant> gens = {{"G10_tilde", cat.get("G10_tilde")}, {"D1*F", cat.get("D1") * cat.get("F")}};
  auto sd = symmetric_component_dims(gens, sample_states(5, 14, c.seed("deg10-sym")));
  c.count("C5.deg10.asym-dim", 2, sd.asym);
  c.count("C5.deg10.sym-dim", 0, sd.sym);
}

void degree12_sym(Ctx& c, const std::vector<NamedInvariant>& v8) {
  const auto& cat = c.cat;
  std::vector<NamedInvariant> gens;
  for (const auto& b : v8) gens.push_back({"D1*" + b.name, cat.get("D1") * b.inv});
  gens.push_back({"F^2", Invariant::power(cat.get("F"), 2)});
  auto states = sample_states(5, 24, c.seed("deg12-sym"));
  auto su = symmetric_component_dims(gens, states);
  c.count("C5.deg12.U12-sym-dim", 7, su.sym);
  c.count("C5.deg12.U12-asym-dim", 0, su.asym, false);
  for (const char* n : {"F5_12_4", "G5_12_2f", "F5_12_2", "F5_12_1", "G5_12_6f"}) gens.push_back({n, cat.get(n)});
  auto sv = symmetric_component_dims(gens, states);
  c.count("C5.deg12.sym-dim", 12, sv.sym);
  c.count("C5.deg12.asym-dim", 2, sv.asym);
}

void suite_degree12(Ctx& c) {
  const auto& cat = c.cat;
  const std::size_t n = 228 + 10;
  const std::string tag = "deg12";
  if (c.exact()) {
    auto states = sample_states(5, n, c.seed(tag));
    Family v8 = five_qubit_v8(cat, states);
    c.log("degree 12: V8 basis has " + str(v8.size()) + " rows");
    Degree12Build b = five_qubit_v12(cat, states, v8);
    c.log("degree 12: greedy ledger done");
    const std::size_t u12 = exact_rank(b.u12_candidates.m).rank;
    c.count("C5.deg12.U12-dim", 141, u12);
    c.log("degree 12: U12 rank done");
    Family o4 = evaluate_family(orbit_family("F5_12_4", cat.get("F5_12_4")), states);
    const std::size_t m4 = exact_rank(o4.m).rank;
    c.count("C5.deg12.F4-module-dim", 112, m4);
    std::vector<std::size_t> first(b.u12);
    std::iota(first.begin(), first.end(), 0);
    EvaluationMatrix un = b.basis.m.select(first);
    un.append(o4.m);
    const std::size_t ru = exact_rank(un).rank;
    c.count("C5.deg12.F4-meets-U12", 44, u12 + m4 - ru);
    c.count("C5.deg12.greedy-U12", 141, b.u12);
    c.count("C5.deg12.greedy-F4-new", 68, b.after_f4 - b.u12);
    c.count("C5.deg12.greedy-G2-new", 15, b.after_g2 - b.after_f4);
    c.count("C5.deg12.greedy-F2-new", 2, b.after_f2 - b.after_g2);
    c.count("C5.deg12.greedy-adjoined", 2, b.total - b.after_f2);
    auto fin = exact_rank(b.basis.m);
    c.count("C5.deg12.V12-dim", 228, fin.rank);
    c.claim("C5.deg12.rank-path", "exact", "exact", false, fin.method);
    c.count("C5.deg12.float-agrees", 228, float_rank(b.basis.m).rank, false);
    degree12_sym(c, v8.invs);
  } else {
    auto fl = sample_float_states(5, n, c.seed(tag));
    auto fam = [&](const std::vector<NamedInvariant>& invs) { return evaluate_family(invs, fl); };
    Family v4 = fam(d_family(cat));
    Family dd = product_family(v4, v4, true);
    Family o1 = fam(orbit_family("F5_1", cat.get("F5_1")));
    Family f6 = fam({{"F5_6", cat.get("F5_6")}});
    Family v8 = join_families({&dd, &o1, &f6});
    Family u = product_family(v4, v8);
    u.append(fam({{"F^2", Invariant::power(cat.get("F"), 2)}}));
    Family o4 = fam(orbit_family("F5_12_4", cat.get("F5_12_4")));
    Family o2 = fam(orbit_family("G5_12_2f", cat.get("G5_12_2f")));
    Family o22 = fam(orbit_family("F5_12_2", cat.get("F5_12_2")));
    Family last = fam({{"F5_12_1", cat.get("F5_12_1")}, {"G5_12_6f", cat.get("G5_12_6f")}});
    const std::size_t u12 = float_rank(u.m).rank, m4 = float_rank(o4.m).rank;
    const std::size_t a4 = float_rank(join_families({&u, &o4}).m).rank;
    const std::size_t a2 = float_rank(join_families({&u, &o4, &o2}).m).rank;
    const std::size_t a22 = float_rank(join_families({&u, &o4, &o2, &o22}).m).rank;
    const std::size_t all = float_rank(join_families({&u, &o4, &o2, &o22, &last}).m).rank;
    c.count("C5.deg12.U12-dim", 141, u12);
    c.count("C5.deg12.F4-module-dim", 112, m4);
    c.count("C5.deg12.F4-meets-U12", 44, u12 + m4 - a4);
    c.count("C5.deg12.greedy-F4-new", 68, a4 - u12);
    c.count("C5.deg12.greedy-G2-new", 15, a2 - a4);
    c.count("C5.deg12.greedy-F2-new", 2, a22 - a2);
    c.count("C5.deg12.greedy-adjoined", 2, all - a22);
    c.count("C5.deg12.V12-dim", 228, all);
    c.claim("C5.deg12.rank-path", "float", "float", false, "float SVD, tolerance 1e-7");
    Family v8e = five_qubit_v8(cat, sample_states(5, 46, c.seed("deg12-v8")));
    degree12_sym(c, v8e.invs);
  }
}

void suite_characters(Ctx& c) {
  auto chi = irreducible_character({4, 4});
  c.claim("CHAR.chi44-S8", "14,4,2,0,6,-1,1,-1,2,-2,-2,0,2,1,2,-1,-1,-1,0,0,0,0", join(on_reference_order(chi)));
  c.claim("CHAR.chi44-sym5-S8", "8568,216,72,0,536,0,0,0,18,0,-12,0,12,0,24,3,1,0,0,2,0,0",
          join(on_reference_order(sym_power_char(chi, 5))));
  auto series = [](auto f, int from, int to) {
    std::vector<Integer> v;
    for (int d = from; d <= to; d += 2) v.push_back(f(d));
    return join(v);
  };
  {
    // listed without the vanishing t^2 coefficient
    std::vector<Integer> v;
    for (int d : {0, 4, 6, 8, 10, 12, 14, 16, 18}) v.push_back(dim_sl_invariants(2, 5, d));
    c.claim("CHAR.sl5", "1,5,1,36,15,228,231,1313,1939", join(v));
    c.claim("CHAR.sl5-d2", "0", dim_sl_invariants(2, 5, 2).get_str());
  }
  c.claim("CHAR.slstar5", "1,0,1,0,4,0,12,2,39,21,130,115", series([](int d) { return dim_slstar(2, 5, d); }, 0, 22));
  c.claim("CHAR.slstar5-relative", "1,0,1,1,4,2,14,11,49,58,185,269",
          series([](int d) { return Integer(dim_slstar(2, 5, d) + dim_slstar(2, 5, d, true)); }, 0, 22));
  c.claim("CHAR.sl4", "1,1,3,4,7,9,14,17,24,29", series([](int d) { return dim_sl_invariants(2, 4, d); }, 0, 18));
  c.claim("CHAR.slstar4", "1,1,1,2,3,3,5,6,7,9", series([](int d) { return dim_slstar(2, 4, d); }, 0, 18));
  c.claim("CHAR.slstar5-d8", "4", dim_slstar(2, 5, 8).get_str());

  const std::map<int, std::string> s4 = {{2, "X1"}, {4, "X1+X3"}, {6, "2X1+X3"},
                                         {8, "3X1+2X3"}, {10, "3X1+3X3"}, {12, "5X1+4X3+X5"}};
  const std::map<int, std::string> s5 = {{2, "0"}, {4, "X1+X2"}, {6, "X7"}, {8, "4X1+3X2+3X3+X5"},
                                         {10, "X5+2X6+2X7"}, {12, "12X1+15X2+14X3+6X4+8X5+2X6+2X7"}};
  auto compact = [](std::string s) {
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    return s;
  };
  for (auto& [d, e] : s4)
    c.claim("CHAR.S4-decomp-d" + std::to_string(d), e, compact(format_decomposition(4, decompose_invariant_space(4, d))));
  for (auto& [d, e] : s5)
    c.claim("CHAR.S5-decomp-d" + std::to_string(d), e, compact(format_decomposition(5, decompose_invariant_space(5, d))));

  auto formulas = [](int q) {
    auto f = dim_formulas(q);
    return f.sl_deg4.get_str() + "," + f.slstar_deg4.get_str() + "," + f.sl_deg2.get_str();
  };
  c.claim("CHAR.dim-formulas-q4", "3,1,1", formulas(4));
  c.claim("CHAR.dim-formulas-q5", "5,1,0", formulas(5));
  // The floor((q+5)/6) closed form for SL* degree 4 is checked against
  // the character count beyond the range it is used on.
  std::vector<int> off;
  for (int q = 2; q <= 8; ++q) {
    auto f = dim_formulas(q);
    if (f.sl_deg4 != dim_sl_invariants(2, q, 4) || f.slstar_deg4 != dim_slstar(2, q, 4) ||
        f.sl_deg2 != dim_sl_invariants(2, q, 2))
      off.push_back(q);
  }
  c.claim("CHAR.dim-formulas-disagree-q<=8", "none", join(off), false);

  std::size_t orth = 0, pairs = 0;
  for (int d = 1; d <= 12; ++d) {
    std::vector<CharVector> chars;
    for (const auto& l : partitions(d)) chars.push_back(irreducible_character(l));
    for (std::size_t i = 0; i < chars.size(); ++i)
      for (std::size_t j = i; j < chars.size(); ++j, ++pairs)
        if (inner_product(chars[i], chars[j]) == (i == j ? 1 : 0)) ++orth;
  }
  c.count("CHAR.orthogonality-d<=12", pairs, orth, false);
}

void suite_graph_states(Ctx& c) {
  const char* states[] = {"graph5_a", "graph5_b", "graph5_c", "graph5_d"};
  const char* invs[] = {"P", "F", "T1_0", "T2_0", "T3_0"};
  const std::vector<std::vector<std::string>> table = {
      {"5", "0", "-1", "1", "4"},
      {"2", "0", "1/10", "-1/5", "-4/5"},
      {"-1", "0", "1/15", "-1/5", "8/5"},
      {"0", "0", "0", "0", "6"}};
  std::vector<std::vector<std::string>> raw(4), norm(4);
  for (int s = 0; s < 4; ++s) {
    const auto& st = named_state(states[s]);
    for (const char* name : invs) {
      const auto& inv = c.cat.get(name);
      if (c.exact()) {
        raw[s].push_back(inv.eval(*st.exact).to_string());
        norm[s].push_back(normalized_value(inv, *st.exact).to_string());
      } else {
        auto fl = to_float(*st.exact);
        Complex v = inv.eval(fl), w = normalized_value(inv, fl);
        auto snap = [&](Complex z, const std::string& target) {
          GaussQ t = parse_gauss(target);
          return std::abs(z - t.to_complex()) <= kIdentityTol * (1 + std::abs(z)) ? target : to_string(z);
        };
        const std::string& target = table[s][raw[s].size()];
        raw[s].push_back(snap(v, target));
        norm[s].push_back(snap(w, target));
      }
    }
  }
  std::string conv = raw == table ? "unnormalized" : norm == table ? "normalized" : "none";
  auto& cl = c.claim("GRAPH.convention", conv == "none" ? "unnormalized|normalized" : conv, conv);
  cl.note = "unnormalized values tried first";
  const auto& use = conv == "unnormalized" ? raw : norm;
  for (int s = 0; s < 4; ++s)
    for (int k = 0; k < 5; ++k)
      c.claim(std::string("GRAPH.") + (states[s] + 7) + "." + invs[k], table[s][k], use[s][k]);
  for (int s = 0; s < 4; ++s) {
    std::string tuple = "(";
    for (int k = 0; k < 5; ++k) tuple += (k ? "," : "") + raw[s][k];
    tuple += ")";
    c.claim(std::string("GRAPH.") + (states[s] + 7) + ".unnormalized", tuple, tuple, false, "recorded only");
  }
}

void suite_operators(Ctx& c) {
  const std::map<std::string, std::string> ids = {
      {"swap = 1/2 sum sigma_mu x sigma_mu", "OP.swap-pauli-sum"},
      {"(y.y)P = -1/2 (mm - y.y)", "OP.yy-swap"},
      {"(mm)P = -1/2 (mm + 3 y.y)", "OP.mm-swap"},
      {"(y.y)PP = y.y", "OP.yy-swap-twice"},
      {"(y.y.y)P12 P23 = 1/4 [y.y.y - cross - i eps tau.tau.tau]", "OP.yyy-P12P23"},
      {"(y.y.y)P23 P12 = 1/4 [y.y.y - cross + i eps tau.tau.tau]", "OP.yyy-P23P12"}};
  for (const auto& id : copy_permutation_identities()) {
    auto it = ids.find(id.name);
    std::string cid = it == ids.end() ? "OP." + id.name : it->second;
    std::string shape = std::to_string(id.lhs.size()) + "entries";
    c.claim(cid, "holds", id.holds() ? "holds" : "differs", it != ids.end() && it->second != "OP.swap-pauli-sum" &&
                                                                it->second != "OP.yy-swap-twice");
  }
  // (y.y)P written with the diagonal metric M = diag(1,-1,1,-1)/2.
  std::vector<std::pair<GaussQ, CopyOperator>> terms;
  const Op ops[] = {Op::S0, Op::S1, Op::S2, Op::S3};
  for (int mu = 0; mu < 4; ++mu) terms.emplace_back(GaussQ(Rational(kHalfM[mu], 2)), copy_product(2, {ops[mu], ops[mu]}));
  auto lhs = matmul(copy_product(2, {Op::S2, Op::S2}), copy_permutation(2, {1, 0}));
  c.claim("OP.yy-swap-M-form", "holds", lhs == lincomb(terms) ? "holds" : "differs");
  c.claim("OP.matrix-sizes", "16,64", std::to_string(lhs.size()) + "," +
                                         std::to_string(copy_product(3, {Op::S2, Op::S2, Op::S2}).size()), false);
}

void suite_stretch(Ctx& c) {
  std::vector<std::string> lists;
  std::vector<std::string> y14, y16;
  for (std::uint64_t k = 0; k < 3; ++k) {
    StretchOptions so;
    so.seed = c.opt.seed + 101 * k;
    so.log = [&c](const std::string& m) { c.log(m); };
    auto counts = generator_counts(so);
    std::vector<std::size_t> ys;
    for (const auto& g : counts)
      if (g.degree >= 4) ys.push_back(g.generators());
    lists.push_back(join(ys));
    for (const auto& g : counts) {
      if (g.degree == 14) y14.push_back(str(g.dim_v) + "-" + str(g.dim_u));
      if (g.degree == 16) y16.push_back(str(g.dim_v) + "-" + str(g.dim_u));
    }
  }
  auto agree = [](const std::vector<std::string>& v) {
    return std::all_of(v.begin(), v.end(), [&](const std::string& x) { return x == v[0]; }) ? v[0] : join(v);
  };
  c.claim("STRETCH.generators-d4..16", "5,1,21,10,87,145,247", agree(lists), false, "float, 3 seeds");
  c.claim("STRETCH.V14-U14", "231-86", agree(y14), false);
  c.claim("STRETCH.V16-U16", "1313-1066", agree(y16), false);
}

struct SuiteEntry {
  SuiteInfo info;
  std::function<void(Ctx&)> run;
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> r = {
      {{"sl-invariance", "comb property and SL-invariance of every catalog entry", true}, suite_sl_invariance},
      {{"four-qubit-identities", "four-qubit relation suite", true}, suite_four_qubit},
      {{"filters", "vanishing on product states, per bipartition", true}, suite_filters},
      {{"five-qubit-low", "five-qubit degree 4 and 6", true}, suite_five_low},
      {{"degree-8", "five-qubit degree 8 spans", true}, suite_degree8},
      {{"degree-10", "five-qubit degree 10 spans", true}, suite_degree10},
      {{"degree-12", "five-qubit degree 12 basis ledger", false}, suite_degree12},
      {{"characters", "symmetric-group characters and Hilbert coefficients", true}, suite_characters},
      {{"graph-states", "five-qubit graph state table", true}, suite_graph_states},
      {{"operator-identities", "copy-permutation operator identities", true}, suite_operators},
      {{"stretch", "degree 14/16 generator counts, float", false}, suite_stretch},
  };
  return r;
}

}  // namespace

const std::vector<SuiteInfo>& suite_list() {
  static const std::vector<SuiteInfo> l = [] {
    std::vector<SuiteInfo> v;
    for (const auto& e : registry()) v.push_back(e.info);
    return v;
  }();
  return l;
}

std::vector<ClaimResult> run_suite(const std::string& name, const SuiteOptions& opt) {
  for (const auto& e : registry())
    if (e.info.name == name) {
      Ctx c;
      c.opt = opt;
      e.run(c);
      return c.out;
    }
  std::string names;
  for (const auto& e : registry()) names += (names.empty() ? "" : ", ") + e.info.name;
  throw std::out_of_range("unknown suite '" + name + "' (known: " + names + ")");
}

}  // namespace qinv
