#include "qinv/invariant.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace qinv {

struct Invariant::Node {
  Kind kind;
  int q = 0;
  int degree = 0;
  std::optional<CombSpec> comb;
  std::optional<ContractionPlan> plan;
  std::optional<EpsNetwork> net;
  std::optional<OmegaRecipe> recipe;
  std::array<int, 16> det{};
  std::vector<std::pair<GaussQ, Invariant>> terms;
  std::vector<Invariant> factors;
  int power = 1;
  QubitPermutation perm;
  SymMode mode = SymMode::Sym;
};

Invariant Invariant::comb(CombSpec spec) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Comb;
  n->q = spec.qubits();
  n->degree = spec.degree();
  n->plan = plan_contraction(spec);
  n->comb = std::move(spec);
  return Invariant(std::move(n));
}

Invariant Invariant::network(EpsNetwork net) {
  auto diag = validate_network(net);
  if (!diag.valid) throw std::invalid_argument("invariant: invalid network\n" + diag.report());
  auto n = std::make_shared<Node>();
  n->kind = Kind::Network;
  n->q = net.qubits();
  n->degree = net.degree();
  n->net = std::move(net);
  return Invariant(std::move(n));
}

Invariant Invariant::recipe(OmegaRecipe r) {
  if (!std::all_of(r.multidegrees.back().begin(), r.multidegrees.back().end(),
                   [](int k) { return k == 0; }))
    throw std::invalid_argument("invariant: recipe does not end in a scalar");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Recipe;
  n->q = r.qubits;
  n->degree = r.degree;
  n->recipe = std::move(r);
  return Invariant(std::move(n));
}

Invariant Invariant::det4(std::array<int, 16> idx) {
  for (int v : idx)
    if (v < 0 || v > 15) throw std::invalid_argument("det4: amplitude index outside 0..15");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Det;
  n->q = 4;
  n->degree = 4;
  n->det = idx;
  return Invariant(std::move(n));
}

Invariant Invariant::sum(std::vector<std::pair<GaussQ, Invariant>> terms) {
  if (terms.empty()) throw std::invalid_argument("invariant: empty sum");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sum;
  n->q = terms[0].second.qubits();
  n->degree = terms[0].second.degree();
  for (const auto& [c, t] : terms) {
    if (t.qubits() != n->q) throw std::invalid_argument("invariant: sum mixes qubit counts");
    if (t.degree() != n->degree)
      throw std::invalid_argument("invariant: sum mixes degrees " + std::to_string(n->degree) +
                                  " and " + std::to_string(t.degree()));
  }
  n->terms = std::move(terms);
  return Invariant(std::move(n));
}

Invariant Invariant::product(std::vector<Invariant> factors) {
  if (factors.empty()) throw std::invalid_argument("invariant: empty product");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Product;
  n->q = factors[0].qubits();
  for (const auto& f : factors) {
    if (f.qubits() != n->q) throw std::invalid_argument("invariant: product mixes qubit counts");
    n->degree += f.degree();
  }
  n->factors = std::move(factors);
  return Invariant(std::move(n));
}

Invariant Invariant::power(Invariant base, int k) {
  if (k < 1) throw std::invalid_argument("invariant: power must be positive");
  if (k == 1) return base;
  auto n = std::make_shared<Node>();
  n->kind = Kind::Power;
  n->q = base.qubits();
  n->degree = base.degree() * k;
  n->power = k;
  n->factors = {std::move(base)};
  return Invariant(std::move(n));
}

Invariant Invariant::permuted(const QubitPermutation& pi, Invariant base) {
  if (pi.size() != base.qubits()) throw std::invalid_argument("invariant: permutation size mismatch");
  if (base.kind() == Kind::Comb) return comb(permute_spec(pi, base.comb_spec()));
  if (base.kind() == Kind::Network) return network(permute_network(pi, base.eps_network()));
  auto n = std::make_shared<Node>();
  n->kind = Kind::Permuted;
  n->q = base.qubits();
  n->degree = base.degree();
  n->perm = pi;
  n->factors = {std::move(base)};
  return Invariant(std::move(n));
}

Invariant Invariant::symmetrized(Invariant base, SymMode mode) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Symmetrized;
  n->q = base.qubits();
  n->degree = base.degree();
  n->mode = mode;
  n->factors = {std::move(base)};
  return Invariant(std::move(n));
}

Invariant Invariant::scaled(const GaussQ& c) const { return sum({{c, *this}}); }

Invariant::Kind Invariant::kind() const { return node_->kind; }
int Invariant::qubits() const { return node_->q; }
int Invariant::degree() const { return node_->degree; }

const CombSpec& Invariant::comb_spec() const {
  if (node_->kind != Kind::Comb) throw std::logic_error("invariant: not a comb leaf");
  return *node_->comb;
}

const EpsNetwork& Invariant::eps_network() const {
  if (node_->kind != Kind::Network) throw std::logic_error("invariant: not a network leaf");
  return *node_->net;
}

std::string Invariant::to_string() const {
  const Node& n = *node_;
  std::ostringstream os;
  switch (n.kind) {
    case Kind::Comb: os << "comb{" << n.comb->to_string() << "}"; break;
    case Kind::Network: os << "net{" << n.net->factors() << " factors}"; break;
    case Kind::Recipe: os << "recipe{" << n.recipe->steps.size() << " steps}"; break;
    case Kind::Det:
      os << "det4{";
      for (int k = 0; k < 16; ++k) os << (k == 0 ? "" : (k % 4 == 0 ? "; " : " ")) << n.det[k];
      os << "}";
      break;
    case Kind::Sum:
      os << "(";
      for (std::size_t k = 0; k < n.terms.size(); ++k) {
        if (k) os << " + ";
        if (n.terms[k].first != GaussQ(1)) os << "(" << n.terms[k].first << ")*";
        os << n.terms[k].second.to_string();
      }
      os << ")";
      break;
    case Kind::Product:
      for (std::size_t k = 0; k < n.factors.size(); ++k)
        os << (k ? "*" : "") << n.factors[k].to_string();
      break;
    case Kind::Power: os << n.factors[0].to_string() << "^" << n.power; break;
    case Kind::Permuted: os << "perm{" << n.perm.to_cycles() << "}(" << n.factors[0].to_string() << ")"; break;
    case Kind::Symmetrized:
      os << (n.mode == SymMode::Sym ? "sym(" : "asym(") << n.factors[0].to_string() << ")";
      break;
  }
  return os.str();
}

template <class T>
T det4x4(const std::array<T, 16>& m) {
  auto at = [&](int r, int c) -> const T& { return m[4 * r + c]; };
  // Expansion by 2x2 minors of the first two rows (Laplace).
  T s0 = at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
  T s1 = at(0, 0) * at(1, 2) - at(0, 2) * at(1, 0);
  T s2 = at(0, 0) * at(1, 3) - at(0, 3) * at(1, 0);
  T s3 = at(0, 1) * at(1, 2) - at(0, 2) * at(1, 1);
  T s4 = at(0, 1) * at(1, 3) - at(0, 3) * at(1, 1);
  T s5 = at(0, 2) * at(1, 3) - at(0, 3) * at(1, 2);
  T c5 = at(2, 2) * at(3, 3) - at(2, 3) * at(3, 2);
  T c4 = at(2, 1) * at(3, 3) - at(2, 3) * at(3, 1);
  T c3 = at(2, 1) * at(3, 2) - at(2, 2) * at(3, 1);
  T c2 = at(2, 0) * at(3, 3) - at(2, 3) * at(3, 0);
  T c1 = at(2, 0) * at(3, 2) - at(2, 2) * at(3, 0);
  T c0 = at(2, 0) * at(3, 1) - at(2, 1) * at(3, 0);
  return s0 * c5 - s1 * c4 + s2 * c3 + s3 * c2 - s4 * c1 + s5 * c0;
}

template <class T>
T Invariant::eval(const BasicState<T>& psi) const {
  const Node& n = *node_;
  if (psi.qubits() != n.q)
    throw std::invalid_argument("invariant: expects " + std::to_string(n.q) + " qubits, state has " +
                                std::to_string(psi.qubits()));
  switch (n.kind) {
    case Kind::Comb: return eval_comb<T>(*n.comb, *n.plan, psi);
    case Kind::Network: return eval_network<T>(*n.net, psi);
    case Kind::Recipe: return run_recipe<T>(*n.recipe, psi);
    case Kind::Det: {
      std::array<T, 16> m;
      for (int k = 0; k < 16; ++k) m[k] = psi[n.det[k]];
      return det4x4(m);
    }
    case Kind::Sum: {
      T acc = from_rational<T>(0);
      for (const auto& [c, t] : n.terms) acc += from_gauss<T>(c) * t.eval(psi);
      return acc;
    }
    case Kind::Product: {
      T acc = from_rational<T>(1);
      for (const auto& f : n.factors) acc *= f.eval(psi);
      return acc;
    }
    case Kind::Power: {
      T b = n.factors[0].eval(psi);
      T acc = b;
      for (int k = 1; k < n.power; ++k) acc *= b;
      return acc;
    }
    case Kind::Permuted: return n.factors[0].eval(permute_state(n.perm.inverse(), psi));
    case Kind::Symmetrized: {
      const Invariant& base = n.factors[0];
      return symmetrized_value<T>([&](const BasicState<T>& x) { return base.eval(x); }, psi, n.mode);
    }
  }
  throw std::logic_error("invariant: unknown node");
}

Invariant operator+(const Invariant& a, const Invariant& b) {
  return Invariant::sum({{GaussQ(1), a}, {GaussQ(1), b}});
}
Invariant operator-(const Invariant& a, const Invariant& b) {
  return Invariant::sum({{GaussQ(1), a}, {GaussQ(-1), b}});
}
Invariant operator*(const Invariant& a, const Invariant& b) { return Invariant::product({a, b}); }

std::vector<InvariantOrbitElement> invariant_orbit(const Invariant& inv, std::size_t max) {
  std::vector<InvariantOrbitElement> out;
  if (inv.kind() == Invariant::Kind::Comb) {
    for (auto& e : comb_orbit(inv.comb_spec(), max)) out.push_back({e.perm, Invariant::comb(e.spec)});
    return out;
  }
  if (inv.kind() == Invariant::Kind::Network) {
    for (auto& e : network_orbit(inv.eps_network(), max)) out.push_back({e.perm, Invariant::network(e.net)});
    return out;
  }
  for (const auto& pi : all_permutations(inv.qubits())) {
    out.push_back({pi, Invariant::permuted(pi, inv)});
    if (max && out.size() >= max) break;
  }
  return out;
}

template GaussQ Invariant::eval(const ExactState&) const;
template Complex Invariant::eval(const FloatState&) const;
template GaussQ det4x4(const std::array<GaussQ, 16>&);
template Complex det4x4(const std::array<Complex, 16>&);

}  // namespace qinv
