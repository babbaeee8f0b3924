#include "qinv/epsilon.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qinv {

EpsNetwork::EpsNetwork(int q, int d, std::vector<EpsSlot> slots, GaussQ prefactor)
    : q_(q), d_(d), slots_(std::move(slots)), prefactor_(std::move(prefactor)) {
  if (q < 1 || q > BasicState<GaussQ>::kMaxQubits)
    throw std::invalid_argument("network: qubit count " + std::to_string(q) + " unsupported");
  if (d < 1) throw std::invalid_argument("network: needs at least one factor");
  if (slots_.size() != static_cast<std::size_t>(q * d))
    throw std::invalid_argument("network: slot count does not match d*q");
}

EpsNetwork EpsNetwork::with_prefactor(GaussQ p) const { return EpsNetwork(q_, d_, slots_, std::move(p)); }

EpsNetwork EpsNetwork::relabeled(int factor, int col, int label) const {
  auto slots = slots_;
  slots.at(factor * q_ + col).label = label;
  return EpsNetwork(q_, d_, std::move(slots), prefactor_);
}

std::string EpsNetwork::to_string() const {
  std::ostringstream os;
  if (prefactor_ != GaussQ(1)) os << "prefactor=" << prefactor_ << "\n";
  for (int f = 0; f < d_; ++f) {
    for (int c = 0; c < q_; ++c) {
      const auto& s = at(f, c);
      os << (c ? " " : "") << (s.upper ? 'u' : 'l') << s.label;
    }
    os << "\n";
  }
  return os.str();
}

EpsNetwork EpsNetwork::canonical() const {
  // Sort factors by their lower/upper pattern, then renumber labels.
  std::vector<int> order(d_);
  for (int f = 0; f < d_; ++f) order[f] = f;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    for (int c = 0; c < q_; ++c)
      if (at(a, c).upper != at(b, c).upper) return !at(a, c).upper;
    return false;
  });
  std::map<int, int> names;
  std::vector<EpsSlot> out;
  for (int f : order)
    for (int c = 0; c < q_; ++c) {
      EpsSlot s = at(f, c);
      auto it = names.find(s.label);
      if (it == names.end()) it = names.emplace(s.label, static_cast<int>(names.size()) + 1).first;
      s.label = it->second;
      out.push_back(s);
    }
  return EpsNetwork(q_, d_, std::move(out), prefactor_);
}

EpsNetwork parse_network(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  GaussQ prefactor(1);
  std::vector<std::vector<EpsSlot>> rows;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line.rfind("prefactor=", 0) == 0) {
      prefactor = parse_gauss(line.substr(10));
      continue;
    }
    std::istringstream ls(line);
    std::string tok;
    std::vector<EpsSlot> row;
    while (ls >> tok) {
      if (tok.size() < 2 || (tok[0] != 'l' && tok[0] != 'u') ||
          !std::all_of(tok.begin() + 1, tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw std::invalid_argument("network line " + std::to_string(lineno) + ": bad token '" +
                                    tok + "'");
      row.push_back({std::stoi(tok.substr(1)), tok[0] == 'u'});
    }
    if (!rows.empty() && row.size() != rows[0].size())
      throw std::invalid_argument("network line " + std::to_string(lineno) + ": expected " +
                                  std::to_string(rows[0].size()) + " slots");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("network: no factors");
  std::vector<EpsSlot> slots;
  for (auto& r : rows) slots.insert(slots.end(), r.begin(), r.end());
  return EpsNetwork(static_cast<int>(rows[0].size()), static_cast<int>(rows.size()),
                    std::move(slots), prefactor);
}

std::string NetworkDefect::describe() const {
  std::ostringstream os;
  os << "label i" << label << " occurs " << cells.size() << " time" << (cells.size() == 1 ? "" : "s")
     << " (" << lower << " lower, " << upper << " upper)";
  if (spans_columns) os << " across several columns";
  os << " at";
  for (auto [f, c] : cells) os << " (factor " << f + 1 << ", column " << c + 1 << ")";
  return os.str();
}

std::string NetworkRelabel::describe() const {
  return "relabel factor " + std::to_string(factor + 1) + ", column " + std::to_string(column + 1) +
         ": i" + std::to_string(from) + " -> i" + std::to_string(to);
}

std::string NetworkDiagnostic::report() const {
  std::ostringstream os;
  os << (valid ? "valid" : "invalid") << "\n";
  for (const auto& d : defects) os << "  defect: " << d.describe() << "\n";
  for (const auto& s : suggestions) os << "  suggest: " << s.describe() << "\n";
  return os.str();
}

namespace {

std::map<int, NetworkDefect> collect(const EpsNetwork& net) {
  std::map<int, NetworkDefect> by_label;
  for (int f = 0; f < net.factors(); ++f)
    for (int c = 0; c < net.qubits(); ++c) {
      const auto& s = net.at(f, c);
      auto& d = by_label[s.label];
      d.label = s.label;
      d.cells.emplace_back(f, c);
      (s.upper ? d.upper : d.lower)++;
    }
  for (auto& [label, d] : by_label)
    for (auto [f, c] : d.cells)
      if (c != d.cells[0].second) d.spans_columns = true;
  return by_label;
}

bool healthy(const NetworkDefect& d) {
  return d.cells.size() == 2 && !d.spans_columns && d.lower == 1 && d.upper == 1;
}

std::vector<NetworkDefect> defects_of(const EpsNetwork& net) {
  std::vector<NetworkDefect> out;
  for (auto& [label, d] : collect(net))
    if (!healthy(d)) out.push_back(d);
  return out;
}

}  // namespace

NetworkDiagnostic validate_network(const EpsNetwork& net) {
  NetworkDiagnostic diag;
  diag.defects = defects_of(net);
  diag.valid = diag.defects.empty();
  if (diag.valid) return diag;
  // Try moving one occurrence of an over-used label onto an under-used one
  // in the same column; keep moves that fix both.
  for (const auto& over : diag.defects) {
    if (over.cells.size() <= 2) continue;
    for (const auto& under : diag.defects) {
      if (under.cells.size() >= 2 || &under == &over) continue;
      for (auto [f, c] : over.cells) {
        if (c != under.cells[0].second) continue;
        auto fixed = net.relabeled(f, c, under.label);
        auto after = collect(fixed);
        if (healthy(after[over.label]) && healthy(after[under.label]))
          diag.suggestions.push_back({f, c, over.label, under.label});
      }
    }
  }
  return diag;
}

// ---------------------------------------------------------------------------
// Network evaluation

namespace {

template <class T>
struct BitTensor {
  std::vector<int> labels;
  std::vector<T> data;
};

std::vector<int> sorted_copy(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<int> set_symdiff(const std::vector<int>& a, const std::vector<int>& b) {
  auto sa = sorted_copy(a), sb = sorted_copy(b);
  std::vector<int> out;
  std::set_symmetric_difference(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(out));
  return out;
}

std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
  auto sa = sorted_copy(a), sb = sorted_copy(b);
  std::vector<int> out;
  std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(out));
  return out;
}

template <class T>
BitTensor<T> contract_bits(const BitTensor<T>& a, const BitTensor<T>& b) {
  auto all = set_union(a.labels, b.labels);
  auto result = set_symdiff(a.labels, b.labels);
  auto bit_of = [](const std::vector<int>& labels, int label) -> std::uint64_t {
    for (std::size_t k = 0; k < labels.size(); ++k)
      if (labels[k] == label) return std::uint64_t{1} << k;
    return 0;
  };
  const std::size_t n = all.size();
  std::vector<std::uint64_t> sa(n), sb(n), sr(n);
  for (std::size_t k = 0; k < n; ++k) {
    sa[k] = bit_of(a.labels, all[k]);
    sb[k] = bit_of(b.labels, all[k]);
    sr[k] = bit_of(result, all[k]);
  }
  BitTensor<T> out{result, std::vector<T>(std::size_t{1} << result.size(), T(0))};
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t it = 0; it < total; ++it) {
    std::uint64_t ia = 0, ib = 0, ir = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (it >> k & 1) {
        ia |= sa[k];
        ib |= sb[k];
        ir |= sr[k];
      }
    madd(out.data[ir], a.data[ia], b.data[ib]);
  }
  return out;
}

template <class T>
T network_core(const EpsNetwork& net, std::span<const T> amps) {
  const int q = net.qubits();
  std::vector<BitTensor<T>> live;
  for (int f = 0; f < net.factors(); ++f) {
    BitTensor<T> t;
    t.data.assign(amps.begin(), amps.end());
    for (int c = 0; c < q; ++c) {
      t.labels.push_back(net.at(f, c).label);
      if (!net.at(f, c).upper) continue;
      // Absorb eps: B'[0] = B[1], B'[1] = -B[0].
      const std::size_t bit = std::size_t{1} << c;
      for (std::size_t n = 0; n < t.data.size(); ++n) {
        if (n & bit) continue;
        T lo = t.data[n];
        t.data[n] = t.data[n | bit];
        t.data[n | bit] = -lo;
      }
    }
    live.push_back(std::move(t));
  }
  T scalar(1);
  while (live.size() > 1) {
    std::size_t best_a = 0, best_b = 0;
    std::size_t best_size = SIZE_MAX, best_cost = SIZE_MAX;
    bool found = false;
    for (std::size_t a = 0; a < live.size(); ++a)
      for (std::size_t b = a + 1; b < live.size(); ++b) {
        std::size_t common = live[a].labels.size() + live[b].labels.size() -
                             set_union(live[a].labels, live[b].labels).size();
        if (common == 0) continue;
        std::size_t size = set_symdiff(live[a].labels, live[b].labels).size();
        std::size_t cost = set_union(live[a].labels, live[b].labels).size();
        if (!found || size < best_size || (size == best_size && cost < best_cost)) {
          found = true;
          best_a = a;
          best_b = b;
          best_size = size;
          best_cost = cost;
        }
      }
    if (!found) break;
    auto merged = contract_bits(live[best_a], live[best_b]);
    live.erase(live.begin() + best_b);
    live.erase(live.begin() + best_a);
    if (merged.labels.empty()) {
      scalar = scalar * merged.data[0];
    } else {
      live.push_back(std::move(merged));
    }
  }
  for (const auto& t : live) {
    if (!t.labels.empty()) throw std::logic_error("network: open labels after contraction");
    scalar = scalar * t.data[0];
  }
  return scalar;
}

void require_valid(const EpsNetwork& net, int q) {
  if (net.qubits() != q)
    throw std::invalid_argument("eval_network: network has " + std::to_string(net.qubits()) +
                                " qubits, state has " + std::to_string(q));
  auto diag = validate_network(net);
  if (!diag.valid) {
    std::string msg = "eval_network: invalid pairing;";
    for (const auto& d : diag.defects) msg += " " + d.describe() + ";";
    throw std::invalid_argument(msg);
  }
}

}  // namespace

template <>
GaussQ eval_network<GaussQ>(const EpsNetwork& net, const ExactState& psi) {
  require_valid(net, psi.qubits());
  Integer den = 1;
  for (const auto& a : psi.amplitudes()) {
    Integer l = a.denominator_lcm();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), l.get_mpz_t());
  }
  std::vector<GaussZ> z;
  z.reserve(psi.dim());
  for (const auto& a : psi.amplitudes()) {
    Rational re = a.re() * den, im = a.im() * den;
    z.emplace_back(re.get_num(), im.get_num());
  }
  GaussZ raw = network_core<GaussZ>(net, z);
  Integer scale;
  mpz_pow_ui(scale.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(net.factors()));
  Rational inv(1, scale);
  inv.canonicalize();
  return GaussQ(Rational(raw.re) * inv, Rational(raw.im) * inv) * net.prefactor();
}

template <>
Complex eval_network<Complex>(const EpsNetwork& net, const FloatState& psi) {
  require_valid(net, psi.qubits());
  return network_core<Complex>(net, psi.amplitudes()) * net.prefactor().to_complex();
}

// ---------------------------------------------------------------------------
// Covariants and transvectants

template <class T>
BasicCovariant<T>::BasicCovariant(std::vector<int> multidegree) : k_(std::move(multidegree)) {
  std::size_t n = 1;
  for (int k : k_) {
    if (k < 0) throw std::invalid_argument("covariant: negative degree");
    n *= static_cast<std::size_t>(k + 1);
  }
  coeffs_.assign(n, from_rational<T>(0));
}

template <class T>
bool BasicCovariant<T>::is_scalar() const {
  return std::all_of(k_.begin(), k_.end(), [](int k) { return k == 0; });
}

template <class T>
std::size_t BasicCovariant<T>::index(const std::vector<int>& w) const {
  std::size_t n = 0, stride = 1;
  for (std::size_t j = 0; j < k_.size(); ++j) {
    n += static_cast<std::size_t>(w[j]) * stride;
    stride *= static_cast<std::size_t>(k_[j] + 1);
  }
  return n;
}

namespace {

Integer binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

// Odometer over 0 <= w_j <= hi_j.
bool next_multi(std::vector<int>& w, const std::vector<int>& lo, const std::vector<int>& hi) {
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (w[j] < hi[j]) {
      ++w[j];
      return true;
    }
    w[j] = lo[j];
  }
  return false;
}

}  // namespace

template <class T>
T BasicCovariant<T>::at_ones() const {
  T acc = from_rational<T>(0);
  std::vector<int> w(k_.size(), 0), lo(k_.size(), 0);
  do {
    Integer mult = 1;
    for (std::size_t j = 0; j < k_.size(); ++j) mult *= binom(k_[j], w[j]);
    acc += coeffs_[index(w)] * from_rational<T>(Rational(mult));
  } while (next_multi(w, lo, k_));
  return acc;
}

template <class T>
BasicCovariant<T> ground_form(const BasicState<T>& psi) {
  BasicCovariant<T> f(std::vector<int>(psi.qubits(), 1));
  for (std::size_t n = 0; n < psi.dim(); ++n) f[n] = psi[n];
  return f;
}

template <class T>
BasicCovariant<T> transvectant(const BasicCovariant<T>& p, const BasicCovariant<T>& q,
                               const std::vector<int>& e) {
  const int nq = p.qubits();
  if (q.qubits() != nq || static_cast<int>(e.size()) != nq)
    throw std::invalid_argument("transvectant: qubit count mismatch");
  const auto& kp = p.multidegree();
  const auto& kq = q.multidegree();
  std::vector<int> kr(nq), ap(nq), aq(nq);
  for (int j = 0; j < nq; ++j) {
    if (e[j] < 0 || e[j] > std::min(kp[j], kq[j]))
      throw std::invalid_argument("transvectant: exponent " + std::to_string(e[j]) + " on qubit " +
                                  std::to_string(j + 1) + " exceeds degrees (" +
                                  std::to_string(kp[j]) + ", " + std::to_string(kq[j]) + ")");
    ap[j] = kp[j] - e[j];
    aq[j] = kq[j] - e[j];
    kr[j] = ap[j] + aq[j];
  }
  // inner(u, v) = sum_s prod_j C(e_j, s_j)(-1)^{s_j} P(u+s) Q(v+e-s)
  BasicCovariant<T> out(kr);
  std::vector<int> zero(nq, 0);
  std::vector<int> w(nq, 0);
  std::vector<int> pu(nq), qv(nq);
  do {
    T acc = from_rational<T>(0);
    std::vector<int> ulo(nq), uhi(nq);
    for (int j = 0; j < nq; ++j) {
      ulo[j] = std::max(0, w[j] - aq[j]);
      uhi[j] = std::min(w[j], ap[j]);
    }
    std::vector<int> u = ulo;
    do {
      Rational sym = 1;
      for (int j = 0; j < nq; ++j)
        sym *= Rational(binom(ap[j], u[j]) * binom(aq[j], w[j] - u[j]), binom(kr[j], w[j]));
      T inner = from_rational<T>(0);
      std::vector<int> s(nq, 0);
      do {
        Integer c = 1;
        int parity = 0;
        for (int j = 0; j < nq; ++j) {
          c *= binom(e[j], s[j]);
          parity += s[j];
          pu[j] = u[j] + s[j];
          qv[j] = w[j] - u[j] + e[j] - s[j];
        }
        if (parity & 1) c = -c;
        inner += p[p.index(pu)] * q[q.index(qv)] * from_rational<T>(Rational(c));
      } while (next_multi(s, zero, e));
      acc += inner * from_rational<T>(sym);
    } while (next_multi(u, ulo, uhi));
    out[out.index(w)] = acc;
  } while (next_multi(w, zero, kr));
  return out;
}

// ---------------------------------------------------------------------------
// Recipes

OmegaRecipe parse_recipe(std::string_view text) {
  static const std::regex step_re(
      R"(^\s*([A-Za-z_][A-Za-z0-9_]*)\s*:=\s*\(\s*([A-Za-z_][A-Za-z0-9_]*)\s*,\s*([A-Za-z_][A-Za-z0-9_]*)\s*\)\s*\^\s*\(?\s*([0-9, ]+?)\s*\)?\s*$)");
  static const std::regex subscript_re(R"(^[A-Za-z_]+([0-9]+)$)");
  OmegaRecipe r;
  std::map<std::string, std::vector<int>> degrees;
  std::map<std::string, int> ground_count;
  std::istringstream in{std::string(text)};
  std::string line;
  int index = 0;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    ++index;
    auto fail = [&](const std::string& why) {
      throw std::invalid_argument("recipe step " + std::to_string(index) + ": " + why);
    };
    std::smatch m;
    if (!std::regex_match(line, m, step_re)) fail("cannot parse '" + line + "'");
    OmegaStep step{m[1], m[2], m[3], {}};
    std::string ex = m[4];
    if (ex.find(',') != std::string::npos) {
      std::istringstream es(ex);
      std::string part;
      while (std::getline(es, part, ','))
        if (part.find_first_not_of(' ') != std::string::npos) step.exponents.push_back(std::stoi(part));
    } else {
      for (char c : ex)
        if (c != ' ') step.exponents.push_back(c - '0');
    }
    if (r.qubits == 0) {
      r.qubits = static_cast<int>(step.exponents.size());
      degrees["f"] = std::vector<int>(r.qubits, 1);
      ground_count["f"] = 1;
    }
    if (static_cast<int>(step.exponents.size()) != r.qubits)
      fail("exponent vector has " + std::to_string(step.exponents.size()) + " entries, expected " +
           std::to_string(r.qubits));
    if (step.name == "f" || degrees.count(step.name)) fail("name '" + step.name + "' reused");
    for (const auto* operand : {&step.left, &step.right})
      if (!degrees.count(*operand)) fail("unknown operand '" + *operand + "'");
    const auto& dl = degrees[step.left];
    const auto& dr = degrees[step.right];
    std::vector<int> d(r.qubits);
    for (int j = 0; j < r.qubits; ++j) {
      if (step.exponents[j] > std::min(dl[j], dr[j]))
        fail("exponent on qubit " + std::to_string(j + 1) + " exceeds operand degrees");
      d[j] = dl[j] + dr[j] - 2 * step.exponents[j];
    }
    std::smatch sm;
    if (std::regex_match(step.name, sm, subscript_re) &&
        static_cast<int>(sm[1].length()) == r.qubits) {
      std::string want = sm[1];
      std::string got;
      for (int k : d) got += std::to_string(k);
      if (want != got) fail("name '" + step.name + "' implies multidegree " + want + ", got " + got);
    }
    degrees[step.name] = d;
    ground_count[step.name] = ground_count[step.left] + ground_count[step.right];
    r.multidegrees.push_back(d);
    r.steps.push_back(std::move(step));
  }
  if (r.steps.empty()) throw std::invalid_argument("recipe: no steps");
  r.degree = ground_count[r.steps.back().name];
  return r;
}

template <class T>
BasicCovariant<T> run_recipe_covariant(const OmegaRecipe& r, const BasicState<T>& psi) {
  if (r.steps.empty()) throw std::invalid_argument("recipe: no steps");
  if (psi.qubits() != r.qubits)
    throw std::invalid_argument("run_recipe: recipe for " + std::to_string(r.qubits) +
                                " qubits, state has " + std::to_string(psi.qubits()));
  std::map<std::string, BasicCovariant<T>> memo;
  memo.emplace("f", ground_form(psi));
  for (const auto& step : r.steps)
    memo[step.name] = transvectant(memo.at(step.left), memo.at(step.right), step.exponents);
  return memo.at(r.steps.back().name);
}

template <class T>
T run_recipe(const OmegaRecipe& r, const BasicState<T>& psi) {
  auto c = run_recipe_covariant(r, psi);
  if (!c.is_scalar())
    throw std::invalid_argument("run_recipe: final step '" + r.steps.back().name +
                                "' is not of multidegree zero");
  return c[0];
}

// ---------------------------------------------------------------------------
// Comb -> networks

std::vector<EpsNetwork> comb_to_networks(const CombSpec& spec) {
  const int q = spec.qubits(), m = spec.copies();
  // Factor 2k is the left copy of row k, 2k+1 the right one.
  struct Bond {
    int lower_factor, upper_factor, column;
  };
  std::vector<Bond> fixed;
  int sigma2 = 0;
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < q; ++c) {
      const auto& t = spec.at(r, c);
      if (t.is_label()) continue;
      if (t.op != Op::S2)
        throw std::invalid_argument("comb_to_networks: only sigma_2 and labels are supported (" +
                                    std::string(1, op_symbol(t.op)) + " at row " +
                                    std::to_string(r + 1) + ")");
      fixed.push_back({2 * r, 2 * r + 1, c});
      ++sigma2;
    }
  const auto& labels = spec.labels();
  const std::size_t t = labels.size();
  GaussQ base = spec.prefactor();
  for (int k = 0; k < sigma2; ++k) base = base * GaussQ(0, -1);

  std::vector<EpsNetwork> out;
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << t); ++choice) {
    std::vector<Bond> bonds = fixed;
    GaussQ coeff = base;
    for (std::size_t k = 0; k < t; ++k) {
      const auto& l = labels[k];
      int p = l.row_a, r = l.row_b;
      if (choice >> k & 1) {
        // 2 eps_{a b'} eps_{a' b}
        bonds.push_back({2 * p, 2 * r + 1, l.column});
        bonds.push_back({2 * r, 2 * p + 1, l.column});
        coeff = coeff * GaussQ(2);
      } else {
        // -eps_{a b} eps_{a' b'}
        bonds.push_back({2 * p, 2 * p + 1, l.column});
        bonds.push_back({2 * r, 2 * r + 1, l.column});
        coeff = -coeff;
      }
    }
    std::vector<EpsSlot> slots(static_cast<std::size_t>(2 * m * q));
    int next = 1;
    for (const auto& b : bonds) {
      slots[b.lower_factor * q + b.column] = {next, false};
      slots[b.upper_factor * q + b.column] = {next, true};
      ++next;
    }
    out.emplace_back(q, 2 * m, std::move(slots), coeff);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Copy-permutation operators

namespace {

CopyOperator kron(const CopyOperator& a, std::size_t na, const CopyOperator& b, std::size_t nb) {
  CopyOperator out(na * nb * na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l)
          out[(i * nb + k) * (na * nb) + (j * nb + l)] = a[i * na + j] * b[k * nb + l];
  return out;
}

std::size_t side(const CopyOperator& a) {
  std::size_t n = 1;
  while (n * n < a.size()) ++n;
  return n;
}

}  // namespace

CopyOperator copy_product(int copies, const std::vector<Op>& ops) {
  if (static_cast<int>(ops.size()) != copies) throw std::invalid_argument("copy_product: size");
  CopyOperator out{GaussQ(1)};
  std::size_t n = 1;
  for (Op op : ops) {
    auto m = op_matrix<GaussQ>(op);
    out = kron(out, n, CopyOperator(m.begin(), m.end()), 2);
    n *= 2;
  }
  return out;
}

CopyOperator copy_comb(int copies, int a, int b) {
  std::vector<std::pair<GaussQ, CopyOperator>> terms;
  for (int mu : {0, 1, 3}) {
    std::vector<Op> ops(copies, Op::S0);
    ops[a] = ops[b] = static_cast<Op>(mu);
    terms.emplace_back(GaussQ(kMetric[mu]), copy_product(copies, ops));
  }
  return lincomb(terms);
}

CopyOperator copy_permutation(int copies, const std::vector<int>& perm) {
  const std::size_t n = std::size_t{1} << copies;
  CopyOperator out(n * n, GaussQ(0));
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t y = 0;
    for (int k = 0; k < copies; ++k) {
      int bit = x >> (copies - 1 - k) & 1;
      y |= static_cast<std::size_t>(bit) << (copies - 1 - perm[k]);
    }
    out[y * n + x] = GaussQ(1);
  }
  return out;
}

CopyOperator matmul(const CopyOperator& a, const CopyOperator& b) {
  const std::size_t n = side(a);
  CopyOperator out(n * n, GaussQ(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i * n + k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] += a[i * n + k] * b[k * n + j];
    }
  return out;
}

CopyOperator lincomb(const std::vector<std::pair<GaussQ, CopyOperator>>& terms) {
  CopyOperator out(terms.at(0).second.size(), GaussQ(0));
  for (const auto& [c, m] : terms)
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += c * m[k];
  return out;
}

std::vector<OperatorIdentity> copy_permutation_identities() {
  std::vector<OperatorIdentity> out;
  const auto yy = copy_product(2, {Op::S2, Op::S2});
  const auto mm = copy_comb(2, 0, 1);
  const auto swap = copy_permutation(2, {1, 0});
  const GaussQ half(Rational(1, 2)), quarter(Rational(1, 4)), i = GaussQ::i();

  std::vector<std::pair<GaussQ, CopyOperator>> pauli_sum;
  for (Op op : {Op::S0, Op::S1, Op::S2, Op::S3}) pauli_sum.emplace_back(half, copy_product(2, {op, op}));
  out.push_back({"swap = 1/2 sum sigma_mu x sigma_mu", swap, lincomb(pauli_sum)});
  out.push_back({"(y.y)P = -1/2 (mm - y.y)", matmul(yy, swap), lincomb({{-half, mm}, {half, yy}})});
  out.push_back({"(mm)P = -1/2 (mm + 3 y.y)", matmul(mm, swap),
                 lincomb({{-half, mm}, {GaussQ(Rational(-3, 2)), yy}})});
  out.push_back({"(y.y)PP = y.y", matmul(matmul(yy, swap), swap), yy});

  const auto yyy = copy_product(3, {Op::S2, Op::S2, Op::S2});
  const auto p12 = copy_permutation(3, {1, 0, 2});
  const auto p23 = copy_permutation(3, {0, 2, 1});
  auto with_y = [](const CopyOperator& comb, int free) {
    std::vector<Op> ops(3, Op::S0);
    ops[free] = Op::S2;
    return matmul(comb, copy_product(3, ops));
  };
  auto cross = lincomb({{GaussQ(1), with_y(copy_comb(3, 0, 1), 2)},
                        {GaussQ(1), with_y(copy_comb(3, 0, 2), 1)},
                        {GaussQ(1), with_y(copy_comb(3, 1, 2), 0)}});
  std::vector<std::pair<GaussQ, CopyOperator>> eps_terms;
  const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  for (int k = 0; k < 6; ++k) {
    std::vector<Op> ops;
    for (int j = 0; j < 3; ++j) ops.push_back(tau(perms[k][j] + 1));
    eps_terms.emplace_back(GaussQ(k < 3 ? 1 : -1), copy_product(3, ops));
  }
  auto eps = lincomb(eps_terms);
  out.push_back({"(y.y.y)P12 P23 = 1/4 [y.y.y - cross - i eps tau.tau.tau]", matmul(matmul(yyy, p12), p23),
                 lincomb({{quarter, yyy}, {-quarter, cross}, {-quarter * i, eps}})});
  out.push_back({"(y.y.y)P23 P12 = 1/4 [y.y.y - cross + i eps tau.tau.tau]", matmul(matmul(yyy, p23), p12),
                 lincomb({{quarter, yyy}, {-quarter, cross}, {quarter * i, eps}})});
  return out;
}

template class BasicCovariant<GaussQ>;
template class BasicCovariant<Complex>;
template Covariant ground_form(const ExactState&);
template FloatCovariant ground_form(const FloatState&);
template Covariant transvectant(const Covariant&, const Covariant&, const std::vector<int>&);
template FloatCovariant transvectant(const FloatCovariant&, const FloatCovariant&,
                                     const std::vector<int>&);
template Covariant run_recipe_covariant(const OmegaRecipe&, const ExactState&);
template FloatCovariant run_recipe_covariant(const OmegaRecipe&, const FloatState&);
template GaussQ run_recipe(const OmegaRecipe&, const ExactState&);
template Complex run_recipe(const OmegaRecipe&, const FloatState&);

}  // namespace qinv
