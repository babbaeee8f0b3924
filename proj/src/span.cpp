#include "qinv/span.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

#include "qinv/symmetry.hpp"

namespace qinv {

std::size_t EvaluationMatrix::cols() const {
  if (mode == Arithmetic::Exact) return exact.empty() ? 0 : exact[0].size();
  return fl.empty() ? 0 : fl[0].size();
}

void EvaluationMatrix::append(const EvaluationMatrix& other) {
  if (other.rows() == 0) return;
  if (rows() == 0) {
    q = other.q;
    mode = other.mode;
  }
  if (other.mode != mode) throw std::invalid_argument("matrix append: arithmetic modes differ");
  if (rows() && other.cols() != cols()) throw std::invalid_argument("matrix append: column counts differ");
  names.insert(names.end(), other.names.begin(), other.names.end());
  exact.insert(exact.end(), other.exact.begin(), other.exact.end());
  fl.insert(fl.end(), other.fl.begin(), other.fl.end());
}

void EvaluationMatrix::append_row(std::string name, std::vector<GaussQ> row) {
  if (rows() && (mode != Arithmetic::Exact || row.size() != cols()))
    throw std::invalid_argument("append_row: shape or mode mismatch");
  mode = Arithmetic::Exact;
  names.push_back(std::move(name));
  exact.push_back(std::move(row));
}

void EvaluationMatrix::append_row(std::string name, std::vector<Complex> row) {
  if (rows() && (mode != Arithmetic::Float || row.size() != cols()))
    throw std::invalid_argument("append_row: shape or mode mismatch");
  mode = Arithmetic::Float;
  names.push_back(std::move(name));
  fl.push_back(std::move(row));
}

EvaluationMatrix EvaluationMatrix::select(const std::vector<std::size_t>& idx) const {
  EvaluationMatrix out;
  out.q = q;
  out.mode = mode;
  for (auto r : idx) {
    out.names.push_back(names.at(r));
    if (mode == Arithmetic::Exact) out.exact.push_back(exact.at(r));
    else out.fl.push_back(fl.at(r));
  }
  return out;
}

std::vector<ExactState> sample_states(int q, std::size_t n, std::uint64_t seed) {
  std::vector<ExactState> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(random_exact_state(q, seed + k));
  return out;
}

std::vector<FloatState> sample_float_states(int q, std::size_t n, std::uint64_t seed) {
  std::vector<FloatState> out;
  for (std::size_t k = 0; k < n; ++k) {
    auto psi = random_float_state(q, seed + k);
    double nn = 0;
    for (const auto& a : psi.amplitudes()) nn += std::norm(a);
    out.push_back(psi.scaled(Complex(1.0 / std::sqrt(nn), 0.0)));
  }
  return out;
}

template <class T>
static EvaluationMatrix build_impl(const std::vector<NamedInvariant>& invs, const std::vector<BasicState<T>>& states) {
  EvaluationMatrix m;
  m.q = states.empty() ? (invs.empty() ? 0 : invs[0].inv.qubits()) : states[0].qubits();
  m.mode = std::is_same_v<T, GaussQ> ? Arithmetic::Exact : Arithmetic::Float;
  for (const auto& ni : invs) {
    std::vector<T> row;
    row.reserve(states.size());
    for (const auto& s : states) row.push_back(ni.inv.eval(s));
    m.append_row(ni.name, std::move(row));
  }
  return m;
}

EvaluationMatrix build_matrix(const std::vector<NamedInvariant>& invs, const std::vector<ExactState>& states) {
  return build_impl(invs, states);
}
EvaluationMatrix build_matrix(const std::vector<NamedInvariant>& invs, const std::vector<FloatState>& states) {
  return build_impl(invs, states);
}

EvaluationMatrix build_matrix(const std::vector<NamedInvariant>& invs, int q, std::size_t n_states,
                              Arithmetic mode, std::uint64_t seed, bool stratified) {
  for (const auto& ni : invs) {
    if (ni.inv.qubits() != q)
      throw std::invalid_argument("build_matrix: " + ni.name + " acts on " + std::to_string(ni.inv.qubits()) +
                                  " qubits, not " + std::to_string(q));
    if (stratified && ni.inv.degree() != invs[0].inv.degree())
      throw std::invalid_argument("build_matrix: degree mismatch, " + ni.name + " has degree " +
                                  std::to_string(ni.inv.degree()) + " but " + invs[0].name + " has " +
                                  std::to_string(invs[0].inv.degree()));
  }
  if (mode == Arithmetic::Exact) return build_matrix(invs, sample_states(q, n_states, seed));
  return build_matrix(invs, sample_float_states(q, n_states, seed));
}

EvaluationMatrix product_rows(const EvaluationMatrix& a, const EvaluationMatrix& b, bool symmetric) {
  if (a.mode != b.mode || a.cols() != b.cols()) throw std::invalid_argument("product_rows: shape mismatch");
  EvaluationMatrix out;
  out.q = a.q;
  out.mode = a.mode;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = symmetric ? i : 0; j < b.rows(); ++j) {
      std::string name = a.names[i] + "*" + b.names[j];
      if (a.mode == Arithmetic::Exact) {
        std::vector<GaussQ> r(a.cols());
        for (std::size_t c = 0; c < r.size(); ++c) r[c] = a.exact[i][c] * b.exact[j][c];
        out.append_row(name, std::move(r));
      } else {
        std::vector<Complex> r(a.cols());
        for (std::size_t c = 0; c < r.size(); ++c) r[c] = a.fl[i][c] * b.fl[j][c];
        out.append_row(name, std::move(r));
      }
    }
  return out;
}

// ---------------------------------------------------------------------------
// Exact rank

namespace {

std::vector<std::vector<GaussZ>> clear_denominators(const EvaluationMatrix& m) {
  std::vector<std::vector<GaussZ>> z(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (const auto& v : m.exact[r]) {
      Integer d = v.denominator_lcm();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    z[r].reserve(m.cols());
    for (const auto& v : m.exact[r]) {
      Rational re = v.re() * l, im = v.im() * l;
      z[r].emplace_back(re.get_num(), im.get_num());
    }
  }
  return z;
}

// a = (p*a - s*b) / d exactly, all Gaussian integers. t1..t4 are scratch.
struct BareissScratch {
  Integer t1, t2, t3, nd, re, im;
};

void bareiss_update(GaussZ& a, const GaussZ& p, const GaussZ& s, const GaussZ& b, const GaussZ& d, bool d_one,
                    BareissScratch& w) {
  // re = p.re a.re - p.im a.im - (s.re b.re - s.im b.im)
  mpz_mul(w.re.get_mpz_t(), p.re.get_mpz_t(), a.re.get_mpz_t());
  mpz_submul(w.re.get_mpz_t(), p.im.get_mpz_t(), a.im.get_mpz_t());
  mpz_submul(w.re.get_mpz_t(), s.re.get_mpz_t(), b.re.get_mpz_t());
  mpz_addmul(w.re.get_mpz_t(), s.im.get_mpz_t(), b.im.get_mpz_t());
  mpz_mul(w.im.get_mpz_t(), p.re.get_mpz_t(), a.im.get_mpz_t());
  mpz_addmul(w.im.get_mpz_t(), p.im.get_mpz_t(), a.re.get_mpz_t());
  mpz_submul(w.im.get_mpz_t(), s.re.get_mpz_t(), b.im.get_mpz_t());
  mpz_submul(w.im.get_mpz_t(), s.im.get_mpz_t(), b.re.get_mpz_t());
  if (d_one) {
    mpz_swap(a.re.get_mpz_t(), w.re.get_mpz_t());
    mpz_swap(a.im.get_mpz_t(), w.im.get_mpz_t());
    return;
  }
  if (sgn(d.im) == 0) {
    mpz_divexact(a.re.get_mpz_t(), w.re.get_mpz_t(), d.re.get_mpz_t());
    mpz_divexact(a.im.get_mpz_t(), w.im.get_mpz_t(), d.re.get_mpz_t());
    return;
  }
  // (re + i im) * conj(d) / N(d)
  mpz_mul(w.nd.get_mpz_t(), d.re.get_mpz_t(), d.re.get_mpz_t());
  mpz_addmul(w.nd.get_mpz_t(), d.im.get_mpz_t(), d.im.get_mpz_t());
  mpz_mul(w.t1.get_mpz_t(), w.re.get_mpz_t(), d.re.get_mpz_t());
  mpz_addmul(w.t1.get_mpz_t(), w.im.get_mpz_t(), d.im.get_mpz_t());
  mpz_mul(w.t2.get_mpz_t(), w.im.get_mpz_t(), d.re.get_mpz_t());
  mpz_submul(w.t2.get_mpz_t(), w.re.get_mpz_t(), d.im.get_mpz_t());
  mpz_divexact(a.re.get_mpz_t(), w.t1.get_mpz_t(), w.nd.get_mpz_t());
  mpz_divexact(a.im.get_mpz_t(), w.t2.get_mpz_t(), w.nd.get_mpz_t());
}

}  // namespace

RankReport exact_rank(const EvaluationMatrix& m) {
  if (m.mode != Arithmetic::Exact) throw std::invalid_argument("exact_rank: matrix is not exact");
  // rank mod p <= rank over Q(i) <= rows, so full row rank mod p settles it.
  try {
    auto mr = modular_rank(m, 0);
    if (mr.rank == m.rows()) {
      mr.method = "exact (full row rank, certified mod p)";
      return mr;
    }
  } catch (const std::domain_error&) {
  }
  auto a = clear_denominators(m);
  const std::size_t rows = a.size(), cols = m.cols();
  std::vector<std::size_t> order(rows);
  std::iota(order.begin(), order.end(), 0);
  GaussZ prev(1);
  bool prev_one = true;
  BareissScratch w;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(order[p], order[r]);
    const GaussZ piv = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const GaussZ s = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) bareiss_update(a[i][j], piv, s, a[r][j], prev, prev_one, w);
      a[i][c] = GaussZ(0);
    }
    prev = piv;
    prev_one = false;
    ++r;
  }
  RankReport rep;
  rep.rank = r;
  rep.basis_rows.assign(order.begin(), order.begin() + r);
  std::sort(rep.basis_rows.begin(), rep.basis_rows.end());
  rep.method = "exact (Bareiss over Z[i])";
  return rep;
}

// ---------------------------------------------------------------------------
// Modular arithmetic

const std::vector<ModPrime>& mod_primes() {
  static const std::vector<ModPrime> p = {{4611686018427387817ULL, 120863620846201794ULL},
                                          {4611686018427387761ULL, 1130501565556633554ULL},
                                          {4611686018427387737ULL, 445087375101645770ULL}};
  return p;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 addmod(u64 a, u64 b, u64 p) { return a + b >= p ? a + b - p : a + b; }
u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (; e; e >>= 1, a = mulmod(a, a, p))
    if (e & 1) r = mulmod(r, a, p);
  return r;
}
u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

u64 rational_mod(const Rational& x, u64 p) {
  Integer pp;
  mpz_import(pp.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &p);
  Integer n = x.get_num() % pp, d = x.get_den() % pp;
  if (n < 0) n += pp;
  if (d == 0) throw std::domain_error("modular reduction: denominator divisible by the prime");
  u64 nn = 0, dd = 0;
  mpz_export(&nn, nullptr, 1, sizeof(u64), 0, 0, n.get_mpz_t());
  mpz_export(&dd, nullptr, 1, sizeof(u64), 0, 0, d.get_mpz_t());
  return mulmod(nn, invmod(dd, p), p);
}

u64 gauss_mod(const GaussQ& z, const ModPrime& mp) {
  return addmod(rational_mod(z.re(), mp.p), mulmod(rational_mod(z.im(), mp.p), mp.sqrt_m1, mp.p), mp.p);
}

}  // namespace

ModularSpan::ModularSpan(std::size_t cols, std::size_t prime_index)
    : cols_(cols), prime_(mod_primes().at(prime_index)) {}

std::vector<std::uint64_t> ModularSpan::reduce(const std::vector<GaussQ>& row, std::size_t& pivot) const {
  if (row.size() != cols_) throw std::invalid_argument("ModularSpan: row length mismatch");
  const u64 p = prime_.p;
  std::vector<u64> v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = gauss_mod(row[j], prime_);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    u64 f = v[pivots_[k]];
    if (!f) continue;
    const auto& b = rows_[k];
    for (std::size_t j = pivots_[k]; j < cols_; ++j)
      if (b[j]) v[j] = submod(v[j], mulmod(f, b[j], p), p);
  }
  pivot = cols_;
  for (std::size_t j = 0; j < cols_; ++j)
    if (v[j]) {
      pivot = j;
      break;
    }
  return v;
}

bool ModularSpan::independent(const std::vector<GaussQ>& row) const {
  std::size_t pivot;
  reduce(row, pivot);
  return pivot < cols_;
}

bool ModularSpan::add(const std::vector<GaussQ>& row) {
  std::size_t pivot;
  auto v = reduce(row, pivot);
  if (pivot == cols_) return false;
  const u64 p = prime_.p, inv = invmod(v[pivot], p);
  for (auto& x : v) x = mulmod(x, inv, p);
  // Keep the echelon reduced so later rows reduce in one pass.
  for (auto& b : rows_) {
    u64 f = b[pivot];
    if (!f) continue;
    for (std::size_t j = pivot; j < cols_; ++j)
      if (v[j]) b[j] = submod(b[j], mulmod(f, v[j], p), p);
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

RankReport modular_rank(const EvaluationMatrix& m, std::size_t prime_index) {
  if (m.mode != Arithmetic::Exact) throw std::invalid_argument("modular_rank: matrix is not exact");
  ModularSpan span(m.cols(), prime_index);
  RankReport rep;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (span.add(m.exact[r])) rep.basis_rows.push_back(r);
  rep.rank = span.rank();
  rep.method = "modular (p = " + std::to_string(mod_primes()[prime_index].p) + ")";
  return rep;
}

RankReport float_rank(const EvaluationMatrix& m, double rel_tol) {
  const std::size_t rows = m.rows(), cols = m.cols();
  RankReport rep;
  rep.method = "float (SVD, tol " + std::to_string(rel_tol) + ")";
  if (!rows || !cols) return rep;
  Eigen::MatrixXcd a(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    double n = 0;
    for (std::size_t c = 0; c < cols; ++c) {
      Complex v = m.mode == Arithmetic::Exact ? m.exact[r][c].to_complex() : m.fl[r][c];
      a(r, c) = v;
      n += std::norm(v);
    }
    if (n > 0) a.row(r) /= std::sqrt(n);
  }
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(a);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0) return rep;
  for (Eigen::Index k = 0; k < s.size(); ++k)
    if (s(k) > rel_tol * s(0)) ++rep.rank;
  return rep;
}

RankReport rank(const EvaluationMatrix& m) {
  return m.mode == Arithmetic::Exact ? exact_rank(m) : float_rank(m);
}

std::size_t intersection_dim(const EvaluationMatrix& a, const EvaluationMatrix& b) {
  EvaluationMatrix u = a;
  u.append(b);
  return rank(a).rank + rank(b).rank - rank(u).rank;
}

// ---------------------------------------------------------------------------
// Relations

std::string RelationReport::describe(const std::vector<std::string>& names) const {
  std::ostringstream os;
  if (!member) {
    os << "not in span: rank " << basis_rank << " -> " << rank_with_target;
    return os.str();
  }
  os << "target =";
  bool any = false;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    os << (any ? " + " : " ") << "(" << coeffs[k] << ")*" << (k < names.size() ? names[k] : "row" + std::to_string(k));
    any = true;
  }
  if (!any) os << " 0";
  return os.str();
}

RelationReport find_relation(const std::vector<GaussQ>& target, const EvaluationMatrix& basis) {
  if (basis.mode != Arithmetic::Exact) throw std::invalid_argument("find_relation: exact matrix required");
  const std::size_t n = basis.rows(), cols = target.size();
  if (n && basis.cols() != cols) throw std::invalid_argument("find_relation: column count mismatch");
  if (cols < n + 10)
    throw std::invalid_argument("find_relation: " + std::to_string(cols) + " columns for " + std::to_string(n) +
                                " basis rows; need at least rows + 10");
  // Augmented system over columns: sum_k c_k B[k][j] = t[j].
  std::vector<std::vector<GaussQ>> a(cols, std::vector<GaussQ>(n + 1));
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t k = 0; k < n; ++k) a[j][k] = basis.exact[k][j];
    a[j][n] = target[j];
  }
  std::vector<std::size_t> pivcol;
  std::size_t r = 0;
  for (std::size_t c = 0; c <= n && r < cols; ++c) {
    std::size_t p = r;
    while (p < cols && a[p][c].is_zero()) ++p;
    if (p == cols) continue;
    std::swap(a[p], a[r]);
    GaussQ inv = GaussQ(1) / a[r][c];
    for (std::size_t j = c; j <= n; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < cols; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      GaussQ f = a[i][c];
      for (std::size_t j = c; j <= n; ++j)
        if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
    }
    pivcol.push_back(c);
    ++r;
  }
  RelationReport rep;
  rep.rank_with_target = r;
  rep.basis_rank = std::count_if(pivcol.begin(), pivcol.end(), [n](std::size_t c) { return c < n; });
  rep.member = rep.basis_rank == rep.rank_with_target;
  if (rep.member) {
    rep.coeffs.assign(n, GaussQ(0));
    for (std::size_t k = 0; k < pivcol.size(); ++k) rep.coeffs[pivcol[k]] = a[k][n];
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Filters

std::string BipartitionResult::label() const {
  std::string s = "(";
  for (std::size_t k = 0; k < block.size(); ++k) s += (k ? "," : "") + std::to_string(block[k]);
  s += ")|(";
  for (std::size_t k = 0; k < rest.size(); ++k) s += (k ? "," : "") + std::to_string(rest[k]);
  return s + ")";
}

bool BipartitionReport::is_filter() const {
  return std::none_of(parts.begin(), parts.end(), [](const auto& p) { return p.nonzero; });
}

std::vector<std::string> BipartitionReport::nonzero_labels() const {
  std::vector<std::string> out;
  for (const auto& p : parts)
    if (p.nonzero) out.push_back(p.label());
  return out;
}

BipartitionReport filter_check(const Invariant& inv, int trials, std::uint64_t seed) {
  const int q = inv.qubits();
  BipartitionReport rep;
  // Masks containing qubit 1 and not everything: 2^(q-1) - 1 splits.
  for (unsigned mask = 1; mask < (1u << q) - 1; mask += 2) {
    std::vector<int> a, b;
    for (int j = 0; j < q; ++j) (mask >> j & 1 ? a : b).push_back(j);
    BipartitionResult res;
    for (int j : a) res.block.push_back(j + 1);
    for (int j : b) res.rest.push_back(j + 1);
    for (int t = 0; t < trials && !res.nonzero; ++t) {
      std::uint64_t s = seed * 1000003ULL + mask * 7919ULL + t * 104729ULL;
      auto pa = random_exact_state(static_cast<int>(a.size()), s);
      auto pb = random_exact_state(static_cast<int>(b.size()), s + 1);
      GaussQ v = inv.eval(product_state<GaussQ>(q, {a, b}, {pa, pb}));
      if (!v.is_zero()) {
        res.nonzero = true;
        res.witness = v;
      }
    }
    rep.parts.push_back(std::move(res));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Greedy extension and symmetric parts

GreedyResult greedy_extend(ModularSpan& span, const EvaluationMatrix& candidates, std::size_t target_dim,
                           EvaluationMatrix* added) {
  GreedyResult res;
  res.start_rank = span.rank();
  for (std::size_t k = 0; k < candidates.rows() && span.rank() < target_dim; ++k) {
    if (!span.add(candidates.exact[k])) continue;
    res.chosen.push_back(k);
    if (added) added->append_row(candidates.names[k], candidates.exact[k]);
  }
  res.final_rank = span.rank();
  res.reached = span.rank() >= target_dim;
  return res;
}

GreedyResult greedy_basis_from_orbit(ModularSpan& span, const std::vector<InvariantOrbitElement>& orbit,
                                     const std::vector<ExactState>& states, std::size_t target_dim,
                                     EvaluationMatrix* added) {
  GreedyResult res;
  res.start_rank = span.rank();
  for (std::size_t k = 0; k < orbit.size() && span.rank() < target_dim; ++k) {
    std::vector<GaussQ> row;
    row.reserve(states.size());
    for (const auto& s : states) row.push_back(orbit[k].inv.eval(s));
    if (!span.add(row)) continue;
    res.chosen.push_back(k);
    if (added) added->append_row(orbit[k].perm.to_cycles(), std::move(row));
  }
  res.final_rank = span.rank();
  res.reached = span.rank() >= target_dim;
  return res;
}

SymmetricDims symmetric_component_dims(const std::vector<NamedInvariant>& generators,
                                       const std::vector<ExactState>& states) {
  if (states.empty()) return {};
  const int q = states[0].qubits();
  const auto perms = all_permutations(q);
  std::vector<std::vector<ExactState>> images(states.size());
  for (std::size_t c = 0; c < states.size(); ++c)
    for (const auto& pi : perms) images[c].push_back(permute_state(pi, states[c]));
  EvaluationMatrix s, a;
  const GaussQ scale(Rational(1, static_cast<long>(perms.size())));
  for (const auto& g : generators) {
    std::vector<GaussQ> rs(states.size()), ra(states.size());
    for (std::size_t c = 0; c < states.size(); ++c) {
      GaussQ vs(0), va(0);
      for (std::size_t k = 0; k < perms.size(); ++k) {
        GaussQ v = g.inv.eval(images[c][k]);
        vs += v;
        if (perms[k].sign() < 0) va -= v;
        else va += v;
      }
      rs[c] = vs * scale;
      ra[c] = va * scale;
    }
    s.append_row(g.name, std::move(rs));
    a.append_row(g.name, std::move(ra));
  }
  return {exact_rank(s).rank, exact_rank(a).rank};
}

}  // namespace qinv
