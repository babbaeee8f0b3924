#include "qinv/comb.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qinv {

namespace {

std::string cell_name(int row, int col) {
  return "row " + std::to_string(row + 1) + ", column " + std::to_string(col + 1);
}

}  // namespace

CombSpec::CombSpec(int q, int m, std::vector<CombToken> grid, Rational prefactor)
    : q_(q), m_(m), grid_(std::move(grid)), prefactor_(std::move(prefactor)) {
  if (q < 1 || q > BasicState<GaussQ>::kMaxQubits)
    throw std::invalid_argument("comb spec: qubit count " + std::to_string(q) + " unsupported");
  if (m < 1) throw std::invalid_argument("comb spec: needs at least one copy");
  if (grid_.size() != static_cast<std::size_t>(q * m))
    throw std::invalid_argument("comb spec: grid size does not match q*m");

  struct Seen {
    std::vector<std::pair<int, int>> cells;
  };
  std::map<int, Seen> seen;
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < q; ++c) {
      const auto& t = grid_[r * q + c];
      if (t.is_label()) {
        seen[t.label].cells.emplace_back(r, c);
      } else if (t.op == Op::Eps) {
        throw std::invalid_argument("comb spec: operator eps not admitted at " + cell_name(r, c));
      }
    }
  }
  for (const auto& [label, s] : seen) {
    if (s.cells.size() != 2) {
      std::string where;
      for (auto [r, c] : s.cells) where += " (" + cell_name(r, c) + ")";
      throw std::invalid_argument("comb spec: label m" + std::to_string(label) + " appears " +
                                  std::to_string(s.cells.size()) + " times, expected 2:" + where);
    }
    if (s.cells[0].second != s.cells[1].second)
      throw std::invalid_argument("comb spec: label m" + std::to_string(label) +
                                  " spans two columns (" + cell_name(s.cells[0].first, s.cells[0].second) +
                                  " and " + cell_name(s.cells[1].first, s.cells[1].second) + ")");
  }
  // Labels sharing a column must use four distinct rows.
  for (auto a = seen.begin(); a != seen.end(); ++a) {
    for (auto b = std::next(a); b != seen.end(); ++b) {
      if (a->second.cells[0].second != b->second.cells[0].second) continue;
      for (auto [ra, ca] : a->second.cells)
        for (auto [rb, cb] : b->second.cells)
          if (ra == rb)
            throw std::invalid_argument("comb spec: labels m" + std::to_string(a->first) + " and m" +
                                        std::to_string(b->first) + " share row " +
                                        std::to_string(ra + 1) + " in column " +
                                        std::to_string(ca + 1));
    }
  }
  std::map<int, int> ids;
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < q; ++c) {
      const auto& t = grid_[r * q + c];
      if (!t.is_label() || ids.count(t.label)) continue;
      int id = static_cast<int>(labels_.size());
      ids[t.label] = id;
      const auto& cells = seen[t.label].cells;
      labels_.push_back({id, c, cells[0].first, cells[1].first});
    }
  }
}

CombSpec CombSpec::with_prefactor(Rational p) const {
  return CombSpec(q_, m_, grid_, std::move(p));
}

std::string CombSpec::to_string() const {
  std::ostringstream os;
  if (prefactor_ != 1) os << prefactor_.get_str() << "*";
  for (int r = 0; r < m_; ++r) {
    if (r) os << " |";
    for (int c = 0; c < q_; ++c) {
      const auto& t = at(r, c);
      if (r || c) os << " ";
      if (t.is_label()) {
        os << "m" << t.label;
      } else {
        os << op_symbol(t.op);
      }
    }
  }
  return os.str();
}

namespace {

// Grid with rows in the given order, labels renumbered 1.. by first appearance.
std::vector<CombToken> relabeled(const std::vector<CombToken>& grid, int q,
                                 const std::vector<int>& order) {
  std::vector<CombToken> out;
  out.reserve(grid.size());
  std::map<int, int> names;
  for (int r : order) {
    for (int c = 0; c < q; ++c) {
      CombToken t = grid[r * q + c];
      if (t.is_label()) {
        auto it = names.find(t.label);
        if (it == names.end()) it = names.emplace(t.label, static_cast<int>(names.size()) + 1).first;
        t.label = it->second;
      }
      out.push_back(t);
    }
  }
  return out;
}

bool token_less(const CombToken& a, const CombToken& b) {
  auto key = [](const CombToken& t) {
    return t.is_label() ? 100 + t.label : static_cast<int>(t.op);
  };
  return key(a) < key(b);
}

}  // namespace

CombSpec CombSpec::canonical() const {
  std::vector<int> order(m_);
  std::iota(order.begin(), order.end(), 0);
  std::vector<CombToken> best = relabeled(grid_, q_, order);
  if (m_ <= 8) {
    while (std::next_permutation(order.begin(), order.end())) {
      auto cand = relabeled(grid_, q_, order);
      if (std::lexicographical_compare(cand.begin(), cand.end(), best.begin(), best.end(),
                                       token_less))
        best = std::move(cand);
    }
  }
  return CombSpec(q_, m_, std::move(best), prefactor_);
}

CombSpec parse_comb_spec(std::string_view text) {
  std::string body(text);
  Rational prefactor = 1;
  auto star = body.find('*');
  if (star != std::string::npos) {
    prefactor = parse_rational(body.substr(0, star));
    body = body.substr(star + 1);
  }
  std::vector<std::vector<std::string>> rows(1);
  std::string cell;
  auto flush = [&] {
    if (!cell.empty()) rows.back().push_back(cell);
    cell.clear();
  };
  for (char ch : body) {
    if (ch == '|') {
      flush();
      rows.emplace_back();
    } else if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') {
      flush();
    } else {
      cell.push_back(ch);
    }
  }
  flush();
  const int m = static_cast<int>(rows.size());
  const int q = static_cast<int>(rows[0].size());
  if (q == 0) throw std::invalid_argument("comb spec: empty row 1");
  std::vector<CombToken> grid;
  for (int r = 0; r < m; ++r) {
    if (static_cast<int>(rows[r].size()) != q)
      throw std::invalid_argument("comb spec: row " + std::to_string(r + 1) + " has " +
                                  std::to_string(rows[r].size()) + " cells, expected " +
                                  std::to_string(q));
    for (int c = 0; c < q; ++c) {
      const std::string& s = rows[r][c];
      if (s == "0") {
        grid.push_back(CombToken::fixed(Op::S0));
      } else if (s == "1") {
        grid.push_back(CombToken::fixed(Op::S1));
      } else if (s == "2" || s == "y") {
        grid.push_back(CombToken::fixed(Op::S2));
      } else if (s == "3") {
        grid.push_back(CombToken::fixed(Op::S3));
      } else if (s == "J") {
        grid.push_back(CombToken::fixed(Op::J));
      } else if (s.size() > 1 && s[0] == 'm' &&
                 std::all_of(s.begin() + 1, s.end(), [](char d) { return d >= '0' && d <= '9'; })) {
        grid.push_back(CombToken::contract(std::stoi(s.substr(1))));
      } else {
        throw std::invalid_argument("comb spec: unknown token '" + s + "' at " + cell_name(r, c));
      }
    }
  }
  return CombSpec(q, m, std::move(grid), prefactor);
}

// ---------------------------------------------------------------------------
// Planning

namespace {

std::uint64_t pow3(std::size_t k) {
  std::uint64_t v = 1;
  while (k--) v *= 3;
  return v;
}

std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> sa(a), sb(b), out;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(out));
  return out;
}

std::vector<int> sym_diff(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> sa(a), sb(b), out;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  std::set_symmetric_difference(sa.begin(), sa.end(), sb.begin(), sb.end(),
                                std::back_inserter(out));
  return out;
}

bool shares(const std::vector<int>& a, const std::vector<int>& b) {
  for (int x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) return true;
  return false;
}

}  // namespace

ContractionPlan plan_contraction(const CombSpec& spec) {
  ContractionPlan plan;
  const int m = spec.copies(), q = spec.qubits();
  plan.copy_labels.resize(m);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < q; ++c)
      if (spec.at(r, c).is_label()) {
        int id = -1;
        for (const auto& l : spec.labels())
          if (l.column == c && (l.row_a == r || l.row_b == r)) id = l.id;
        plan.copy_labels[r].push_back(id);
      }
  const std::uint64_t per_form = std::uint64_t{1} << q;
  for (const auto& labels : plan.copy_labels) plan.precompute_cost += pow3(labels.size()) * per_form;

  std::vector<std::vector<int>> live;  // labels of each live tensor, -1 marks consumed
  std::vector<bool> alive;
  for (const auto& labels : plan.copy_labels) {
    live.push_back(labels);
    alive.push_back(true);
  }
  for (;;) {
    int best_a = -1, best_b = -1;
    std::uint64_t best_size = 0, best_cost = 0;
    for (std::size_t a = 0; a < live.size(); ++a) {
      if (!alive[a]) continue;
      for (std::size_t b = a + 1; b < live.size(); ++b) {
        if (!alive[b] || !shares(live[a], live[b])) continue;
        std::uint64_t size = pow3(sym_diff(live[a], live[b]).size());
        std::uint64_t cost = pow3(sorted_union(live[a], live[b]).size());
        if (best_a < 0 || size < best_size || (size == best_size && cost < best_cost)) {
          best_a = static_cast<int>(a);
          best_b = static_cast<int>(b);
          best_size = size;
          best_cost = cost;
        }
      }
    }
    if (best_a < 0) break;
    auto result = sym_diff(live[best_a], live[best_b]);
    plan.steps.push_back({best_a, best_b, result, best_cost});
    plan.contraction_cost += best_cost;
    alive[best_a] = alive[best_b] = false;
    live.push_back(result);
    alive.push_back(true);
  }
  return plan;
}

std::string ContractionPlan::report() const {
  std::ostringstream os;
  os << "copies=" << copy_labels.size() << " steps=" << steps.size()
     << " precompute_cost=" << precompute_cost << " contraction_cost=" << contraction_cost
     << " ordering=greedy-smallest-intermediate\n";
  for (std::size_t s = 0; s < steps.size(); ++s) {
    os << "  step " << s << ": t" << steps[s].left << " * t" << steps[s].right << " -> t"
       << copy_labels.size() + s << " [";
    for (std::size_t k = 0; k < steps[s].result_labels.size(); ++k)
      os << (k ? " " : "") << "m" << steps[s].result_labels[k] + 1;
    os << "] cost " << steps[s].cost << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

constexpr int kMuValues[3] = {0, 1, 3};

// sum_a phi_a (P psi)_a for a Pauli string P given per site (0..3); J sites
// must already be expanded.
template <class T>
void pauli_form_acc(T& acc, const std::uint8_t* ops, int q, std::span<const T> amps) {
  std::size_t flip = 0, mask2 = 0, mask3 = 0;
  int n2 = 0;
  for (int j = 0; j < q; ++j) {
    std::size_t bit = std::size_t{1} << j;
    if (ops[j] == 1 || ops[j] == 2) flip |= bit;
    if (ops[j] == 2) {
      mask2 |= bit;
      ++n2;
    }
    if (ops[j] == 3) mask3 |= bit;
  }
  // sigma_2 row a: a=0 -> -i, a=1 -> +i. sigma_3 row a=1 -> -1.
  for (std::size_t a = 0; a < amps.size(); ++a) {
    int ones2 = __builtin_popcountll(a & mask2);
    int ones3 = __builtin_popcountll(a & mask3);
    int k = 2 * ones2 - n2 + 2 * ones3;
    madd_rot(acc, amps[a], amps[a ^ flip], ((k % 4) + 4) % 4);
  }
}

template <class T>
void form_with_j(T& acc, std::uint8_t* ops, int q, int from, std::span<const T> amps) {
  for (int j = from; j < q; ++j) {
    if (ops[j] == 4) {
      ops[j] = 0;
      form_with_j(acc, ops, q, j + 1, amps);
      ops[j] = 1;
      form_with_j(acc, ops, q, j + 1, amps);
      ops[j] = 4;
      return;
    }
  }
  pauli_form_acc(acc, ops, q, amps);
}

template <class T>
struct Tensor {
  std::vector<int> labels;
  std::vector<T> data;
};

template <class T>
Tensor<T> contract(const Tensor<T>& a, const Tensor<T>& b, const std::vector<int>& result_labels) {
  auto all = sorted_union(a.labels, b.labels);
  const std::size_t n = all.size();
  // Strides into a, b and the result for every label in `all`.
  std::vector<std::uint64_t> sa(n, 0), sb(n, 0), sr(n, 0);
  auto stride_of = [](const std::vector<int>& labels, int label) -> std::uint64_t {
    std::uint64_t s = 1;
    for (int l : labels) {
      if (l == label) return s;
      s *= 3;
    }
    return 0;
  };
  for (std::size_t k = 0; k < n; ++k) {
    sa[k] = stride_of(a.labels, all[k]);
    sb[k] = stride_of(b.labels, all[k]);
    sr[k] = stride_of(result_labels, all[k]);
  }
  Tensor<T> out{result_labels, std::vector<T>(pow3(result_labels.size()), T(0))};
  std::vector<int> digit(n, 0);
  std::uint64_t ia = 0, ib = 0, ir = 0;
  const std::uint64_t total = pow3(n);
  for (std::uint64_t it = 0; it < total; ++it) {
    madd(out.data[ir], a.data[ia], b.data[ib]);
    for (std::size_t k = 0; k < n; ++k) {
      if (digit[k] < 2) {
        ++digit[k];
        ia += sa[k];
        ib += sb[k];
        ir += sr[k];
        break;
      }
      digit[k] = 0;
      ia -= 2 * sa[k];
      ib -= 2 * sb[k];
      ir -= 2 * sr[k];
    }
  }
  return out;
}

template <class T>
T eval_core(const CombSpec& spec, const ContractionPlan& plan, std::span<const T> amps) {
  const int q = spec.qubits(), m = spec.copies();
  std::vector<Tensor<T>> tensors;
  tensors.reserve(m + plan.steps.size());
  // Row owning the metric factor of each label.
  std::vector<int> metric_row(spec.labels().size());
  for (const auto& l : spec.labels()) metric_row[l.id] = l.row_a;

  std::vector<std::uint8_t> ops(q);
  for (int r = 0; r < m; ++r) {
    const auto& labels = plan.copy_labels[r];
    Tensor<T> t{labels, std::vector<T>(pow3(labels.size()), T(0))};
    std::vector<int> label_col(labels.size());
    for (std::size_t k = 0; k < labels.size(); ++k) label_col[k] = spec.labels()[labels[k]].column;
    for (int c = 0; c < q; ++c)
      if (!spec.at(r, c).is_label()) ops[c] = static_cast<std::uint8_t>(spec.at(r, c).op);
    for (std::uint64_t idx = 0; idx < t.data.size(); ++idx) {
      std::uint64_t rest = idx;
      int sign = 1;
      for (std::size_t k = 0; k < labels.size(); ++k) {
        int mu = kMuValues[rest % 3];
        rest /= 3;
        ops[label_col[k]] = static_cast<std::uint8_t>(mu);
        if (metric_row[labels[k]] == r && mu == 0) sign = -sign;
      }
      T acc(0);
      form_with_j(acc, ops.data(), q, 0, amps);
      t.data[idx] = sign < 0 ? -acc : acc;
    }
    tensors.push_back(std::move(t));
  }
  std::vector<bool> used(m + plan.steps.size(), false);
  for (const auto& step : plan.steps) {
    tensors.push_back(contract(tensors[step.left], tensors[step.right], step.result_labels));
    used[step.left] = used[step.right] = true;
  }
  T value(1);
  for (std::size_t k = 0; k < tensors.size(); ++k) {
    if (used[k]) continue;
    value = value * tensors[k].data.at(0);
  }
  return value;
}

}  // namespace

template <>
GaussQ eval_comb<GaussQ>(const CombSpec& spec, const ContractionPlan& plan, const ExactState& psi) {
  if (spec.qubits() != psi.qubits())
    throw std::invalid_argument("eval_comb: spec has " + std::to_string(spec.qubits()) +
                                " qubits, state has " + std::to_string(psi.qubits()));
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
  GaussZ raw = eval_core<GaussZ>(spec, plan, z);
  Integer scale;
  mpz_pow_ui(scale.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(spec.degree()));
  Rational f = spec.prefactor() / Rational(scale);
  return GaussQ(Rational(raw.re) * f, Rational(raw.im) * f);
}

template <>
Complex eval_comb<Complex>(const CombSpec& spec, const ContractionPlan& plan, const FloatState& psi) {
  if (spec.qubits() != psi.qubits())
    throw std::invalid_argument("eval_comb: spec has " + std::to_string(spec.qubits()) +
                                " qubits, state has " + std::to_string(psi.qubits()));
  return eval_core<Complex>(spec, plan, psi.amplitudes()) * spec.prefactor().get_d();
}

template <class T>
T eval_comb(const CombSpec& spec, const BasicState<T>& psi) {
  return eval_comb<T>(spec, plan_contraction(spec), psi);
}

template GaussQ eval_comb<GaussQ>(const CombSpec&, const ExactState&);
template Complex eval_comb<Complex>(const CombSpec&, const FloatState&);

DoublyEvenDiagnostic validate_doubly_even(const CombSpec& spec) {
  DoublyEvenDiagnostic d;
  for (int r = 0; r < spec.copies(); ++r) {
    int n2 = 0;
    for (int c = 0; c < spec.qubits(); ++c)
      if (!spec.at(r, c).is_label() && spec.at(r, c).op == Op::S2) ++n2;
    if (n2 % 2) d.odd_sigma2_rows.push_back(r);
  }
  d.forced_zero = !d.odd_sigma2_rows.empty();
  if (spec.qubits() % 2 == 1) d.copies_even = spec.copies() % 2 == 0;
  std::ostringstream os;
  if (d.forced_zero) {
    os << "forced zero: rows";
    for (int r : d.odd_sigma2_rows) os << " " << r + 1;
    os << " carry an odd number of sigma_2";
  } else if (!d.copies_even) {
    os << "inconsistent: odd q with an odd number of copies must contain an odd-sigma_2 row";
  } else {
    os << "ok: degree " << spec.degree();
    if (spec.qubits() % 2 == 1) os << " (doubly even)";
  }
  d.message = os.str();
  return d;
}

}  // namespace qinv
