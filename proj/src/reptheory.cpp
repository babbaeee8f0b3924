#include "qinv/reptheory.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qinv {

namespace {

void gen_partitions(int rem, int max, Partition& cur, std::vector<Partition>& out) {
  if (rem == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(rem, max); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(rem - p, p, cur, out);
    cur.pop_back();
  }
}

int weight(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

struct Tables {
  std::mutex mu;
  std::map<int, std::vector<Partition>> parts;
  std::map<int, std::map<Partition, std::size_t>> index;
  std::map<std::pair<Partition, Partition>, Integer> mn;
};

Tables& tables() {
  static Tables t;
  return t;
}

const std::map<Partition, std::size_t>& class_index(int d) {
  auto& t = tables();
  {
    std::lock_guard lock(t.mu);
    auto it = t.index.find(d);
    if (it != t.index.end()) return it->second;
  }
  auto ps = partitions(d);
  std::map<Partition, std::size_t> m;
  for (std::size_t k = 0; k < ps.size(); ++k) m[ps[k]] = k;
  std::lock_guard lock(t.mu);
  return t.index.emplace(d, std::move(m)).first->second;
}

// Beta-set recursion; t is consumed from the back.
Integer mn_rec(const Partition& lambda, Partition t) {
  if (t.empty()) return lambda.empty() ? 1 : 0;
  auto& tb = tables();
  auto key = std::make_pair(lambda, t);
  {
    std::lock_guard lock(tb.mu);
    auto it = tb.mn.find(key);
    if (it != tb.mn.end()) return it->second;
  }
  const int r = t.back();
  t.pop_back();
  const int len = static_cast<int>(lambda.size());
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);
  Integer total = 0;
  for (int i = 0; i < len; ++i) {
    const int nb = beta[i] - r;
    if (nb < 0 || std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
    int between = 0;
    for (int b : beta)
      if (b > nb && b < beta[i]) ++between;
    std::vector<int> nbeta = beta;
    nbeta[i] = nb;
    std::sort(nbeta.rbegin(), nbeta.rend());
    Partition mu;
    for (int j = 0; j < len; ++j) {
      int part = nbeta[j] - (len - 1 - j);
      if (part > 0) mu.push_back(part);
    }
    Integer v = mn_rec(mu, t);
    if (between % 2) total -= v;
    else total += v;
  }
  std::lock_guard lock(tb.mu);
  tb.mn.emplace(std::move(key), total);
  return total;
}

Integer to_integer(const Rational& r, const char* what) {
  if (r.get_den() != 1) throw std::logic_error(std::string(what) + ": non-integral result " + r.get_str());
  return r.get_num();
}

CharVector power_sum_char(const CharVector& chi, int k, bool alternating) {
  const auto ps = partitions(chi.d);
  CharVector out{chi.d, std::vector<Rational>(ps.size())};
  // Sum over nu |- k with i_a parts equal to a: prod chi(g^a)^{i_a} / (i_a! a^{i_a}),
  // times (-1)^{k - l(nu)} for the exterior power.
  for (const auto& nu : partitions(k)) {
    std::map<int, int> mult;
    for (int a : nu) ++mult[a];
    Rational z = 1;
    for (auto [a, i] : mult) {
      z *= Rational(factorial(i));
      for (int j = 0; j < i; ++j) z *= a;
    }
    Rational coeff = 1 / z;
    if (alternating && (k - static_cast<int>(nu.size())) % 2) coeff = -coeff;
    for (std::size_t c = 0; c < ps.size(); ++c) {
      Rational term = coeff;
      for (auto [a, i] : mult) {
        const Rational& v = chi.at(power_cycle_type(ps[c], a));
        for (int j = 0; j < i; ++j) term *= v;
      }
      out.values[c] += term;
    }
  }
  return out;
}

}  // namespace

std::vector<Partition> partitions(int d) {
  if (d < 0) throw std::invalid_argument("partitions: negative size");
  auto& t = tables();
  {
    std::lock_guard lock(t.mu);
    auto it = t.parts.find(d);
    if (it != t.parts.end()) return it->second;
  }
  std::vector<Partition> out;
  Partition cur;
  gen_partitions(d, d, cur, out);
  std::lock_guard lock(t.mu);
  t.parts.emplace(d, out);
  return out;
}

std::string partition_to_string(const Partition& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

Partition parse_partition(const std::string& text) {
  Partition p;
  std::string s;
  for (char c : text) s += (c == ',' || c == '[' || c == ']') ? ' ' : c;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) {
    auto caret = tok.find('^');
    try {
      if (caret == std::string::npos) {
        p.push_back(std::stoi(tok));
      } else {
        int v = std::stoi(tok.substr(0, caret)), n = std::stoi(tok.substr(caret + 1));
        for (int k = 0; k < n; ++k) p.push_back(v);
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("bad partition '" + text + "'");
    }
  }
  if (std::any_of(p.begin(), p.end(), [](int x) { return x <= 0; }))
    throw std::invalid_argument("bad partition '" + text + "': parts must be positive");
  std::sort(p.rbegin(), p.rend());
  return p;
}

Integer factorial(int n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

Integer class_size(const Partition& t) {
  std::map<int, int> mult;
  for (int c : t) ++mult[c];
  Integer z = 1;
  for (auto [c, m] : mult) {
    z *= factorial(m);
    for (int j = 0; j < m; ++j) z *= c;
  }
  return factorial(weight(t)) / z;
}

Integer mn_character(const Partition& lambda, const Partition& t) {
  if (weight(lambda) != weight(t))
    throw std::invalid_argument("mn_character: " + partition_to_string(lambda) + " and " + partition_to_string(t) +
                                " have different sizes");
  Partition tt = t;
  std::sort(tt.begin(), tt.end());  // largest cycle removed first
  return mn_rec(lambda, tt);
}

Partition power_cycle_type(const Partition& t, int alpha) {
  if (alpha < 1) throw std::invalid_argument("power_cycle_type: exponent must be positive");
  Partition out;
  for (int c : t) {
    int g = std::gcd(c, alpha);
    for (int j = 0; j < g; ++j) out.push_back(c / g);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

const Rational& CharVector::at(const Partition& t) const { return values.at(class_index(d).at(t)); }

CharVector irreducible_character(const Partition& lambda) {
  CharVector chi{weight(lambda), {}};
  for (const auto& t : partitions(chi.d)) chi.values.emplace_back(mn_character(lambda, t));
  return chi;
}

Rational inner_product(const CharVector& a, const CharVector& b) {
  if (a.d != b.d) throw std::invalid_argument("inner_product: different groups");
  const auto ps = partitions(a.d);
  Rational s = 0;
  for (std::size_t c = 0; c < ps.size(); ++c) s += Rational(class_size(ps[c])) * a.values[c] * b.values[c];
  return s / Rational(factorial(a.d));
}

CharVector sym_power_char(const CharVector& chi, int k) { return power_sum_char(chi, k, false); }
CharVector ext_power_char(const CharVector& chi, int k) { return power_sum_char(chi, k, true); }

namespace {
Partition rectangle(int n, int d) { return Partition(n, d / n); }
}  // namespace

Integer dim_sl_invariants(int n, int k, int d) {
  if (n < 1 || k < 0 || d < 0) throw std::invalid_argument("dim_sl_invariants: bad arguments");
  if (d % n) return 0;
  if (d == 0) return 1;
  const auto chi = irreducible_character(rectangle(n, d));
  const auto ps = partitions(d);
  Integer s = 0;
  for (std::size_t c = 0; c < ps.size(); ++c) {
    Integer v = to_integer(chi.values[c], "dim_sl_invariants"), p;
    mpz_pow_ui(p.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(k));
    s += class_size(ps[c]) * p;
  }
  return s / factorial(d);
}

Integer dim_slstar(int n, int k, int d, bool antisym) {
  if (n < 1 || k < 1 || d < 0) throw std::invalid_argument("dim_slstar: bad arguments");
  if (d % n) return 0;
  if (d == 0) return antisym ? (k == 1 ? 1 : 0) : 1;
  const auto chi = irreducible_character(rectangle(n, d));
  const auto pk = antisym ? ext_power_char(chi, k) : sym_power_char(chi, k);
  CharVector triv{d, std::vector<Rational>(pk.values.size(), Rational(1))};
  return to_integer(inner_product(pk, triv), "dim_slstar");
}

std::vector<Integer> decompose_invariant_space(int k, int d) {
  if (k < 1 || d < 0) throw std::invalid_argument("decompose_invariant_space: bad arguments");
  const auto sk = partitions(k);
  if (d % 2) return std::vector<Integer>(sk.size(), 0);
  CharVector psi{k, std::vector<Rational>(sk.size())};
  if (d == 0) {
    std::fill(psi.values.begin(), psi.values.end(), Rational(1));
  } else {
    const auto chi = irreducible_character(rectangle(2, d));
    const auto sd = partitions(d);
    for (std::size_t s = 0; s < sk.size(); ++s) {
      Rational acc = 0;
      for (const auto& h : sd) {
        Rational prod = 1;
        for (int c : sk[s]) prod *= chi.at(power_cycle_type(h, c));
        acc += Rational(class_size(h)) * prod;
      }
      psi.values[s] = acc / Rational(factorial(d));
    }
  }
  std::vector<Integer> out;
  for (const auto& mu : sk) out.push_back(to_integer(inner_product(psi, irreducible_character(mu)), "decompose"));
  return out;
}

const std::vector<Partition>& x_dictionary(int k) {
  static const std::vector<Partition> s4 = {{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  static const std::vector<Partition> s5 = {{5}, {4, 1}, {3, 2}, {3, 1, 1}, {2, 2, 1}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}};
  if (k == 4) return s4;
  if (k == 5) return s5;
  throw std::invalid_argument("x_dictionary: labels are fixed only for S_4 and S_5");
}

std::string format_decomposition(int k, const std::vector<Integer>& mult) {
  const auto sk = partitions(k);
  const auto& dict = x_dictionary(k);
  std::string out;
  for (std::size_t x = 0; x < dict.size(); ++x) {
    auto idx = class_index(k).at(dict[x]);
    const Integer& m = mult.at(idx);
    if (m == 0) continue;
    if (!out.empty()) out += " + ";
    if (m != 1) out += m.get_str();
    out += "X" + std::to_string(x + 1);
  }
  return out.empty() ? "0" : out;
}

DimFormulas dim_formulas(int q) {
  if (q < 2) throw std::invalid_argument("dim_formulas: q >= 2 required");
  Integer p2;
  mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(q - 1));
  DimFormulas f;
  f.sl_deg4 = (p2 + (q % 2 ? -1 : 1)) / 3;
  f.slstar_deg4 = (q + 5) / 6;
  f.sl_deg2 = q % 2 ? 0 : 1;
  return f;
}

std::vector<Partition> s8_reference_order() {
  auto ps = partitions(8);
  std::sort(ps.begin(), ps.end());  // ascending lexicographic on descending parts
  return ps;
}

std::vector<Integer> on_reference_order(const CharVector& chi) {
  if (chi.d != 8) throw std::invalid_argument("on_reference_order: S_8 characters only");
  std::vector<Integer> out;
  for (const auto& t : s8_reference_order()) out.push_back(to_integer(chi.at(t), "on_reference_order"));
  return out;
}

}  // namespace qinv
