#include "qinv/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qinv {

const std::map<std::string, std::string>& bundled_map();  // generated

const std::string& bundled_file(std::string_view name) {
  const auto& m = bundled_map();
  auto it = m.find(std::string(name));
  if (it == m.end()) throw std::out_of_range("no bundled data file '" + std::string(name) + "'");
  return it->second;
}

std::vector<std::string> bundled_files() {
  std::vector<std::string> out;
  for (const auto& [k, v] : bundled_map()) out.push_back(k);
  return out;
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      bool same = std::tolower(static_cast<unsigned char>(a[i - 1])) ==
                  std::tolower(static_cast<unsigned char>(b[j - 1]));
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (same ? 0 : 1)});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

namespace {

std::vector<std::string> closest(const std::vector<std::string>& pool, std::string_view name,
                                 std::size_t count) {
  std::vector<std::pair<std::size_t, std::string>> scored;
  for (const auto& n : pool) scored.emplace_back(edit_distance(name, n), n);
  std::stable_sort(scored.begin(), scored.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<std::string> out;
  for (std::size_t k = 0; k < scored.size() && k < count; ++k) out.push_back(scored[k].second);
  return out;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
  return s;
}

// Either a constant or an invariant scaled by nothing.
struct Value {
  std::optional<Invariant> inv;
  GaussQ c = GaussQ(1);

  bool is_const() const { return !inv; }
  Invariant as_inv() const {
    if (!inv) throw std::invalid_argument("expected an invariant, got the constant " + c.to_string());
    return c == GaussQ(1) ? *inv : inv->scaled(c);
  }
};

class ExprParser {
 public:
  using Lookup = std::function<const Invariant&(const std::string&)>;
  ExprParser(std::string_view text, Lookup lookup) : s_(text), lookup_(std::move(lookup)) {}

  Invariant parse() {
    Value v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v.as_inv();
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("column " + std::to_string(pos_ + 1) + ": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  static Value add(const Value& a, const Value& b, int sign) {
    if (a.is_const() && b.is_const()) return {std::nullopt, sign > 0 ? a.c + b.c : a.c - b.c};
    if (a.is_const() || b.is_const())
      throw std::invalid_argument("cannot add a constant to an invariant (inhomogeneous)");
    return {Invariant::sum({{a.c, *a.inv}, {sign > 0 ? b.c : -b.c, *b.inv}}), GaussQ(1)};
  }
  static Value mul(const Value& a, const Value& b) {
    if (a.is_const()) return {b.inv, a.c * b.c};
    if (b.is_const()) return {a.inv, a.c * b.c};
    return {Invariant::product({*a.inv, *b.inv}), a.c * b.c};
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (eat('+')) v = add(v, term(), +1);
      else if (eat('-')) v = add(v, term(), -1);
      else return v;
    }
  }
  Value term() {
    Value v = unary();
    for (;;) {
      if (eat('*')) {
        v = mul(v, unary());
      } else if (eat('/')) {
        Value d = unary();
        if (!d.is_const()) fail("division by an invariant");
        if (d.c.is_zero()) fail("division by zero");
        v.c = v.c / d.c;
      } else {
        return v;
      }
    }
  }
  Value unary() {
    if (eat('-')) {
      Value v = unary();
      v.c = -v.c;
      return v;
    }
    return power();
  }
  Value power() {
    Value v = primary();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an integer exponent");
      int k = std::stoi(std::string(s_.substr(start, pos_ - start)));
      if (v.is_const()) {
        GaussQ r(1);
        for (int j = 0; j < k; ++j) r *= v.c;
        return {std::nullopt, r};
      }
      GaussQ c(1);
      for (int j = 0; j < k; ++j) c *= v.c;
      return {Invariant::power(*v.inv, k), c};
    }
    return v;
  }
  std::string quoted() {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != '"') fail("expected a quoted string");
    auto close = s_.find('"', pos_ + 1);
    if (close == std::string_view::npos) fail("unterminated string");
    std::string out(s_.substr(pos_ + 1, close - pos_ - 1));
    pos_ = close + 1;
    return out;
  }
  std::string bare_until(char stop) {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] != stop) ++pos_;
    std::string out(s_.substr(start, pos_ - start));
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
    return out;
  }
  Value primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return {std::nullopt, GaussQ(parse_rational(s_.substr(start, pos_ - start)))};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string word(s_.substr(start, pos_ - start));
      skip();
      bool call = pos_ < s_.size() && s_[pos_] == '(';
      if (!call) {
        if (word == "i") return {std::nullopt, GaussQ::i()};
        return {lookup_(word), GaussQ(1)};
      }
      ++pos_;
      Value v = call_builtin(word);
      expect(')');
      return v;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
  Value call_builtin(const std::string& f) {
    if (f == "comb") return {Invariant::comb(parse_comb_spec(quoted())), GaussQ(1)};
    if (f == "net") return {Invariant::network(parse_network(bundled_file(bare_until(')')))), GaussQ(1)};
    if (f == "recipe") return {Invariant::recipe(parse_recipe(bundled_file(bare_until(')')))), GaussQ(1)};
    if (f == "det4") {
      std::istringstream in(bare_until(')'));
      std::array<int, 16> idx{};
      int k = 0, v;
      while (in >> v) {
        if (k == 16) fail("det4 takes 16 indices");
        idx[k++] = v;
      }
      if (k != 16 || !in.eof()) fail("det4 takes 16 integer indices");
      return {Invariant::det4(idx), GaussQ(1)};
    }
    if (f == "sym" || f == "asym") {
      Invariant base = expr().as_inv();
      return {Invariant::symmetrized(base, f == "sym" ? SymMode::Sym : SymMode::Asym), GaussQ(1)};
    }
    if (f == "perm") {
      std::string cycles = quoted();
      expect(',');
      Invariant base = expr().as_inv();
      return {Invariant::permuted(QubitPermutation::parse_cycles(cycles, base.qubits()), base), GaussQ(1)};
    }
    fail("unknown function '" + f + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  Lookup lookup_;
};

}  // namespace

Catalog Catalog::parse(std::string_view manifest) {
  Catalog cat;
  std::istringstream in{std::string(manifest)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string note;
    auto hash = line.find('#');
    if (hash != std::string::npos) {
      note = line.substr(hash + 1);
      line.resize(hash);
      note.erase(0, note.find_first_not_of(" #"));
    }
    auto eq = line.find('=');
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    auto where = [&] { return "catalog line " + std::to_string(lineno) + ": "; };
    if (eq == std::string::npos) throw std::invalid_argument(where() + "expected NAME = EXPR");
    std::string name = line.substr(0, eq);
    name.erase(name.find_last_not_of(" \t") + 1);
    name.erase(0, name.find_first_not_of(" \t"));
    std::string src = line.substr(eq + 1);
    src.erase(0, src.find_first_not_of(" \t"));
    src.erase(src.find_last_not_of(" \t") + 1);
    if (name.empty()) throw std::invalid_argument(where() + "missing name");
    if (cat.has(name)) throw std::invalid_argument(where() + "duplicate name '" + name + "'");
    try {
      Invariant inv = cat.expression(src);
      cat.entries_.emplace(name, CatalogEntry{name, src, note, inv});
      cat.order_.push_back(name);
    } catch (const std::exception& e) {
      throw std::invalid_argument(where() + name + ": " + e.what());
    }
  }
  return cat;
}

const Catalog& Catalog::builtin() {
  static const Catalog cat = parse(bundled_file("catalog.txt"));
  return cat;
}

bool Catalog::has(std::string_view name) const { return entries_.find(name) != entries_.end(); }

const CatalogEntry& Catalog::entry(std::string_view name) const {
  auto it = entries_.find(name);
  if (it == entries_.end())
    throw std::out_of_range("unknown invariant '" + std::string(name) + "'; closest: " +
                            join(nearest(name)));
  return it->second;
}

Invariant Catalog::expression(std::string_view text) const {
  ExprParser p(text, [this](const std::string& n) -> const Invariant& { return get(n); });
  return p.parse();
}

std::vector<std::string> Catalog::nearest(std::string_view name, std::size_t count) const {
  return closest(order_, name, count);
}

// ---------------------------------------------------------------------------

ExactState ring_graph_state(int q) {
  auto psi = ExactState::zero(q);
  for (std::size_t n = 0; n < psi.dim(); ++n) {
    int edges = 0;
    for (int j = 0; j < q; ++j) edges += (n >> j & 1) & (n >> ((j + 1) % q) & 1);
    psi[n] = GaussQ(edges % 2 ? -1 : 1);
  }
  return psi;
}

namespace {

NamedState exact_named(std::string name, std::string note, ExactState psi) {
  return {std::move(name), std::move(note), to_float(psi), std::move(psi)};
}

NamedState kets(std::string name, std::string note, int q,
                std::vector<std::pair<std::uint64_t, GaussQ>> terms) {
  return exact_named(std::move(name), std::move(note), state_from_kets(q, terms));
}

NamedState float_kets(std::string name, std::string note, int q,
                      std::vector<std::pair<std::uint64_t, Complex>> terms) {
  return {std::move(name), std::move(note), state_from_kets(q, terms), std::nullopt};
}

const std::vector<NamedState>& states() {
  static const std::vector<NamedState> all = [] {
    const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), s6 = 1.0 / std::sqrt(6.0);
    std::vector<NamedState> v;
    v.push_back(kets("GHZ4", "|0000> + |1111>", 4, {{0, 1}, {15, 1}}));
    v.push_back(kets("cluster4", "|0000> + |1100> + |0011> - |1111>", 4,
                     {{0, 1}, {3, 1}, {12, 1}, {15, -1}}));
    v.push_back(float_kets("X4", "(sqrt2 |1111> + |1000> + |0100> + |0010> + |0001>)/sqrt6", 4,
                           {{15, r2 * s6}, {1, s6}, {2, s6}, {4, s6}, {8, s6}}));
    v.push_back(kets("GHZ5", "|0> + |31>", 5, {{0, 1}, {31, 1}}));
    v.push_back(kets("graph5_a", "star graph, equivalent to |0> + |31>", 5, {{0, 1}, {31, 1}}));
    v.push_back(kets("graph5_b", "|1> + |2> + |28> + |31>", 5, {{1, 1}, {2, 1}, {28, 1}, {31, 1}}));
    v.push_back(kets("graph5_c", "|1> + |6> + |24> + |31>", 5, {{1, 1}, {6, 1}, {24, 1}, {31, 1}}));
    v.push_back(exact_named("graph5_d", "five-qubit ring graph state", ring_graph_state(5)));
    v.push_back(float_kets("os5_a", "|1> + |2> + |4> + |24> + sqrt2 |31>", 5,
                           {{1, 1}, {2, 1}, {4, 1}, {24, 1}, {31, r2}}));
    v.push_back(float_kets("os5_b", "|1> + |2> + |4> + |8> + sqrt3 |31>", 5,
                           {{1, 1}, {2, 1}, {4, 1}, {8, 1}, {31, r3}}));
    v.push_back(kets("GHZ3", "|000> + |111>", 3, {{0, 1}, {7, 1}}));
    v.push_back(kets("bell", "|00> + |11>", 2, {{0, 1}, {3, 1}}));
    return v;
  }();
  return all;
}

}  // namespace

const NamedState& named_state(std::string_view name) {
  for (const auto& s : states())
    if (s.name == name) return s;
  throw std::out_of_range("unknown state '" + std::string(name) + "'; closest: " +
                          join(closest(named_state_names(), name, 3)));
}

std::vector<std::string> named_state_names() {
  std::vector<std::string> out;
  for (const auto& s : states()) out.push_back(s.name);
  return out;
}

Rational norm_squared(const ExactState& psi) {
  Rational n = 0;
  for (const auto& a : psi.amplitudes()) n += a.norm();
  return n;
}

double norm_squared(const FloatState& psi) {
  double n = 0;
  for (const auto& a : psi.amplitudes()) n += std::norm(a);
  return n;
}

GaussQ normalized_value(const Invariant& inv, const ExactState& psi) {
  if (inv.degree() % 2) throw std::invalid_argument("normalized_value: odd degree");
  Rational n = norm_squared(psi), s = 1;
  for (int k = 0; k < inv.degree() / 2; ++k) s *= n;
  return inv.eval(psi) / GaussQ(s);
}

Complex normalized_value(const Invariant& inv, const FloatState& psi) {
  return inv.eval(psi) / std::pow(norm_squared(psi), inv.degree() / 2.0);
}

}  // namespace qinv
