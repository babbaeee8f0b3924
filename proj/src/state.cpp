#include "qinv/state.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qinv {

Op tau(int k) {
  switch (k) {
    case 1: return Op::S0;
    case 2: return Op::S1;
    case 3: return Op::S3;
    default: throw std::invalid_argument("tau index must be 1, 2 or 3");
  }
}

char op_symbol(Op op) {
  switch (op) {
    case Op::S0: return '0';
    case Op::S1: return '1';
    case Op::S2: return 'y';
    case Op::S3: return '3';
    case Op::J: return 'J';
    case Op::Eps: return 'e';
  }
  return '?';
}

template <class T>
Mat2<T> op_matrix(Op op) {
  const T zero = from_rational<T>(0), one = from_rational<T>(1);
  const T i = from_gauss<T>(GaussQ::i());
  switch (op) {
    case Op::S0: return {one, zero, zero, one};
    case Op::S1: return {zero, one, one, zero};
    case Op::S2: return {zero, -i, i, zero};
    case Op::S3: return {one, zero, zero, -one};
    case Op::J: return {one, one, one, one};
    case Op::Eps: return {zero, one, -one, zero};
  }
  throw std::invalid_argument("unknown operator");
}

template <class T>
BasicState<T>::BasicState(int q, std::vector<T> amps) : q_(q), amps_(std::move(amps)) {
  if (q < 1 || q > kMaxQubits)
    throw std::invalid_argument("qubit count " + std::to_string(q) + " outside [1, 8]");
  if (amps_.size() != (std::size_t{1} << q))
    throw std::invalid_argument("amplitude count " + std::to_string(amps_.size()) +
                                " does not match 2^" + std::to_string(q));
}

template <class T>
BasicState<T> BasicState<T>::scaled(const T& c) const {
  std::vector<T> out(amps_);
  for (auto& a : out) a *= c;
  return BasicState(q_, std::move(out));
}

template <class T>
BasicState<T> state_from_kets(int q, const std::vector<std::pair<std::uint64_t, T>>& terms) {
  auto psi = BasicState<T>::zero(q);
  for (const auto& [index, amp] : terms) {
    if (index >= psi.dim())
      throw std::out_of_range("ket index " + std::to_string(index) + " out of range [0, " +
                              std::to_string(psi.dim()) + ")");
    psi[index] += amp;
  }
  return psi;
}

namespace {

// psi <- (1 x .. x A_site x .. x 1) psi
template <class T>
void apply_site(std::vector<T>& psi, int site, const Mat2<T>& a) {
  const std::size_t bit = std::size_t{1} << site;
  for (std::size_t n = 0; n < psi.size(); ++n) {
    if (n & bit) continue;
    T x0 = psi[n], x1 = psi[n | bit];
    psi[n] = a[0] * x0 + a[1] * x1;
    psi[n | bit] = a[2] * x0 + a[3] * x1;
  }
}

}  // namespace

template <class T>
T bilinear_form(std::span<const Op> ops, const BasicState<T>& phi, const BasicState<T>& psi) {
  if (phi.qubits() != psi.qubits() || static_cast<int>(ops.size()) != psi.qubits())
    throw std::invalid_argument("bilinear_form: qubit count mismatch (ops " +
                                std::to_string(ops.size()) + ", states " +
                                std::to_string(phi.qubits()) + "/" +
                                std::to_string(psi.qubits()) + ")");
  std::vector<T> v(psi.amplitudes().begin(), psi.amplitudes().end());
  for (int j = 0; j < psi.qubits(); ++j) apply_site(v, j, op_matrix<T>(ops[j]));
  T acc = from_rational<T>(0);
  for (std::size_t n = 0; n < v.size(); ++n) madd(acc, phi[n], v[n]);
  return acc;
}

namespace {

bool det_is_one(const Mat2<GaussQ>& m, GaussQ& det) {
  det = m[0] * m[3] - m[1] * m[2];
  return det == GaussQ(1);
}

bool det_is_one(const Mat2<Complex>& m, Complex& det) {
  det = m[0] * m[3] - m[1] * m[2];
  return std::abs(det - Complex(1.0, 0.0)) <= 1e-12;
}

}  // namespace

template <class T>
BasicState<T> apply_sl_local(const BasicState<T>& psi, std::span<const Mat2<T>> mats) {
  if (static_cast<int>(mats.size()) != psi.qubits())
    throw std::invalid_argument("apply_sl_local: expected " + std::to_string(psi.qubits()) +
                                " matrices, got " + std::to_string(mats.size()));
  std::vector<T> v(psi.amplitudes().begin(), psi.amplitudes().end());
  for (int j = 0; j < psi.qubits(); ++j) {
    T det;
    if (!det_is_one(mats[j], det))
      throw std::invalid_argument("apply_sl_local: matrix on site " + std::to_string(j + 1) +
                                  " has determinant " + to_string(det) + ", expected 1");
    apply_site(v, j, mats[j]);
  }
  return BasicState<T>(psi.qubits(), std::move(v));
}

ExactState random_exact_state(int q, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-9, 9);
  std::vector<GaussQ> amps(std::size_t{1} << q);
  for (auto& a : amps) {
    int re = dist(rng);
    int im = dist(rng);
    a = GaussQ(re, im);
  }
  return ExactState(q, std::move(amps));
}

FloatState random_float_state(int q, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  std::vector<Complex> amps(std::size_t{1} << q);
  for (auto& a : amps) {
    double re = dist(rng);
    double im = dist(rng);
    a = Complex(re, im);
  }
  return FloatState(q, std::move(amps));
}

Mat2<GaussQ> random_sl2_exact(std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x5eedULL);
  std::uniform_int_distribution<int> part(-3, 3);
  std::uniform_int_distribution<int> diag_pick(0, 5);
  GaussQ x(part(rng), part(rng));
  GaussQ y(part(rng), part(rng));
  static const GaussQ diag_choices[] = {GaussQ(1), GaussQ(2), GaussQ(Rational(1, 2)),
                                        GaussQ(-1), GaussQ(0, 1), GaussQ(3)};
  GaussQ d = diag_choices[diag_pick(rng)];
  GaussQ dinv = GaussQ(1) / d;
  // [[1,x],[0,1]] [[1,0],[y,1]] diag(d, 1/d)
  return {(GaussQ(1) + x * y) * d, x * dinv, y * d, dinv};
}

FloatState to_float(const ExactState& psi) {
  std::vector<Complex> amps;
  amps.reserve(psi.dim());
  for (const auto& a : psi.amplitudes()) amps.push_back(a.to_complex());
  return FloatState(psi.qubits(), std::move(amps));
}

template <class T>
BasicState<T> product_state(int q, const std::vector<std::vector<int>>& blocks,
                            const std::vector<BasicState<T>>& factors) {
  if (blocks.size() != factors.size())
    throw std::invalid_argument("product_state: block/factor count mismatch");
  std::vector<int> seen(q, 0);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (static_cast<int>(blocks[b].size()) != factors[b].qubits())
      throw std::invalid_argument("product_state: block size does not match factor");
    for (int s : blocks[b]) {
      if (s < 0 || s >= q || seen[s]++) throw std::invalid_argument("product_state: bad block");
    }
  }
  for (int s = 0; s < q; ++s)
    if (!seen[s]) throw std::invalid_argument("product_state: blocks do not cover all qubits");
  auto out = BasicState<T>::zero(q);
  for (std::size_t n = 0; n < out.dim(); ++n) {
    T value = from_rational<T>(1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      std::size_t local = 0;
      for (std::size_t k = 0; k < blocks[b].size(); ++k)
        if (n >> blocks[b][k] & 1) local |= std::size_t{1} << k;
      value *= factors[b][local];
    }
    out[n] = value;
  }
  return out;
}

namespace {

int read_header(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("qubits=", 0) != 0)
      throw std::invalid_argument("state file: expected 'qubits=<q>' header, got '" + line + "'");
    return std::stoi(line.substr(7));
  }
  throw std::invalid_argument("state file: missing header");
}

template <class T, class Parse>
BasicState<T> read_state(std::istream& in, Parse parse) {
  int q = read_header(in);
  auto psi = BasicState<T>::zero(q);
  std::string line;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string idx, re, im, extra;
    if (!(ls >> idx >> re >> im) || (ls >> extra))
      throw std::invalid_argument("state file line " + std::to_string(lineno) +
                                  ": expected '<index> <re> <im>'");
    std::uint64_t n = std::stoull(idx);
    if (n >= psi.dim())
      throw std::out_of_range("state file line " + std::to_string(lineno) + ": index " + idx +
                              " out of range [0, " + std::to_string(psi.dim()) + ")");
    psi[n] = parse(re, im);
  }
  return psi;
}

}  // namespace

ExactState read_exact_state(std::istream& in) {
  return read_state<GaussQ>(in, [](const std::string& re, const std::string& im) {
    return GaussQ(parse_rational(re), parse_rational(im));
  });
}

FloatState read_float_state(std::istream& in) {
  return read_state<Complex>(in, [](const std::string& re, const std::string& im) {
    return Complex(std::stod(re), std::stod(im));
  });
}

void write_state(std::ostream& out, const ExactState& psi) {
  out << "qubits=" << psi.qubits() << "\n";
  for (std::size_t n = 0; n < psi.dim(); ++n) {
    if (psi[n].is_zero()) continue;
    Rational re = psi[n].re(), im = psi[n].im();
    out << n << " " << re.get_num() << "/" << re.get_den() << " " << im.get_num() << "/"
        << im.get_den() << "\n";
  }
}

void write_state(std::ostream& out, const FloatState& psi) {
  out << "qubits=" << psi.qubits() << "\n";
  out.precision(17);
  for (std::size_t n = 0; n < psi.dim(); ++n) {
    if (is_zero(psi[n])) continue;
    out << n << " " << psi[n].real() << " " << psi[n].imag() << "\n";
  }
}

template class BasicState<GaussQ>;
template class BasicState<Complex>;
template Mat2<GaussQ> op_matrix<GaussQ>(Op);
template Mat2<Complex> op_matrix<Complex>(Op);
template ExactState state_from_kets(int, const std::vector<std::pair<std::uint64_t, GaussQ>>&);
template FloatState state_from_kets(int, const std::vector<std::pair<std::uint64_t, Complex>>&);
template GaussQ bilinear_form(std::span<const Op>, const ExactState&, const ExactState&);
template Complex bilinear_form(std::span<const Op>, const FloatState&, const FloatState&);
template ExactState apply_sl_local(const ExactState&, std::span<const Mat2<GaussQ>>);
template FloatState apply_sl_local(const FloatState&, std::span<const Mat2<Complex>>);
template ExactState product_state(int, const std::vector<std::vector<int>>&,
                                  const std::vector<ExactState>&);
template FloatState product_state(int, const std::vector<std::vector<int>>&,
                                  const std::vector<FloatState>&);

}  // namespace qinv
