#include "qinv/scalar.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qinv {

GaussZ& GaussZ::operator*=(const GaussZ& o) {
  Integer r = re * o.re - im * o.im;
  Integer i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

void madd(GaussZ& acc, const GaussZ& a, const GaussZ& b) {
  mpz_addmul(acc.re.get_mpz_t(), a.re.get_mpz_t(), b.re.get_mpz_t());
  mpz_submul(acc.re.get_mpz_t(), a.im.get_mpz_t(), b.im.get_mpz_t());
  mpz_addmul(acc.im.get_mpz_t(), a.re.get_mpz_t(), b.im.get_mpz_t());
  mpz_addmul(acc.im.get_mpz_t(), a.im.get_mpz_t(), b.re.get_mpz_t());
}

void madd_rot(GaussZ& acc, const GaussZ& a, const GaussZ& b, int k) {
  // p = a*b = (pr, pi); i^k p is (pr,pi), (-pi,pr), (-pr,-pi), (pi,-pr).
  mpz_ptr re = acc.re.get_mpz_t();
  mpz_ptr im = acc.im.get_mpz_t();
  mpz_srcptr ar = a.re.get_mpz_t(), ai = a.im.get_mpz_t();
  mpz_srcptr br = b.re.get_mpz_t(), bi = b.im.get_mpz_t();
  switch (k & 3) {
    case 0:
      mpz_addmul(re, ar, br);
      mpz_submul(re, ai, bi);
      mpz_addmul(im, ar, bi);
      mpz_addmul(im, ai, br);
      break;
    case 1:
      mpz_submul(re, ar, bi);
      mpz_submul(re, ai, br);
      mpz_addmul(im, ar, br);
      mpz_submul(im, ai, bi);
      break;
    case 2:
      mpz_submul(re, ar, br);
      mpz_addmul(re, ai, bi);
      mpz_submul(im, ar, bi);
      mpz_submul(im, ai, br);
      break;
    default:
      mpz_addmul(re, ar, bi);
      mpz_addmul(re, ai, br);
      mpz_submul(im, ar, br);
      mpz_addmul(im, ai, bi);
      break;
  }
}

void madd_rot(GaussQ& acc, const GaussQ& a, const GaussQ& b, int k) {
  acc += times_i_pow(a * b, k);
}

void madd_rot(Complex& acc, const Complex& a, const Complex& b, int k) {
  acc += times_i_pow(a * b, k);
}

GaussZ times_i_pow(const GaussZ& x, int k) {
  switch (k & 3) {
    case 0: return x;
    case 1: return GaussZ(-x.im, x.re);
    case 2: return GaussZ(-x.re, -x.im);
    default: return GaussZ(x.im, -x.re);
  }
}

GaussQ times_i_pow(const GaussQ& x, int k) {
  switch (k & 3) {
    case 0: return x;
    case 1: return GaussQ(-x.im(), x.re());
    case 2: return GaussQ(-x.re(), -x.im());
    default: return GaussQ(x.im(), -x.re());
  }
}

Complex times_i_pow(const Complex& x, int k) {
  switch (k & 3) {
    case 0: return x;
    case 1: return {-x.imag(), x.real()};
    case 2: return -x;
    default: return {x.imag(), -x.real()};
  }
}

GaussQ& GaussQ::operator+=(const GaussQ& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussQ& GaussQ::operator-=(const GaussQ& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussQ& GaussQ::operator*=(const GaussQ& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussQ& GaussQ::operator/=(const GaussQ& o) {
  if (o.is_zero()) throw std::domain_error("GaussQ: division by zero");
  Rational n = o.norm();
  Rational r = (re_ * o.re_ + im_ * o.im_) / n;
  Rational i = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Integer GaussQ::denominator_lcm() const {
  Integer out;
  mpz_lcm(out.get_mpz_t(), re_.get_den_mpz_t(), im_.get_den_mpz_t());
  return out;
}

std::string GaussQ::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = im_.get_str() + "*i";
  }
  if (sgn(re_) == 0) return imag;
  std::string out = re_.get_str();
  if (sgn(im_) > 0) out += "+";
  return out + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussQ& z) { return os << z.to_string(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto first = s.find_first_not_of(" \t");
  auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) throw std::invalid_argument("empty rational");
  s = s.substr(first, last - first + 1);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  auto slash = s.find('/');
  auto digits_ok = [](std::string_view d, bool allow_sign) {
    if (allow_sign && !d.empty() && d[0] == '-') d.remove_prefix(1);
    if (d.empty()) return false;
    for (char c : d)
      if (c < '0' || c > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!digits_ok(s, true)) throw std::invalid_argument("malformed rational '" + s + "'");
    return Rational(Integer(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false))
    throw std::invalid_argument("malformed rational '" + s + "'");
  Integer d(den);
  if (sgn(d) == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Rational r(Integer(num), d);
  r.canonicalize();
  return r;
}

GaussQ parse_gauss(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty scalar");
  if (s.back() != 'i') return GaussQ(parse_rational(s));
  // Split the imaginary term at the last sign that is not at position 0.
  std::string body = s.substr(0, s.size() - 1);
  if (!body.empty() && body.back() == '*') body.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != '/') {
      split = k;
      break;
    }
  }
  std::string real_part = split == std::string::npos ? "" : body.substr(0, split);
  std::string imag_part = split == std::string::npos ? body : body.substr(split);
  Rational im;
  if (imag_part.empty() || imag_part == "+") {
    im = 1;
  } else if (imag_part == "-") {
    im = -1;
  } else {
    im = parse_rational(imag_part);
  }
  Rational re = real_part.empty() ? Rational(0) : parse_rational(real_part);
  return GaussQ(re, im);
}

bool approx_equal(const Complex& a, const Complex& b, double rel) {
  double scale = std::max({std::abs(a), std::abs(b), 1.0});
  return std::abs(a - b) <= rel * scale;
}

std::string to_string(const Complex& z) {
  std::ostringstream os;
  os << std::setprecision(12) << z.real();
  if (z.imag() != 0.0) os << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "*i";
  return os.str();
}

}  // namespace qinv
