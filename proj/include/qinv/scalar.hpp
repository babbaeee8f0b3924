#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qinv {

using Rational = mpq_class;
using Integer = mpz_class;
using Complex = std::complex<double>;

/// Default relative tolerance for comparing float-path values.
inline constexpr double kFloatTolerance = 1e-9;

/// Exact Gaussian integer. Used as the accumulation type of the exact
/// engines once a state has been brought to a common denominator.
struct GaussZ {
  Integer re;
  Integer im;

  GaussZ() = default;
  GaussZ(long r) : re(r), im(0) {}
  GaussZ(Integer r, Integer i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

  GaussZ& operator+=(const GaussZ& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussZ& operator-=(const GaussZ& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussZ& operator*=(const GaussZ& o);
  friend GaussZ operator+(GaussZ a, const GaussZ& b) { return a += b; }
  friend GaussZ operator-(GaussZ a, const GaussZ& b) { return a -= b; }
  friend GaussZ operator*(GaussZ a, const GaussZ& b) { return a *= b; }
  friend GaussZ operator-(const GaussZ& a) { return GaussZ(-a.re, -a.im); }
  friend bool operator==(const GaussZ& a, const GaussZ& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// Exact Gaussian rational re + i*im.
class GaussQ {
 public:
  GaussQ() = default;
  GaussQ(long r) : re_(r), im_(0) {}
  // mpq arithmetic assumes canonical operands.
  GaussQ(Rational r) : re_(std::move(r)), im_(0) { re_.canonicalize(); }
  GaussQ(Rational r, Rational i) : re_(std::move(r)), im_(std::move(i)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussQ i() { return GaussQ(0, 1); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  GaussQ conj() const { return GaussQ(re_, -im_); }
  /// |z|^2 as an exact rational.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussQ& operator+=(const GaussQ& o);
  GaussQ& operator-=(const GaussQ& o);
  GaussQ& operator*=(const GaussQ& o);
  /// Throws std::domain_error on division by zero.
  GaussQ& operator/=(const GaussQ& o);

  friend GaussQ operator+(GaussQ a, const GaussQ& b) { return a += b; }
  friend GaussQ operator-(GaussQ a, const GaussQ& b) { return a -= b; }
  friend GaussQ operator*(GaussQ a, const GaussQ& b) { return a *= b; }
  friend GaussQ operator/(GaussQ a, const GaussQ& b) { return a /= b; }
  friend GaussQ operator-(const GaussQ& a) { return GaussQ(-a.re_, -a.im_); }
  friend bool operator==(const GaussQ& a, const GaussQ& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussQ& a, const GaussQ& b) { return !(a == b); }

  /// Least common multiple of the two denominators.
  Integer denominator_lcm() const;

  Complex to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// "3/2", "-1/5*i", "1/2+3*i".
  std::string to_string() const;

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussQ& z);

/// Parses "a/b" or "a" into a canonical rational; throws std::invalid_argument.
Rational parse_rational(std::string_view text);
/// Parses the to_string() form of a GaussQ, or a plain rational.
GaussQ parse_gauss(std::string_view text);

bool approx_equal(const Complex& a, const Complex& b, double rel = kFloatTolerance);

// ---------------------------------------------------------------------------
// Uniform operations used by the templated engines. The engines are
// instantiated for GaussZ (exact accumulation), GaussQ and Complex.

inline bool is_zero(const GaussZ& x) { return x.is_zero(); }
inline bool is_zero(const GaussQ& x) { return x.is_zero(); }
inline bool is_zero(const Complex& x) { return x == Complex(0.0, 0.0); }

/// acc += a * b
void madd(GaussZ& acc, const GaussZ& a, const GaussZ& b);
inline void madd(GaussQ& acc, const GaussQ& a, const GaussQ& b) { acc += a * b; }
inline void madd(Complex& acc, const Complex& a, const Complex& b) { acc += a * b; }

/// acc += i^k * a * b, k taken mod 4.
void madd_rot(GaussZ& acc, const GaussZ& a, const GaussZ& b, int k);
void madd_rot(GaussQ& acc, const GaussQ& a, const GaussQ& b, int k);
void madd_rot(Complex& acc, const Complex& a, const Complex& b, int k);

/// i^k * x
GaussZ times_i_pow(const GaussZ& x, int k);
GaussQ times_i_pow(const GaussQ& x, int k);
Complex times_i_pow(const Complex& x, int k);

inline GaussQ conj(const GaussQ& x) { return x.conj(); }

template <class T>
T from_rational(const Rational& r);
template <>
inline GaussQ from_rational<GaussQ>(const Rational& r) { return GaussQ(r); }
template <>
inline Complex from_rational<Complex>(const Rational& r) { return {r.get_d(), 0.0}; }

template <class T>
T from_gauss(const GaussQ& z);
template <>
inline GaussQ from_gauss<GaussQ>(const GaussQ& z) { return z; }
template <>
inline Complex from_gauss<Complex>(const GaussQ& z) { return z.to_complex(); }

inline std::string to_string(const GaussQ& z) { return z.to_string(); }
std::string to_string(const Complex& z);

}  // namespace qinv
