#include "seczeros/bigfloat.hpp"

#include <cmath>
#include <cstdio>
#include <utility>
#include <vector>

#include "seczeros/errors.hpp"

namespace sz {

void init_numeric_thread() {
  mpfr_set_emax(mpfr_get_emax_max());
  mpfr_set_emin(mpfr_get_emin_min());
}

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_nan(v_);
}

Real::Real(const Real& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::of(double x, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_d(r.v_, x, MPFR_RNDN);
  return r;
}

Real Real::of(std::int64_t x, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_si(r.v_, static_cast<long>(x), MPFR_RNDN);
  return r;
}

Real Real::parse(const std::string& text, mpfr_prec_t prec) {
  Real r(prec);
  if (mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0) {
    throw IoError("invalid numeric literal: '" + text + "'");
  }
  return r;
}

Real Real::pi(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

std::string Real::to_string() const {
  int digits = static_cast<int>(std::ceil(static_cast<double>(prec()) * 0.30103)) + 2;
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
  return std::string(buf.data());
}

namespace {
mpfr_prec_t join_prec(const Real& a, const Real& b) {
  return a.prec() > b.prec() ? a.prec() : b.prec();
}
}  // namespace

Real operator+(const Real& a, const Real& b) {
  Real r(join_prec(a, b));
  mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(join_prec(a, b));
  mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(join_prec(a, b));
  mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r(join_prec(a, b));
  mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

Real Real::operator-() const {
  Real r(prec());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

Real& Real::operator+=(const Real& b) {
  mpfr_add(v_, v_, b.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& b) {
  mpfr_sub(v_, v_, b.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& b) {
  mpfr_mul(v_, v_, b.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& b) {
  mpfr_div(v_, v_, b.v_, MPFR_RNDN);
  return *this;
}

Real abs(const Real& a) {
  Real r(a.prec());
  mpfr_abs(r.v_, a.v_, MPFR_RNDN);
  return r;
}

Real sqrt(const Real& a) {
  Real r(a.prec());
  mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
  return r;
}

Real exp(const Real& a) {
  Real r(a.prec());
  mpfr_exp(r.v_, a.v_, MPFR_RNDN);
  return r;
}

Real log(const Real& a) {
  Real r(a.prec());
  mpfr_log(r.v_, a.v_, MPFR_RNDN);
  return r;
}

Real sin(const Real& a) {
  Real r(a.prec());
  mpfr_sin(r.v_, a.v_, MPFR_RNDN);
  return r;
}

Real cos(const Real& a) {
  Real r(a.prec());
  mpfr_cos(r.v_, a.v_, MPFR_RNDN);
  return r;
}

Real hypot(const Real& a, const Real& b) {
  Real r(join_prec(a, b));
  mpfr_hypot(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

Real atan2(const Real& y, const Real& x) {
  Real r(join_prec(y, x));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real pow_si(const Real& a, std::int64_t e) {
  Real r(a.prec());
  mpfr_pow_si(r.v_, a.v_, static_cast<long>(e), MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) {
  Real r(join_prec(a, b));
  mpfr_max(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

Real min(const Real& a, const Real& b) {
  Real r(join_prec(a, b));
  mpfr_min(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

Real Real::ldexp_si(std::int64_t e) const {
  Real r(prec());
  mpfr_mul_2si(r.v_, v_, static_cast<long>(e), MPFR_RNDN);
  return r;
}

Real Real::round_to(mpfr_prec_t prec) const {
  Real r(prec);
  mpfr_set(r.raw(), v_, MPFR_RNDN);
  return r;
}

Complex::Complex(mpfr_prec_t prec) : re(Real::of(0.0, prec)), im(Real::of(0.0, prec)) {}

Complex Complex::of(double r, double i, mpfr_prec_t prec) {
  return Complex(Real::of(r, prec), Real::of(i, prec));
}

Complex Complex::zero(mpfr_prec_t prec) { return Complex(prec); }

Complex operator+(const Complex& a, const Complex& b) {
  return Complex(a.re + b.re, a.im + b.im);
}

Complex operator-(const Complex& a, const Complex& b) {
  return Complex(a.re - b.re, a.im - b.im);
}

Complex operator*(const Complex& a, const Complex& b) {
  return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

Complex operator/(const Complex& a, const Complex& b) {
  Real d = b.re * b.re + b.im * b.im;
  return Complex((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
}

Complex Complex::operator-() const { return Complex(-re, -im); }

Complex& Complex::operator+=(const Complex& b) {
  re += b.re;
  im += b.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& b) {
  re -= b.re;
  im -= b.im;
  return *this;
}

Complex conj(const Complex& a) { return Complex(a.re, -a.im); }

Real abs(const Complex& a) { return hypot(a.re, a.im); }

Complex sqrt(const Complex& a) {
  mpfr_prec_t p = a.prec();
  if (a.is_zero()) return Complex::zero(p);
  Real m = abs(a);
  // w = sqrt((|z| + |Re z|) / 2); the other component is |Im z| / (2w).
  Real w = sqrt((m + abs(a.re)).ldexp_si(-1));
  Real half = Real::of(0.5, p);
  if (a.re.sign() >= 0) {
    return Complex(w, a.im / w * half);
  }
  Real u = abs(a.im) / w * half;
  return a.im.sign() >= 0 ? Complex(u, w) : Complex(u, -w);
}

Complex Complex::scaled(const Real& s) const { return Complex(re * s, im * s); }

}  // namespace sz
