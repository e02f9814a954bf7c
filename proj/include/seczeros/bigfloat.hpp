#pragma once

#include <mpfr.h>

#include <cstdint>
#include <string>

namespace sz {

// Widens the MPFR exponent range of the calling thread to the library maximum.
// The default range caps binary exponents near 2^30, which is too small for the
// magnitudes this code manipulates (natural-log magnitudes around 1e9 need
// binary exponents around 1.5e9).  MPFR keeps emin/emax in thread-local state,
// so every thread that touches Real must call this before doing arithmetic.
void init_numeric_thread();

// Arbitrary-precision real number.  Thin RAII wrapper over mpfr_t with
// value-semantics; binary operations round to the larger operand precision.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 128);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real of(double x, mpfr_prec_t prec);
  static Real of(std::int64_t x, mpfr_prec_t prec);
  // Parses a decimal literal ("1.25e-300", "inf", "-inf", "nan").
  static Real parse(const std::string& text, mpfr_prec_t prec);
  static Real pi(mpfr_prec_t prec);

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Shortest-ish decimal form that round-trips at this precision.
  std::string to_string() const;

  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_inf() const { return mpfr_inf_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  Real operator-() const;
  Real& operator+=(const Real& b);
  Real& operator-=(const Real& b);
  Real& operator*=(const Real& b);
  Real& operator/=(const Real& b);

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }

  friend Real abs(const Real& a);
  friend Real sqrt(const Real& a);
  friend Real exp(const Real& a);
  friend Real log(const Real& a);
  friend Real sin(const Real& a);
  friend Real cos(const Real& a);
  friend Real hypot(const Real& a, const Real& b);
  friend Real atan2(const Real& y, const Real& x);
  friend Real pow_si(const Real& a, std::int64_t e);
  friend Real max(const Real& a, const Real& b);
  friend Real min(const Real& a, const Real& b);

  // Scales by a power of two (exact).
  Real ldexp_si(std::int64_t e) const;

  // Same value carried at another precision (exact when widening).
  Real round_to(mpfr_prec_t prec) const;

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  mpfr_t v_;
};

// Complex number over Real.  Component precision is uniform per value.
struct Complex {
  Real re;
  Real im;

  explicit Complex(mpfr_prec_t prec = 128);
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  static Complex of(double r, double i, mpfr_prec_t prec);
  static Complex zero(mpfr_prec_t prec);

  mpfr_prec_t prec() const { return re.prec(); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_finite() const { return !re.is_nan() && !im.is_nan() && !re.is_inf() && !im.is_inf(); }

  friend Complex operator+(const Complex& a, const Complex& b);
  friend Complex operator-(const Complex& a, const Complex& b);
  friend Complex operator*(const Complex& a, const Complex& b);
  friend Complex operator/(const Complex& a, const Complex& b);
  Complex operator-() const;
  Complex& operator+=(const Complex& b);
  Complex& operator-=(const Complex& b);

  friend Complex conj(const Complex& a);
  friend Real abs(const Complex& a);
  // Principal square root.
  friend Complex sqrt(const Complex& a);

  Complex scaled(const Real& s) const;
};

}  // namespace sz
