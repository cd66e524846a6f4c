#ifndef THUE_REAL_HPP
#define THUE_REAL_HPP

// Value-semantics wrapper around mpfr_t. Every value carries its own
// precision; binary operations produce a result at the larger of the two
// operand precisions, so nothing here depends on global state.

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace thue {

inline constexpr mpfr_prec_t kDefaultPrecisionBits = 256;

class Real {
 public:
  explicit Real(mpfr_prec_t prec = kDefaultPrecisionBits);
  Real(double v, mpfr_prec_t prec);
  Real(long v, mpfr_prec_t prec);
  Real(int v, mpfr_prec_t prec) : Real(static_cast<long>(v), prec) {}
  Real(const mpz_class& v, mpfr_prec_t prec);
  Real(const mpq_class& v, mpfr_prec_t prec);
  static Real from_string(const std::string& s, mpfr_prec_t prec);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  // Same value, rounded to `prec` bits.
  Real with_precision(mpfr_prec_t prec) const;

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  mpz_class floor_z() const;
  mpz_class ceil_z() const;
  // Scientific notation with `digits` significant digits.
  std::string to_string(int digits = 20) const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);

  friend Real operator-(const Real& a);
  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);

  friend Real operator*(const Real& a, long b);
  friend Real operator/(const Real& a, long b);
  friend Real operator+(const Real& a, long b);
  friend Real operator-(const Real& a, long b);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
  friend std::partial_ordering operator<=>(const Real& a, long b);

 private:
  mpfr_t v_;
};

Real abs(const Real& a);
Real sqrt(const Real& a);
Real log(const Real& a);
Real exp(const Real& a);
Real log1p(const Real& a);
Real pow(const Real& a, const Real& b);
Real pow(const Real& a, long b);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);
Real hypot(const Real& a, const Real& b);
Real const_pi(mpfr_prec_t prec);
Real const_log2(mpfr_prec_t prec);

// Complex numbers over Real; only what root finding and the distance
// checks need.
struct Complex {
  Real re;
  Real im;

  Complex() = default;
  explicit Complex(mpfr_prec_t prec) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  mpfr_prec_t precision() const { return re.precision(); }
  Complex conj() const { return {re, -im}; }
  Real norm() const { return re * re + im * im; }
  Real abs() const { return hypot(re, im); }

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Real& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Real& b);

}  // namespace thue

#endif  // THUE_REAL_HPP
