#ifndef THUE_LOGREAL_HPP
#define THUE_LOGREAL_HPP

#include <compare>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "thue/real.hpp"

namespace thue {

/// Signed scalar stored as (sign, natural log of magnitude). Handles values
/// like n^(800 ln^2 n) that overflow every float format.
class LogReal {
 public:
  static constexpr mpfr_prec_t kPrecision = 192;

  /// Zero.
  LogReal() : ln_(kPrecision) {}

  static LogReal from_log(const Real& ln_magnitude, int sign = 1);
  static LogReal from_integer(const mpz_class& v);
  static LogReal from_rational(const mpq_class& v);
  static LogReal from_real(const Real& v);
  static LogReal from_double(double v);

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }
  /// Natural log of |value|; throws std::domain_error for zero.
  const Real& log_magnitude() const;
  /// ln|value| as a double; -inf for zero.
  double ln_double() const;

  LogReal operator-() const;
  LogReal abs() const;
  friend LogReal operator*(const LogReal& a, const LogReal& b);
  friend LogReal operator/(const LogReal& a, const LogReal& b);
  friend LogReal operator+(const LogReal& a, const LogReal& b);
  friend LogReal operator-(const LogReal& a, const LogReal& b);

  /// Integer powers keep the sign rule; other exponents need a positive base.
  LogReal pow(const mpq_class& e) const;
  LogReal pow(const Real& e) const;

  friend std::weak_ordering operator<=>(const LogReal& a, const LogReal& b);
  friend bool operator==(const LogReal& a, const LogReal& b) { return (a <=> b) == 0; }

  /// Value as a Real; overflows to +-inf beyond the MPFR exponent range.
  Real to_real(mpfr_prec_t prec = kDefaultPrecisionBits) const;
  double to_double() const;

  /// Default conversion cap: ln(10^10000).
  static const Real& default_cap();
  /// floor / ceil of the value, or nullopt when ln|value| >= cap.
  std::optional<mpz_class> floor_integer(const Real& cap = default_cap()) const;
  std::optional<mpz_class> ceil_integer(const Real& cap = default_cap()) const;

  /// "0", or "+exp(1060.66...)" style.
  std::string to_string(int digits = 12) const;

 private:
  int sign_ = 0;
  Real ln_;
};

LogReal exp_log(const Real& x);
inline LogReal pow(const LogReal& a, const mpq_class& e) { return a.pow(e); }

}  // namespace thue

#endif  // THUE_LOGREAL_HPP
