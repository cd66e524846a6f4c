#include "thue/logreal.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace thue {

namespace {

constexpr mpfr_prec_t P = LogReal::kPrecision;

Real ln_of_mpz(const mpz_class& v) {
  // ln|v| = ln(mantissa) + exp * ln 2, exact to working precision for any size.
  mpz_class a = abs(v);
  const std::size_t bits = mpz_sizeinbase(a.get_mpz_t(), 2);
  if (bits <= static_cast<std::size_t>(P) + 64) return log(Real(a, P + 64)).with_precision(P);
  const long shift = static_cast<long>(bits) - P - 64;
  mpz_class top;
  mpz_fdiv_q_2exp(top.get_mpz_t(), a.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  // Truncation error below 2^-(P+63) relative.
  return (log(Real(top, P + 64)) + const_log2(P + 64) * shift).with_precision(P);
}

}  // namespace

LogReal LogReal::from_log(const Real& ln_magnitude, int sign) {
  LogReal r;
  if (sign == 0) return r;
  if (!ln_magnitude.is_finite()) throw std::domain_error("LogReal: non-finite log magnitude");
  r.sign_ = sign > 0 ? 1 : -1;
  r.ln_ = ln_magnitude.with_precision(P);
  return r;
}

LogReal LogReal::from_integer(const mpz_class& v) {
  if (v == 0) return {};
  return from_log(ln_of_mpz(v), sgn(v));
}

LogReal LogReal::from_rational(const mpq_class& v) {
  if (v == 0) return {};
  LogReal r = from_log(ln_of_mpz(v.get_num()) - ln_of_mpz(v.get_den()), sgn(v));
  return r;
}

LogReal LogReal::from_real(const Real& v) {
  if (v.is_zero()) return {};
  if (!v.is_finite()) throw std::domain_error("LogReal: non-finite value");
  return from_log(log(thue::abs(v).with_precision(std::max(P, v.precision()))), v.sign());
}

LogReal LogReal::from_double(double v) { return from_real(Real(v, 64)); }

const Real& LogReal::log_magnitude() const {
  if (sign_ == 0) throw std::domain_error("LogReal: log of zero");
  return ln_;
}

double LogReal::ln_double() const {
  return sign_ == 0 ? -std::numeric_limits<double>::infinity() : ln_.to_double();
}

LogReal LogReal::operator-() const {
  LogReal r = *this;
  r.sign_ = -r.sign_;
  return r;
}

LogReal LogReal::abs() const {
  LogReal r = *this;
  if (r.sign_ < 0) r.sign_ = 1;
  return r;
}

LogReal operator*(const LogReal& a, const LogReal& b) {
  if (a.sign_ == 0 || b.sign_ == 0) return {};
  return LogReal::from_log(a.ln_ + b.ln_, a.sign_ * b.sign_);
}

LogReal operator/(const LogReal& a, const LogReal& b) {
  if (b.sign_ == 0) throw std::domain_error("LogReal: division by zero");
  if (a.sign_ == 0) return {};
  return LogReal::from_log(a.ln_ - b.ln_, a.sign_ * b.sign_);
}

LogReal operator+(const LogReal& a, const LogReal& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  const bool a_big = a.ln_ >= b.ln_;
  const LogReal& hi = a_big ? a : b;
  const LogReal& lo = a_big ? b : a;
  const Real d = lo.ln_ - hi.ln_;  // <= 0
  if (hi.sign_ == lo.sign_) return LogReal::from_log(hi.ln_ + log1p(exp(d)), hi.sign_);
  if (d.is_zero()) return {};
  return LogReal::from_log(hi.ln_ + log1p(-exp(d)), hi.sign_);
}

LogReal operator-(const LogReal& a, const LogReal& b) { return a + (-b); }

LogReal LogReal::pow(const mpq_class& e) const {
  if (sign_ == 0) {
    if (e <= 0) throw std::domain_error("LogReal: zero to a nonpositive power");
    return {};
  }
  int s = 1;
  if (sign_ < 0) {
    if (e.get_den() != 1) throw std::domain_error("LogReal: fractional power of a negative value");
    if (mpz_odd_p(e.get_num().get_mpz_t())) s = -1;
  }
  return from_log(ln_ * Real(e, P), s);
}

LogReal LogReal::pow(const Real& e) const {
  if (sign_ < 0) throw std::domain_error("LogReal: real power of a negative value");
  if (sign_ == 0) {
    if (e.sign() <= 0) throw std::domain_error("LogReal: zero to a nonpositive power");
    return {};
  }
  return from_log(ln_ * e.with_precision(P), 1);
}

std::weak_ordering operator<=>(const LogReal& a, const LogReal& b) {
  if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
  if (a.sign_ == 0) return std::weak_ordering::equivalent;
  auto c = a.ln_ <=> b.ln_;
  std::weak_ordering w = c == std::partial_ordering::less      ? std::weak_ordering::less
                         : c == std::partial_ordering::greater ? std::weak_ordering::greater
                                                               : std::weak_ordering::equivalent;
  if (a.sign_ < 0) {
    if (w == std::weak_ordering::less) return std::weak_ordering::greater;
    if (w == std::weak_ordering::greater) return std::weak_ordering::less;
  }
  return w;
}

Real LogReal::to_real(mpfr_prec_t prec) const {
  if (sign_ == 0) return Real(prec);
  Real v = exp(ln_.with_precision(prec + 32)).with_precision(prec);
  return sign_ < 0 ? -v : v;
}

double LogReal::to_double() const { return to_real(64).to_double(); }

const Real& LogReal::default_cap() {
  static const Real cap = log(Real(10L, P)) * 10000L;
  return cap;
}

namespace {

std::optional<Real> exact_enough(const LogReal& v, const Real& cap) {
  if (v.is_zero()) return Real(P);
  if (v.log_magnitude() >= cap) return std::nullopt;
  // Enough bits to resolve the integer part, plus guard bits.
  const double bits = std::max(0.0, v.log_magnitude().to_double() / std::log(2.0));
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits) + 96;
  Real r = v.to_real(prec);
  // The log carries ~2^-180 relative error; snap values that are that close to an integer.
  Real nearest(prec);
  mpfr_round(nearest.get(), r.get());
  if (abs(r - nearest) <= abs(r) * pow(Real(2L, prec), -150L)) return nearest;
  return r;
}

}  // namespace

std::optional<mpz_class> LogReal::floor_integer(const Real& cap) const {
  auto r = exact_enough(*this, cap);
  if (!r) return std::nullopt;
  return r->floor_z();
}

std::optional<mpz_class> LogReal::ceil_integer(const Real& cap) const {
  auto r = exact_enough(*this, cap);
  if (!r) return std::nullopt;
  return r->ceil_z();
}

std::string LogReal::to_string(int digits) const {
  if (sign_ == 0) return "0";
  return std::string(sign_ < 0 ? "-" : "+") + "exp(" + ln_.to_string(digits) + ")";
}

LogReal exp_log(const Real& x) { return LogReal::from_log(x, 1); }

}  // namespace thue
