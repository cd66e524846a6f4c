#ifndef THUE_SRC_VERIFY_UTIL_HPP
#define THUE_SRC_VERIFY_UTIL_HPP

// Shared numeric helpers for the checkers. Not installed.

#include <gmpxx.h>

#include "thue/logreal.hpp"
#include "thue/real.hpp"
#include "thue/roots.hpp"

namespace thue::detail {

struct Bounds {
  Real lo, hi;
};

/// Enclosure of |alpha - q| for the root in `r` (disc radius plus rounding).
inline Bounds distance_to_rational(const RootApprox& r, const mpq_class& q, mpfr_prec_t prec) {
  const Complex d(r.center.re.with_precision(prec) - Real(q, prec), r.center.im.with_precision(prec));
  const Real mid = d.abs();
  const Real scale = r.center.abs().with_precision(prec) + abs(Real(q, prec)) + 1L;
  const Real slack = r.radius.with_precision(prec) + pow(Real(2L, prec), -static_cast<long>(prec) + 6) * scale;
  Real lo = mid - slack;
  if (lo.sign() < 0) lo = Real(prec);
  return {lo, mid + slack};
}

/// ln of a positive Real, -inf (as a very negative number) for zero.
inline Real ln_or_floor(const Real& v) {
  if (v.sign() <= 0) return Real(-1e300, v.precision());
  return log(v);
}

inline Real ln_z(const mpz_class& v) { return LogReal::from_integer(v).log_magnitude(); }

}  // namespace thue::detail

#endif  // THUE_SRC_VERIFY_UTIL_HPP
