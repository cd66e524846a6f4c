#ifndef THUE_PRIMES_HPP
#define THUE_PRIMES_HPP

#include <optional>

#include <gmpxx.h>

#include "thue/logreal.hpp"

namespace thue {

/// Deterministic Miller-Rabin below 2^64; BPSW (GMP) above.
bool is_prime(const mpz_class& n);

/// Smallest prime p >= x (x <= 2 gives 2).
mpz_class next_prime_geq(const mpz_class& x);
/// Smallest prime p > x.
mpz_class next_prime_gt(const mpz_class& x);

struct PrimeSelection {
  LogReal target;
  /// Unset when the target is past the integer conversion cap.
  std::optional<mpz_class> prime;
  /// p < 2 * target, as guaranteed by Bertrand's postulate.
  bool bertrand_ok = false;
  bool capped = false;
};

/// Smallest prime >= ceil(x), or a capped record when x is too large to
/// convert. With `strict`, the prime is > x instead.
PrimeSelection select_prime(const LogReal& x, bool strict = false, const Real& cap = LogReal::default_cap());

}  // namespace thue

#endif  // THUE_PRIMES_HPP
