#include "thue/primes.hpp"

#include <cstdint>

namespace thue {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Bases 2..37 are a deterministic witness set for n < 3.3e24.
bool miller_rabin_u64(u64 n) {
  if (n < 2) return false;
  static constexpr u64 small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : small) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (u64 a : small) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace

bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
    u64 v = 0;
    mpz_export(&v, nullptr, -1, sizeof v, 0, 0, n.get_mpz_t());
    return miller_rabin_u64(v);
  }
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

mpz_class next_prime_geq(const mpz_class& x) {
  if (x <= 2) return 2;
  mpz_class p = x;
  if (mpz_even_p(p.get_mpz_t())) ++p;
  while (!is_prime(p)) p += 2;
  return p;
}

mpz_class next_prime_gt(const mpz_class& x) { return next_prime_geq(x + 1); }

PrimeSelection select_prime(const LogReal& x, bool strict, const Real& cap) {
  PrimeSelection sel;
  sel.target = x;
  if (x.sign() > 0 && x.log_magnitude() >= cap) {
    sel.capped = true;
    return sel;
  }
  std::optional<mpz_class> lo = strict ? x.floor_integer(cap) : x.ceil_integer(cap);
  if (!lo) {
    sel.capped = true;
    return sel;
  }
  sel.prime = strict ? next_prime_gt(*lo) : next_prime_geq(*lo);
  sel.bertrand_ok = x.sign() <= 0 ? *sel.prime == 2 : LogReal::from_integer(*sel.prime) < x * LogReal::from_integer(2);
  return sel;
}

}  // namespace thue
