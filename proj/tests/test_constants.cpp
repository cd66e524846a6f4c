#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "thue/constants.hpp"
#include "thue/logreal.hpp"
#include "thue/measure.hpp"
#include "thue/primes.hpp"

using namespace thue;

namespace {

BinaryForm cubic() { return make_form({{3, 1}, {0, -2}}, 3); }

double d(const Real& r) { return r.to_double(); }

bool close(double a, double b, double rel) { return std::fabs(a - b) <= rel * std::fabs(b); }

}  // namespace

TEST_CASE("LogReal algebra") {
  const LogReal a = LogReal::from_integer(mpz_class("123456789012345678901234567890"));
  const LogReal b = LogReal::from_rational(mpq_class(-7, 3));
  const Real tol(1e-18, LogReal::kPrecision);
  CHECK(abs(((a * b) / b).log_magnitude() - a.log_magnitude()) < tol);
  CHECK(((a * b) / b).sign() == 1);
  CHECK((a * b).sign() == -1);
  CHECK(abs(a.pow(mpq_class(3, 7)).pow(mpq_class(7, 3)).log_magnitude() - a.log_magnitude()) < tol);
  CHECK(b.pow(mpq_class(3)).sign() == -1);
  CHECK(b.pow(mpq_class(2)).sign() == 1);
  CHECK_THROWS_AS(b.pow(mpq_class(1, 2)), std::domain_error);

  // Addition against exact rationals.
  const LogReal s = LogReal::from_integer(1000) + LogReal::from_integer(-1);
  CHECK(std::fabs(s.to_double() - 999.0) < 1e-12);
  CHECK((LogReal::from_integer(5) - LogReal::from_integer(5)).is_zero());
  CHECK(std::fabs((b + LogReal()).to_double() + 7.0 / 3) < 1e-15);

  // Comparisons agree with exact integer comparison.
  const std::vector<long> vals{-1000, -3, -1, 0, 1, 2, 999, 1000};
  for (long x : vals) {
    for (long y : vals) {
      const auto c = LogReal::from_integer(x) <=> LogReal::from_integer(y);
      CHECK((c < 0) == (x < y));
      CHECK((c == 0) == (x == y));
    }
  }

  CHECK(LogReal::from_integer(1000).floor_integer() == mpz_class(1000));
  CHECK(LogReal::from_rational(mpq_class(7, 2)).floor_integer() == mpz_class(3));
  CHECK(LogReal::from_rational(mpq_class(7, 2)).ceil_integer() == mpz_class(4));
  CHECK(LogReal::from_rational(mpq_class(-7, 2)).floor_integer() == mpz_class(-4));
  CHECK_FALSE(LogReal::from_log(Real(1e5, LogReal::kPrecision)).floor_integer().has_value());
  CHECK_THROWS_AS(LogReal().log_magnitude(), std::domain_error);
}

TEST_CASE("big_R") {
  const double ref3 = 800 * std::pow(std::log(3.0), 3);
  const double ref10 = 800 * std::pow(std::log(10.0), 3);
  CHECK(std::fabs(ref3 - 1060.78) < 0.01);
  CHECK(std::fabs(ref10 - 9766.46) < 0.01);
  CHECK(close(big_R(3).ln_double(), ref3, 1e-14));
  CHECK(close(big_R(10).ln_double(), ref10, 1e-14));
  CHECK(big_R(3).sign() == 1);
}

TEST_CASE("large discriminant threshold") {
  const double ref3 = 48 * std::log(6.0), ref4 = 96 * std::log(12.0);
  CHECK(std::fabs(ref3 - 86.00) < 0.01);
  CHECK(std::fabs(ref4 - 238.55) < 0.01);
  CHECK(close(large_disc_threshold(3).ln_double(), ref3, 1e-14));
  CHECK(close(large_disc_threshold(4).ln_double(), ref4, 1e-14));
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 38);
  CHECK(LogReal::from_integer(big) > large_disc_threshold(3));
  CHECK(LogReal::from_integer(108) < large_disc_threshold(3));
}

TEST_CASE("c(s) branches") {
  CHECK(d(c_of_s(2, 16, 5)) == 2.0);
  const double third = 3 * std::log(3.0) * (1 + 3 / std::log(1000.0));
  CHECK(close(d(c_of_s(3, 40, 1000)), third, 1e-14));
  // 9 s^2 <= n < s^4: s ln s.
  CHECK(close(d(c_of_s(4, 200, 1000)), 4 * std::log(4.0), 1e-14));
  // s = 1 makes s ln s vanish; floored at 1.
  CHECK(d(c_of_s(1, 3, 7)) == 1.0);
  CHECK_THROWS_AS(c_of_s(2, 16, 1), std::domain_error);
  CHECK_THROWS_AS(c_of_s(2, 5, 10), std::domain_error);
}

TEST_CASE("a, b admissibility") {
  const AbChoice def = choose_ab();
  CHECK(close(d(def.lhs), std::sqrt(2.0) * std::sqrt(3.01) / 0.9, 1e-14));
  CHECK(std::fabs(d(def.lhs) - 2.726) < 1e-3);
  CHECK(def.admissible);
  const AbChoice half = check_ab(Real(0.5, 128), Real(0.5, 128));
  CHECK(std::fabs(d(half.lhs) - 5.099) < 1e-3);
  CHECK_FALSE(half.admissible);
  const AbChoice tiny = check_ab(Real(1e-9, 128), Real(1e-9, 128));
  CHECK(std::fabs(d(tiny.lhs) - std::sqrt(6.0)) < 1e-6);
  CHECK(tiny.admissible);
}

TEST_CASE("ladder length") {
  CHECK(ladder_N(16, 2) == 2);
  CHECK(ladder_N(36, 2) == 2);
  CHECK(ladder_N(81, 3) == 2);  // 81 = 3^4
  CHECK(ladder_N(9, 1) == 2);
  // 9 s^2 = n < s^4 with k = sqrt(n) = 3s: 3 s^(1/N) <= 3 never holds.
  CHECK_THROWS_AS(ladder_N(144, 4), std::domain_error);
  CHECK_THROWS_AS(ladder_N(8, 3), std::domain_error);
  // n = 100, s = 4: k = n. Smallest N with 3 * 4^(1 + 1/N) <= 100 is N = 2.
  CHECK(ladder_N(100, 4) == 2);
  // n = 40, s = 4, k = 40: 12 * 4^(1/N) <= 40 needs 4^(1/N) <= 10/3, so N = 2.
  CHECK(ladder_N(40, 4) == 2);
  // n = 13, s = 4, k = 13: 12 * 4^(1/N) <= 13 needs N >= ln 4 / ln(13/12) = 17.3.
  const int expected = static_cast<int>(std::ceil(std::log(4.0) / std::log(13.0 / 12)));
  CHECK(ladder_N(13, 4) == expected);
}

TEST_CASE("thresholds on x^3 - 2y^3") {
  const Thresholds t = thresholds(cubic(), 1, mahler_measure(cubic()));
  CHECK(t.n == 3);
  CHECK(t.s == 1);
  CHECK(close(t.Y_0.ln_double(), 5 * std::log(2.0), 1e-14));
  CHECK(t.Y_0.floor_integer() == mpz_class(32));
  const double lnR = 800 * std::pow(std::log(3.0), 3);
  // ln Y_S = n(6 + ln s) + 2s ln R + ln m, over n - 2s.
  CHECK(close(t.Y_S.ln_double(), 18 + 2 * lnR, 1e-14));
  CHECK_FALSE(t.outside_theorem_preconditions);
  CHECK(t.N == 2);
  REQUIRE(t.ladder.size() == 4);
  for (std::size_t i = 1; i < t.ladder.size() - 1; ++i) CHECK(t.ladder[i - 1] <= t.ladder[i]);
  // ln C = ln R + ln m + n ln(2 H sqrt(n(n+1))).
  CHECK(close(t.C.ln_double(), lnR + 3 * std::log(4 * std::sqrt(12.0)), 1e-14));
  // ln U = ln 2 + ln R + 2 ln(ns) + (n/s) ln(4 e^3 s) + ln(m)/s.
  CHECK(close(t.U.ln_double(), std::log(2.0) + lnR + 2 * std::log(3.0) + 3 * (std::log(4.0) + 3), 1e-14));
  CHECK(t.lambda < Real(3L, 64));
}

TEST_CASE("thresholds for n = 9, s = 3") {
  const BinaryForm f = make_form({{9, 1}, {5, 3}, {2, -4}, {0, 7}}, 9);
  const Thresholds t = thresholds(f, 1, mahler_measure(f));
  const double ref = (9 * (6 + std::log(3.0)) + 6 * 800 * std::pow(std::log(9.0), 3)) / 3;
  CHECK(std::fabs(ref - 16993.7) < 0.1);
  CHECK(close(t.Y_S.ln_double(), ref, 1e-14));
  const double lam = std::sqrt(2 * 9.01) / 0.9;
  CHECK(std::fabs(lam - 4.717) < 1e-3);
  CHECK(close(d(t.lambda), lam, 1e-14));
  CHECK(d(t.lambda) <= 3 * std::sqrt(9.0));
  // n = 9 < 9 s^2 = 81, so k = n and 9 s^(1/N) <= 9 never holds.
  CHECK(t.ladder_error.has_value());

  // Y_S grows with m.
  const Thresholds t2 = thresholds(f, 2, mahler_measure(f));
  CHECK(t2.Y_S > t.Y_S);
}

TEST_CASE("thresholds preconditions") {
  const BinaryForm f = make_form({{5, 1}, {3, 1}, {0, -7}}, 5);  // n = 5, s = 2
  const Thresholds t = thresholds(f, 1, mahler_measure(f));
  CHECK(t.outside_theorem_preconditions);
  CHECK(t.ladder_error.has_value());
  const BinaryForm g = make_form({{4, 1}, {2, 1}, {0, -7}}, 4);  // n = 2s
  CHECK_THROWS_AS(thresholds(g, 1, mahler_measure(g)), std::domain_error);
  CHECK_THROWS_AS(thresholds(cubic(), 0, mahler_measure(cubic())), std::domain_error);
}

TEST_CASE("primes") {
  CHECK(next_prime_geq(10) == 11);
  CHECK(next_prime_geq(11) == 11);
  CHECK(next_prime_gt(11) == 13);
  CHECK(next_prime_geq(1000000) == 1000003);
  // Trial-division oracle for 1000001 and 1000002.
  for (long v : {1000001L, 1000002L}) {
    bool composite = false;
    for (long q = 2; q * q <= v; ++q) composite = composite || v % q == 0;
    CHECK(composite);
  }
  CHECK(is_prime(mpz_class("18446744073709551557")));  // largest prime below 2^64
  CHECK_FALSE(is_prime(mpz_class("18446744073709551617")));
  CHECK(is_prime(mpz_class("170141183460469231731687303715884105727")));

  const PrimeSelection ps = select_prime(LogReal::from_integer(1000000));
  REQUIRE(ps.prime.has_value());
  CHECK(*ps.prime == 1000003);
  CHECK(ps.bertrand_ok);
  CHECK_FALSE(ps.capped);
  CHECK(*select_prime(LogReal::from_integer(11), true).prime == 13);

  const PrimeSelection big = select_prime(LogReal::from_log(Real(1e5, LogReal::kPrecision)));
  CHECK(big.capped);
  CHECK_FALSE(big.prime.has_value());
}
