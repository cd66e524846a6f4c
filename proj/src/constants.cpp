#include "thue/constants.hpp"

#include <stdexcept>

namespace thue {

namespace {

constexpr mpfr_prec_t P = LogReal::kPrecision;

Real ln(long v) { return log(Real(v, P)); }
Real ln(const mpz_class& v) { return LogReal::from_integer(v).log_magnitude(); }

}  // namespace

LogReal big_R(int n) {
  if (n < 2) throw std::domain_error("R needs n >= 2");
  const Real l = ln(n);
  return LogReal::from_log(l * l * l * 800L);
}

LogReal large_disc_threshold(int n) {
  if (n < 3) throw std::domain_error("discriminant threshold needs n >= 3");
  const long q = static_cast<long>(n) * (n - 1);
  return LogReal::from_log(ln(q) * (8 * q));
}

Real c_of_s(int s, int n, const mpz_class& h) {
  if (s < 1) throw std::domain_error("c(s) needs s >= 1");
  if (n < 3 * s) throw std::domain_error("c(s) needs n >= 3s");
  if (h <= 1) throw std::domain_error("c(s) needs H >= 2 (ln H appears in a denominator)");
  const long s4 = static_cast<long>(s) * s * s * s;
  const Real one(1L, P);
  Real c(P);
  if (n >= s4) {
    c = Real(static_cast<long>(s), P);
  } else {
    c = ln(s) * static_cast<long>(s);
    if (n < 9L * s * s) c *= one + Real(static_cast<long>(s), P) / ln(h);
  }
  return max(c, one);
}

AbChoice check_ab(const Real& a, const Real& b) {
  AbChoice r{a.with_precision(P), b.with_precision(P), Real(P), false};
  const Real one(1L, P);
  if (!(r.a.sign() > 0) || !(r.b.sign() > 0) || !(r.b < one)) return r;
  r.lhs = sqrt(Real(2L, P)) * sqrt(r.a * r.a + 3L) / (one - r.b);
  r.admissible = r.lhs < 3L;
  return r;
}

AbChoice choose_ab() {
  const Real tenth(mpq_class(1, 10), P);
  return check_ab(tenth, tenth);
}

int ladder_N(int n, int s) {
  if (s < 1) throw std::domain_error("ladder needs s >= 1");
  if (n < 3 * s) throw std::domain_error("ladder needs n >= 3s");
  const long s4 = static_cast<long>(s) * s * s * s;
  if (s == 1 || n >= s4) return 2;
  const bool root_k = n >= 9L * s * s;
  // 3 s^(1+1/N) <= k, raised to the N-th power (squared again for k = sqrt n).
  for (int N = 2; N <= 64; ++N) {
    mpz_class lhs, rhs, t;
    mpz_ui_pow_ui(lhs.get_mpz_t(), 3, root_k ? 2 * N : N);
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(s), root_k ? 2 * N + 2 : N + 1);
    lhs *= t;
    mpz_ui_pow_ui(rhs.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(N));
    if (lhs <= rhs) return N;
  }
  throw std::domain_error("no ladder length N <= 64 satisfies 3 s^(1+1/N) <= k for n = " + std::to_string(n) +
                          ", s = " + std::to_string(s));
}

LogReal y_zero(const Real& measure, const mpz_class& m) {
  if (m < 1) throw std::domain_error("m must be >= 1");
  return LogReal::from_log((log(measure.with_precision(P)) - ln(m)) * 5L);
}

Thresholds thresholds(const BinaryForm& f, const mpz_class& m, const MeasureResult& measure) {
  return thresholds(f, m, measure, choose_ab());
}

Thresholds thresholds(const BinaryForm& f, const mpz_class& m, const MeasureResult& measure, const AbChoice& ab) {
  Thresholds t;
  t.n = f.degree();
  t.s = f.sparsity();
  t.m = m;
  t.height = height(f);
  const int n = t.n, s = t.s;
  if (m < 1) throw std::domain_error("m must be >= 1");
  if (s < 1) throw std::domain_error("thresholds need at least two nonzero coefficients");
  if (n <= 2 * s) throw std::domain_error("thresholds need n > 2s");
  t.outside_theorem_preconditions = n < 3 * s;

  const Real one(1L, P);
  const Real ln_m = ln(m), ln_h = ln(t.height), ln_meas = log(measure.value.with_precision(P));
  const Real ln_n = ln(n), ln_s = ln(s);

  t.R = big_R(n);
  const Real ln_R = t.R.log_magnitude();
  t.a = ab.a;
  t.b = ab.b;
  t.lambda = sqrt((t.a * t.a + static_cast<long>(n)) * 2L) / (one - t.b);
  if (!(t.lambda < static_cast<long>(n))) throw std::domain_error("lambda >= n; no large-solution threshold");
  t.capA = (ln_meas + Real(mpq_class(n, 2), P)) / (t.a * t.a);

  // C = R m (2 H sqrt(n(n+1)))^n
  const Real ln_C = ln_R + ln_m + (const_log2(P) + ln_h + ln(static_cast<long>(n) * (n + 1)) / 2L) * static_cast<long>(n);
  t.C = LogReal::from_log(ln_C);

  // Y_S = ((e^6 s)^n R^(2s) m)^(1/(n-2s))
  const Real ln_ys = ((ln_s + 6L) * static_cast<long>(n) + ln_R * (2L * s) + ln_m) / static_cast<long>(n - 2 * s);
  t.Y_S = LogReal::from_log(ln_ys);

  // Y_L = (2C)^(1/(n-lambda)) (4 e^A)^(lambda/(n-lambda))
  const Real gap = Real(static_cast<long>(n), P) - t.lambda;
  const Real ln_yl = (const_log2(P) + ln_C) / gap + t.lambda * (const_log2(P) * 2L + t.capA) / gap;
  t.Y_L = LogReal::from_log(ln_yl);

  t.Y_0 = y_zero(measure.value, m);

  // U = 2 R (ns)^2 (4 e^3 s)^(n/s) m^(1/s)
  const Real ln_u = const_log2(P) + ln_R + ln(static_cast<long>(n) * s) * 2L +
                    (const_log2(P) * 2L + 3L + ln_s) * Real(mpq_class(n, s), P) + ln_m / static_cast<long>(s);
  t.U = LogReal::from_log(ln_u);

  if (!t.outside_theorem_preconditions) {
    const long s4 = static_cast<long>(s) * s * s * s;
    if (n < s4) t.k = n >= 9L * s * s ? sqrt(Real(static_cast<long>(n), P)) : Real(static_cast<long>(n), P);
    try {
      t.N = ladder_N(n, s);
      t.ladder.push_back(t.Y_S);
      for (int l = 1; l <= t.N; ++l) {
        // Y_l = Y_S H^(1 / s^(1 - (l-1)/N))
        const Real expo = Real(mpq_class(t.N - (l - 1), t.N), P);
        const Real denom = exp(ln_s * expo);
        t.ladder.push_back(LogReal::from_log(ln_ys + ln_h / denom));
      }
      t.ladder.push_back(t.Y_L);
    } catch (const std::domain_error& e) {
      t.ladder_error = e.what();
    }
  } else {
    t.ladder_error = "n < 3s: ladder undefined";
  }
  const LogReal& top = t.ladder.empty() ? t.Y_S : t.ladder[t.ladder.size() - 2];
  t.medium_range_empty = t.Y_L <= top || t.Y_L <= t.Y_S;
  return t;
}

}  // namespace thue
