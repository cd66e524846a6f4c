#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "thue/measure.hpp"
#include "thue/verify.hpp"
#include "verify_util.hpp"

namespace thue {

using detail::ln_z;

namespace {

constexpr mpfr_prec_t P = LogReal::kPrecision;

Real lit(long v) { return Real(v, P); }
Real lit(const mpq_class& v) { return Real(v, P); }

}  // namespace

bool BoundReport::precondition(const std::string& name) const {
  for (const auto& [k, v] : preconditions)
    if (k == name) return v;
  return false;
}

bool BoundReport::has_flag(const std::string& name) const {
  return std::find(flags.begin(), flags.end(), name) != flags.end();
}

bool BoundReport::empirical_ok() const {
  return std::all_of(empirical_checks.begin(), empirical_checks.end(), [](const auto& e) { return e.second; });
}

BoundReport bound_report(const BinaryForm& f, const mpz_class& m, const CountsReport& counts, const BoundOptions& opt) {
  if (m < 1) throw std::domain_error("m must be >= 1");
  BoundReport r;
  r.observed = counts;
  const int n = f.degree(), s = f.sparsity();
  const mpz_class disc = discriminant(f);
  const mpz_class h = height(f);
  const MeasureResult meas = mahler_measure(f, opt.precision_bits);
  const Real ln_m = ln_z(m), ln_n = ln_z(mpz_class(n));
  const Real ln_meas = log(meas.value.with_precision(P));
  const bool d_nonzero = disc != 0;
  const Real ln_d = d_nonzero ? ln_z(disc) : Real(P);
  const Real nn1(static_cast<long>(n) * (n - 1), P);
  const Real two_over_n = lit(mpq_class(2, n));

  // Preconditions.
  const LogReal thresh = n >= 3 ? large_disc_threshold(n) : LogReal();
  const bool disc_large = n >= 3 && d_nonzero && LogReal::from_integer(disc).abs() > thresh;
  const Real ln_window = ln_d / (2L * (n - 1)) - lit(200L * n);
  const Real ln_cor_window = ln_d / (lit(mpq_class(5, 2)) * static_cast<long>(n - 1));
  const AbChoice ab = choose_ab();
  r.preconditions = {
      {"degree_at_least_3", n >= 3},
      {"nonzero_discriminant", d_nonzero},
      {"no_rational_linear_factor", !has_rational_linear_factor(f)},
      {"degree_at_least_3s", n >= 3 * s},
      {"disc_exceeds_large_disc_threshold", disc_large},
      {"m_within_large_disc_window", d_nonzero && n >= 2 && ln_m <= ln_window},
      {"m_within_small_solution_window", ln_m <= ln_meas - ln_z(mpz_class(100)) * static_cast<long>(n)},
      {"corollary_m_bound", d_nonzero && n >= 2 && ln_m <= ln_cor_window},
      {"corollary_disc_bound", d_nonzero && n >= 3 && ln_d >= log(ln_n) * lit(15) * nn1},
      {"ab_admissible", ab.admissible},
  };

  // Bound shapes.
  const LogReal m_2n = LogReal::from_log(ln_m * two_over_n);
  const LogReal disc_factor = d_nonzero ? LogReal::from_log(-(ln_d / nn1)) : LogReal();
  if (s >= 1) r.bounds.emplace_back("large_disc_shape", LogReal::from_integer(s) * m_2n);
  std::optional<Real> cs;
  if (s >= 1 && n >= 3 * s && h >= 2) cs = c_of_s(s, n, h);
  const LogReal ln3n = LogReal::from_real(pow(ln_n, 3L));
  if (cs && d_nonzero) {
    const Real inner = *cs * (lit(1) + ln_m / static_cast<long>(n));
    r.bounds.emplace_back("general_shape", (LogReal::from_real(inner) + ln3n) * m_2n * disc_factor);
  }
  if (cs) r.bounds.emplace_back("corollary_shape", LogReal::from_real(*cs) + ln3n);
  if (n >= 3) r.bounds.emplace_back("large_disc_threshold", thresh);
  if (d_nonzero) {
    r.bounds.emplace_back("large_disc_m_window", LogReal::from_log(ln_window));
    r.bounds.emplace_back("corollary_m_window", LogReal::from_log(ln_cor_window));
  }

  const LogReal y0 = y_zero(meas.value, m);
  const LogReal R = big_R(std::max(n, 2));
  const bool denom_ok = ln_meas - ln_m - ln_z(mpz_class(6)) * static_cast<long>(n) > 0L;
  if (denom_ok) {
    r.bounds.emplace_back("small_count_total_at_Y_0",
                          LogReal::from_real(small_count_total(small_count_bound(y0, meas.value, m, n, R), s)));
  }
  try {
    Thresholds th = thresholds(f, m, meas);
    if (denom_ok) {
      r.bounds.emplace_back("small_count_total_at_Y_S",
                            LogReal::from_real(small_count_total(small_count_bound(th.Y_S, meas.value, m, n, R), s)));
    }
    if (!th.outside_theorem_preconditions && !th.ladder_error) {
      r.bounds.emplace_back("medium_w0_cap", LogReal::from_integer(2));
      r.bounds.emplace_back("medium_wl_cap", LogReal::from_integer(2));
      if (h >= 2) {
        // 1 + (ln H + ln m^(1/n) + sqrt n) / ((n/s^(1+1/N) - 2/s^(1/N) + 1/s - 1/n) ln H)
        const Real ln_s = ln_z(mpz_class(s)), ln_h = ln_z(h);
        const Real inv_n = lit(mpq_class(1, th.N));
        const Real d = lit(n) / exp(ln_s * (lit(1) + inv_n)) - lit(2) / exp(ln_s * inv_n) + lit(mpq_class(1, s)) -
                       lit(mpq_class(1, n));
        const Real num = ln_h + ln_m / static_cast<long>(n) + sqrt(lit(n));
        if (d > 0L) r.bounds.emplace_back("medium_wN_shape", LogReal::from_real(lit(1) + num / (d * ln_h)));
      }
    }
    if (th.ladder_error) r.flags.push_back("ladder_error");
    if (th.medium_range_empty) r.flags.push_back("medium_range_empty");
    if (th.outside_theorem_preconditions) r.flags.push_back("outside_theorem_preconditions");
    r.thresholds = std::move(th);
  } catch (const std::domain_error&) {
    r.flags.push_back("thresholds_unavailable");
  }
  r.Y_0 = y0;

  // Prime selections for the sublattice partitions.
  if (d_nonzero) {
    const LogReal base = m_2n * disc_factor;
    r.large_disc_prime = select_prime(LogReal::from_log(lit(400)) * base);
    r.three_tier_prime = select_prime(LogReal::from_integer(1000000) * base, true);
    r.bounds.emplace_back("large_disc_prime_target", r.large_disc_prime.target);
    r.bounds.emplace_back("three_tier_prime_target", r.three_tier_prime.target);
    if (r.large_disc_prime.capped) r.flags.push_back("large_disc_prime_capped");
    if (r.three_tier_prime.capped) r.flags.push_back("three_tier_prime_capped");
  }

  // Ratios observed / bound.
  auto bound_of = [&](const std::string& name) -> const LogReal* {
    for (const auto& [k, v] : r.bounds)
      if (k == name) return &v;
    return nullptr;
  };
  auto ratio = [&](const std::string& label, long observed, const std::string& name) -> std::optional<Real> {
    const LogReal* b = bound_of(name);
    if (!b) return std::nullopt;
    std::optional<Real> v;
    if (!b->is_zero() && b->log_magnitude() < LogReal::default_cap()) v = (LogReal::from_integer(observed) / *b).to_real(P);
    r.ratios.emplace_back(label, v);
    return v;
  };
  auto capped = [&](const std::string& label, const std::optional<Real>& v) {
    r.empirical_checks.emplace_back(label, !v || *v <= Real(opt.empirical_cap, P));
  };
  const auto n_large = ratio("N/large_disc_shape", counts.N, "large_disc_shape");
  ratio("Ptilde/large_disc_shape", counts.Ptilde, "large_disc_shape");
  ratio("N/general_shape", counts.N, "general_shape");
  ratio("Ptilde/general_shape", counts.Ptilde, "general_shape");
  const auto n_cor = ratio("N/corollary_shape", counts.N, "corollary_shape");
  if (disc_large) capped("N/large_disc_shape", n_large);
  if (cs && r.precondition("corollary_m_bound")) capped("N/corollary_shape", n_cor);

  // Flags.
  r.flags.push_back(std::string("band_convention:") + counts.band_convention);
  if (d_nonzero && ln_window < 0L) r.flags.push_back("large_disc_m_window_empty");
  r.flags.push_back("measure_not_minimized");
  if (counts.region.certificate == Completeness::Heuristic) r.flags.push_back("heuristic_region");
  return r;
}

}  // namespace thue
