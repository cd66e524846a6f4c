#include <algorithm>
#include <stdexcept>

#include "thue/measure.hpp"
#include "thue/verify.hpp"
#include "verify_util.hpp"

namespace thue {

using detail::distance_to_rational;
using detail::ln_or_floor;
using detail::ln_z;

namespace {

constexpr mpfr_prec_t P = LogReal::kPrecision;

// Relative slack for comparing two logs computed at P bits.
Real log_slack(const Real& v) { return abs(v) * Real(0x1p-150, P) + Real(0x1p-150, P); }

}  // namespace

LewisMahlerReport check_lewis_mahler(const BinaryForm& f, const std::vector<Solution>& sols, mpfr_prec_t prec) {
  const mpz_class disc = discriminant(f);
  if (disc == 0) throw std::domain_error("Lewis-Mahler check needs a nonzero discriminant");
  const int n = f.degree();
  const MeasureResult meas = mahler_measure(f, prec);
  // M enters as M^(n-2): the small end of its interval gives the smaller side.
  const Real m_low = n >= 2 ? meas.lower() : meas.upper();
  const RootSet rs = form_roots_x(f, prec);
  LewisMahlerReport rep;
  for (const auto& s : sols) {
    if (s.y == 0) {
      ++rep.skipped_y_zero;
      continue;
    }
    LewisMahlerEntry e;
    e.x = s.x;
    e.y = s.y;
    e.value = s.value;
    const mpq_class q(s.x, s.y);
    bool first = true;
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
      const auto b = distance_to_rational(rs.roots[i], q, prec);
      if (first || b.hi < e.distance_upper) {
        e.distance_upper = b.hi;
        e.nearest_root = i;
        first = false;
      }
    }
    e.rhs = lewis_mahler_rhs(n, m_low, disc, s.value, s.y);
    if (first) {
      e.pass = false;
    } else if (e.rhs.is_zero()) {
      e.pass = e.distance_upper.is_zero();
    } else {
      const Real lhs = ln_or_floor(e.distance_upper.with_precision(P));
      const Real rhs = e.rhs.log_magnitude();
      e.pass = lhs <= rhs - log_slack(rhs);
    }
    rep.pass = rep.pass && e.pass;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

GapReport gap_check(const BinaryForm& f, const mpz_class& m, const std::vector<Solution>& sols,
                    const LogReal& y_zero_value, mpfr_prec_t prec) {
  GapReport g;
  g.Y_0 = y_zero_value;
  const int n = f.degree();
  const mpz_class disc = discriminant(f);
  if (disc != 0 && n >= 3) {
    const Real ln_d = ln_z(disc);
    g.disc_precondition = LogReal::from_integer(disc).abs() > large_disc_threshold(n);
    g.m_precondition = ln_z(m) <= ln_d / (2L * (n - 1)) - Real(200L * n, P);
  }

  std::vector<const Solution*> large;
  for (const auto& s : sols) {
    if (!s.primitive || s.y <= 0 || !in_band(s.value, m, n)) continue;
    if (LogReal::from_integer(s.y) > g.Y_0) large.push_back(&s);
  }
  std::stable_sort(large.begin(), large.end(), [](const Solution* a, const Solution* b) {
    return a->y != b->y ? a->y < b->y : a->x < b->x;
  });
  g.large_count = static_cast<long>(large.size());
  g.vacuous = large.empty();
  const Real expo(mpq_class(4 * n - 3, 5), P);
  for (std::size_t i = 1; i < large.size(); ++i) {
    if (!(ln_z(large[i]->y) > ln_z(large[i - 1]->y) * expo)) ++g.gap_violations;
  }

  const RootSet rs = form_roots_x(f, prec);
  const Real power = sqrt(Real(static_cast<long>(n), P)) * Real(mpq_class(3, 2), P);
  for (std::size_t idx : rs.real_indices()) {
    long count = 0;
    for (const auto& s : sols) {
      if (s.y <= 0) continue;
      const auto b = distance_to_rational(rs.roots[idx], mpq_class(s.x, s.y), prec);
      if (ln_or_floor(b.hi.with_precision(P)) < -(ln_z(s.y) * power)) ++count;
    }
    g.strong_approximations[idx] = count;
  }
  return g;
}

Real medium_window_ln(const Thresholds& th, const mpz_class& t) {
  const long n = th.n, s = th.s;
  const Real one(1L, P);
  Real v = th.R.log_magnitude() + ln_z(mpz_class(n * s)) * 2L;
  v -= (one / s - one / n) * ln_z(th.height);
  const Real inner = (ln_z(mpz_class(4 * s)) + 3L) * n + ln_z(th.m) - ln_z(t) * n;
  return v + inner / s;
}

MediumLadderReport medium_ladder_check(const BinaryForm& f, const mpz_class& m, const std::vector<Solution>& sols,
                                       const Thresholds& th, const std::optional<LogReal>& diagnostic_ys,
                                       mpfr_prec_t prec) {
  if (m != th.m) throw std::invalid_argument("medium ladder: thresholds were built for another m");
  MediumLadderReport rep;
  rep.diagnostic = diagnostic_ys.has_value();
  rep.Y_S = rep.diagnostic ? *diagnostic_ys : th.Y_S;
  rep.ladder_error = th.ladder_error;
  rep.ladder_valid = !th.outside_theorem_preconditions && !th.ladder_error && !th.ladder.empty();
  rep.N = th.N;
  if (rep.ladder_valid) {
    if (rep.diagnostic) {
      // Y_l = Y_S' H^(1 / s^(1 - (l-1)/N)), the same shape as the standard ladder.
      const Real ln_s = ln_z(mpz_class(th.s)), ln_h = ln_z(th.height);
      rep.ladder.push_back(rep.Y_S);
      for (int l = 1; l <= th.N; ++l) {
        const Real denom = exp(ln_s * Real(mpq_class(th.N - (l - 1), th.N), P));
        rep.ladder.push_back(rep.Y_S * LogReal::from_log(ln_h / denom));
      }
      rep.ladder.push_back(th.Y_L);
    } else {
      rep.ladder = th.ladder;
    }
  }
  rep.caps_enforced = !rep.diagnostic && rep.ladder_valid;

  // Window radius decreases in t: exponent -n/s < 0.
  for (long t = 1; t < 16; ++t) {
    if (!(medium_window_ln(th, mpz_class(t + 1)) < medium_window_ln(th, mpz_class(t)))) rep.window_monotone = false;
  }

  const RootSet rx = form_roots_x(f, prec);
  const RootSet ry = form_roots_y(f, prec);
  // Does (x, y) sit in the window of root i of the given chart?
  auto in_window = [&](char chart, std::size_t i, const Solution& s) {
    const mpz_class& den = chart == 'x' ? s.y : s.x;
    const mpz_class& num = chart == 'x' ? s.x : s.y;
    if (den == 0) return false;
    const RootSet& rs = chart == 'x' ? rx : ry;
    const auto b = distance_to_rational(rs.roots[i], mpq_class(num, den), prec);
    const mpz_class t = abs(den);
    return ln_or_floor(b.hi.with_precision(P)) < medium_window_ln(th, t);
  };

  std::vector<const Solution*> medium;
  for (const auto& s : sols) {
    const LogReal small = LogReal::from_integer(small_size(s.x, s.y));
    const LogReal large = LogReal::from_integer(large_size(s.x, s.y));
    if (small > rep.Y_S && large <= th.Y_L) medium.push_back(&s);
  }
  rep.medium_count = static_cast<long>(medium.size());
  rep.vacuous = medium.empty();
  for (const Solution* s : medium) {
    bool hit = false;
    for (std::size_t i = 0; i < rx.roots.size() && !hit; ++i) hit = in_window('x', i, *s);
    for (std::size_t i = 0; i < ry.roots.size() && !hit; ++i) hit = in_window('y', i, *s);
    if (hit) ++rep.medium_in_window;
  }

  if (rep.ladder_valid) {
    const std::size_t intervals = rep.ladder.size() - 1;  // l = 0..N
    for (char chart : {'x', 'y'}) {
      const RootSet& rs = chart == 'x' ? rx : ry;
      for (std::size_t i = 0; i < rs.roots.size(); ++i) {
        LadderCount c{chart, i, std::vector<long>(intervals, 0)};
        for (const Solution* s : medium) {
          if (!s->primitive || !in_window(chart, i, *s)) continue;
          const LogReal t = LogReal::from_integer(abs(chart == 'x' ? s->y : s->x));
          for (std::size_t l = 0; l < intervals; ++l) {
            if (t > rep.ladder[l] && t <= rep.ladder[l + 1]) {
              ++c.w[l];
              break;
            }
          }
        }
        for (std::size_t l = 0; l + 1 < intervals; ++l) {
          if (c.w[l] > 2) rep.caps_hold = false;
        }
        rep.counts.push_back(std::move(c));
      }
    }
  }
  return rep;
}

}  // namespace thue
