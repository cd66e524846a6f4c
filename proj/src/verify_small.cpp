#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <stdexcept>

#include "thue/measure.hpp"
#include "thue/sturm.hpp"
#include "thue/verify.hpp"
#include "verify_util.hpp"

namespace thue {

using detail::distance_to_rational;
using detail::ln_z;

namespace {

constexpr mpfr_prec_t P = LogReal::kPrecision;

bool by_y_then_x(const Point& a, const Point& b) { return a.second != b.second ? a.second < b.second : a.first < b.first; }

// Index of the non-real root closest to conj(root i).
std::size_t conjugate_index(const RootSet& rs, std::size_t i) {
  const Complex target = rs.roots[i].center.conj();
  std::size_t best = i;
  bool first = true;
  Real best_d;
  for (std::size_t j = 0; j < rs.roots.size(); ++j) {
    if (j == i || rs.roots[j].is_real) continue;
    const Real d = (rs.roots[j].center - target).abs();
    if (first || d < best_d) {
      best = j;
      best_d = d;
      first = false;
    }
  }
  return best;
}

}  // namespace

XiReport anchor_and_xi(const BinaryForm& f, const mpz_class& m, const std::vector<Solution>& sols, const LogReal& y_cap,
                       mpfr_prec_t prec) {
  XiReport rep;
  const int n = f.degree();
  std::vector<Point> cand;
  for (const auto& s : sols) {
    if (!s.primitive || s.y < 1 || !in_band(s.value, m, n)) continue;
    if (LogReal::from_integer(s.y) > y_cap) continue;
    cand.emplace_back(s.x, s.y);
  }
  std::sort(cand.begin(), cand.end(), by_y_then_x);
  rep.candidates = static_cast<long>(cand.size());
  const RootSet rs = form_roots_x(f, prec);
  rep.members.assign(rs.roots.size(), {});
  if (cand.empty()) return rep;
  rep.empty = false;
  rep.anchor = cand.front();

  // |L_i(x, y)| = y |alpha_i - x/y| for y >= 1.
  auto l_bounds = [&](std::size_t i, const Point& p) {
    auto b = distance_to_rational(rs.roots[i], mpq_class(p.first, p.second), prec);
    const Real y(p.second, prec);
    return detail::Bounds{b.lo * y, b.hi * y};
  };

  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    for (std::size_t k = 1; k < cand.size(); ++k) {
      const Point& p = cand[k];
      const Real limit = Real(1L, prec) / Real(mpz_class(2 * p.second), prec);
      const auto b = l_bounds(i, p);
      bool member;
      if (b.hi <= limit) {
        member = true;
      } else if (b.lo > limit) {
        member = false;
      } else {
        ++rep.ambiguous;
        member = (b.lo + b.hi) / 2L <= limit;
      }
      if (member) rep.members[i].push_back(p);
    }
  }

  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    if (rs.roots[i].is_real) continue;
    const std::size_t j = conjugate_index(rs, i);
    if (rep.members[i] != rep.members[j]) rep.conjugate_sets_equal = false;
  }

  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    const auto& mem = rep.members[i];
    for (std::size_t k = 1; k < mem.size(); ++k) {
      const Point& a = mem[k - 1];
      const Point& b = mem[k];
      ++rep.pairs_checked;
      const mpz_class cross = b.second * a.first - a.second * b.first;
      if (abs(cross) < 1) rep.cross_determinant_holds = false;
      // Refuted only if even the upper ends stay below 1.
      const Real sum = l_bounds(i, b).hi * Real(a.second, prec) + l_bounds(i, a).hi * Real(b.second, prec);
      if (sum < 1L) rep.chain_holds = false;
    }
  }
  return rep;
}

namespace {

using cld = std::complex<long double>;

long double to_ld(const Real& r) { return mpfr_get_ld(r.get(), MPFR_RNDN); }

std::vector<long double> make_grid(const std::vector<cld>& roots, long double rho, long points, long per_root) {
  std::vector<long double> g;
  g.reserve(static_cast<std::size_t>(points + per_root * static_cast<long>(roots.size()) + roots.size()));
  for (long k = 0; k < points; ++k) g.push_back(-2 * rho + 4 * rho * k / static_cast<long double>(points - 1));
  for (const auto& r : roots) {
    for (long k = 0; k < per_root; ++k)
      g.push_back(r.real() - rho / 10 + (rho / 5) * k / static_cast<long double>(per_root - 1));
    g.push_back(r.real());
  }
  return g;
}

long double min_dist(long double z, const std::vector<cld>& roots, const std::vector<std::size_t>& idx) {
  long double best = std::numeric_limits<long double>::infinity();
  for (std::size_t i : idx) best = std::min(best, std::abs(cld(z, 0) - roots[i]));
  return best;
}

long double sup_ratio(const std::vector<long double>& grid, const std::vector<cld>& roots,
                      const std::vector<std::size_t>& sub, const std::vector<std::size_t>& all) {
  long double worst = 1;
  for (long double z : grid) {
    const long double den = min_dist(z, roots, all);
    const long double num = min_dist(z, roots, sub);
    if (den == 0) continue;
    worst = std::max(worst, num / den);
  }
  return worst;
}

// Sorted real zeros of f' (distinct), as long doubles.
std::vector<long double> derivative_real_zeros(const UniPoly& f) {
  const UniPoly d = f.derivative();
  std::vector<long double> out;
  if (d.degree() < 1) return out;
  SturmChain ch(d.primitive_integer());
  auto iv = ch.isolate_real_roots();
  for (auto& r : iv) {
    if (!r.exact) ch.refine(r, mpq_class(1, mpz_class(1) << 80));
    const mpq_class mid = (r.lo + r.hi) / 2;
    out.push_back(to_ld(Real(mid, 128)));
  }
  return out;
}

}  // namespace

RepSetReport representative_set(const BinaryForm& f, int s, long grid_points, mpfr_prec_t prec) {
  RepSetReport rep;
  rep.bound = 12 * s - 3;
  const UniPoly chart = f.x_chart();
  const RootSet rs = form_roots_x(f, prec);
  std::vector<cld> roots;
  long double rho = 0;
  for (const auto& r : rs.roots) {
    roots.emplace_back(to_ld(r.center.re), to_ld(r.center.im));
    rho = std::max(rho, std::abs(roots.back()));
  }
  if (rho == 0) rho = 1;
  std::vector<std::size_t> all(roots.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

  // Zeros of f f' on the real line, sorted.
  std::vector<long double> zeros = derivative_real_zeros(chart);
  for (std::size_t i : rs.real_indices()) zeros.push_back(roots[i].real());
  std::sort(zeros.begin(), zeros.end());

  // Group non-real roots by the open interval holding their real part; a real
  // part on a zero (within tolerance) forms its own group.
  std::map<long, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (rs.roots[i].is_real) continue;
    const long double x = roots[i].real();
    const long double tol = 1e-15L * std::max<long double>(1, std::fabs(x));
    long key = 0;
    bool on_zero = false;
    for (long double z : zeros) {
      if (std::fabs(x - z) <= tol) on_zero = true;
      if (z < x - tol) ++key;
    }
    groups[on_zero ? -1000000 - key : key].push_back(i);
  }
  rep.occupied_intervals = static_cast<int>(groups.size());

  const std::vector<long double> grid = make_grid(roots, rho, grid_points, 64);
  const std::vector<long double> fine = make_grid(roots, rho, grid_points * 4, 256);

  for (std::size_t i : rs.real_indices()) rep.S.push_back(i);
  for (const auto& [key, members] : groups) {
    std::size_t best = members.front();
    long double best_ratio = std::numeric_limits<long double>::infinity();
    for (std::size_t cand : members) {
      const long double r = members.size() == 1 ? 1 : sup_ratio(grid, roots, {cand}, members);
      if (r < best_ratio) {
        best_ratio = r;
        best = cand;
      }
    }
    rep.S.push_back(best);
  }
  std::sort(rep.S.begin(), rep.S.end());
  rep.size = static_cast<int>(rep.S.size());
  rep.within_bound = rep.size <= rep.bound;

  const long double base = rep.S.empty() ? 1 : sup_ratio(grid, roots, rep.S, all);
  const long double refined = rep.S.empty() ? 1 : sup_ratio(fine, roots, rep.S, all);
  rep.empirical_ratio = Real(static_cast<double>(base), 64);
  rep.refined_ratio = Real(static_cast<double>(refined), 64);
  rep.grid_size = static_cast<long>(grid.size());
  rep.refined_grid_size = static_cast<long>(fine.size());
  rep.stable = std::fabs(refined - base) <= base / 10;
  rep.below_R = std::log(static_cast<double>(base)) <= big_R(f.degree()).ln_double();
  return rep;
}

Real small_count_bound(const LogReal& y_cap, const Real& measure, const mpz_class& m, int n, const LogReal& R) {
  const Real ln_den = log(measure.with_precision(P)) - ln_z(m) - ln_z(mpz_class(6)) * static_cast<long>(n);
  if (!(ln_den.sign() > 0)) throw std::domain_error("small-count bound needs M > 6^n m");
  const LogReal six_r = LogReal::from_integer(6) * R + LogReal::from_integer(5);
  const Real num = (y_cap.log_magnitude() + six_r.log_magnitude()) * static_cast<long>(n);
  return num / ln_den;
}

Real small_count_total(const Real& bound, int s) { return bound + static_cast<long>(12 * s - 3 + 1); }

SmallCountCheck small_count_check(const BinaryForm& f, const mpz_class& m, const std::vector<Solution>& sols,
                                  const LogReal& y_cap, mpfr_prec_t prec) {
  SmallCountCheck c;
  const int n = f.degree();
  for (const auto& s : sols) {
    if (s.primitive && s.y >= 1 && in_band(s.value, m, n) && !(LogReal::from_integer(s.y) > y_cap)) ++c.observed;
  }
  const MeasureResult meas = mahler_measure(f, prec);
  // The measure's lower end keeps the precondition test on the safe side.
  const Real ln_low = log(meas.lower().with_precision(P));
  c.applicable = ln_z(m) <= ln_low - ln_z(mpz_class(100)) * static_cast<long>(n);
  if (!c.applicable) return c;
  c.bound = small_count_bound(y_cap, meas.lower(), m, n, big_R(n));
  c.total = small_count_total(*c.bound, f.sparsity());
  c.holds = Real(c.observed, P) <= *c.total;
  return c;
}

}  // namespace thue
