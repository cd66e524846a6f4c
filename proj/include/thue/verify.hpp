#ifndef THUE_VERIFY_HPP
#define THUE_VERIFY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "thue/constants.hpp"
#include "thue/counting.hpp"
#include "thue/form.hpp"
#include "thue/logreal.hpp"
#include "thue/primes.hpp"
#include "thue/real.hpp"
#include "thue/roots.hpp"
#include "thue/solution.hpp"

namespace thue {

using Point = std::pair<mpz_class, mpz_class>;

// ---------------------------------------------------------------------------
// Root approximation by solutions.

struct LewisMahlerEntry {
  mpz_class x, y, value;
  std::size_t nearest_root = 0;
  /// Upper bound on min_i |alpha_i - x/y| including root radii.
  Real distance_upper;
  /// Right-hand side evaluated with the lower end of M's error interval.
  LogReal rhs;
  bool pass = false;
};

struct LewisMahlerReport {
  std::vector<LewisMahlerEntry> entries;
  long skipped_y_zero = 0;
  bool pass = true;
};

/// min_i |alpha_i - x/y| <= 2^(n-1) n^((n-1)/2) M^(n-2) |F(x,y)| / (|D|^(1/2) |y|^n)
/// for every solution with y != 0. Throws std::domain_error if D = 0.
LewisMahlerReport check_lewis_mahler(const BinaryForm& f, const std::vector<Solution>& sols,
                                     mpfr_prec_t precision_bits = kDefaultPrecisionBits);

// ---------------------------------------------------------------------------
// Anchor and the sets X_i = {primitive band solutions, 1 <= y <= Y,
// |x - alpha_i y| <= 1/(2y)} minus the anchor.

struct XiReport {
  /// No primitive band solution with 1 <= y <= Y.
  bool empty = true;
  /// Minimal y, then minimal x.
  std::optional<Point> anchor;
  long candidates = 0;
  /// Per root of F(z, 1), ordered by (y, x).
  std::vector<std::vector<Point>> members;
  bool conjugate_sets_equal = true;
  /// |y'x - yx'| >= 1 for consecutive members.
  bool cross_determinant_holds = true;
  /// y |L_i(x',y')| + y' |L_i(x,y)| >= 1 for consecutive members.
  bool chain_holds = true;
  long pairs_checked = 0;
  /// Memberships within the numeric error of the 1/(2y) boundary.
  long ambiguous = 0;
  bool pass() const { return conjugate_sets_equal && cross_determinant_holds && chain_holds; }
};

XiReport anchor_and_xi(const BinaryForm& f, const mpz_class& m, const std::vector<Solution>& sols, const LogReal& y_cap,
                       mpfr_prec_t precision_bits = kDefaultPrecisionBits);

// ---------------------------------------------------------------------------
// Representative root set.

struct RepSetReport {
  /// Indices into the roots of F(z, 1).
  std::vector<std::size_t> S;
  int size = 0;
  /// 12s - 3.
  int bound = 0;
  /// Intervals of R minus the real zeros of f f' that hold real parts.
  int occupied_intervals = 0;
  /// max over the grid of min_S |zeta - alpha| / min_all |zeta - alpha|.
  Real empirical_ratio;
  long grid_size = 0;
  /// Same ratio on the grid refined 4x.
  Real refined_ratio;
  long refined_grid_size = 0;
  bool within_bound = false;
  /// |refined - base| <= 10% of base.
  bool stable = false;
  /// empirical_ratio <= R.
  bool below_R = false;
  bool pass() const { return within_bound && stable && below_R; }
};

/// S = real roots of f = F(z, 1) plus one root per interval of R minus
/// zeros(f f'), chosen to minimize the grid ratio within its interval.
/// The grid: `grid_points` uniform points on [-2 rho, 2 rho], 64 per root on
/// [Re alpha - rho/10, Re alpha + rho/10], and every root's real part.
RepSetReport representative_set(const BinaryForm& f, int s, long grid_points = 4096,
                                mpfr_prec_t precision_bits = kDefaultPrecisionBits);

// ---------------------------------------------------------------------------
// Large solutions under the two-tier scheme.

struct GapReport {
  LogReal Y_0;
  /// |D| above the large-discriminant threshold.
  bool disc_precondition = false;
  /// m <= |D|^(1/(2(n-1))) / e^(200n).
  bool m_precondition = false;
  /// Primitive band solutions with y > Y_0.
  long large_count = 0;
  /// No large solutions in the region.
  bool vacuous = true;
  /// y_i > y_(i-1)^((4n-3)/5) between consecutive large solutions.
  long gap_violations = 0;
  /// Per real root index: solutions with |alpha - x/y| < y^(-3 sqrt(n)/2).
  std::map<std::size_t, long> strong_approximations;
  /// Violations only count against the check when both preconditions hold.
  bool pass() const { return gap_violations == 0 || !(disc_precondition && m_precondition); }
};

GapReport gap_check(const BinaryForm& f, const mpz_class& m, const std::vector<Solution>& sols,
                    const LogReal& y_zero_value, mpfr_prec_t precision_bits = kDefaultPrecisionBits);

// ---------------------------------------------------------------------------
// Medium ladder.

struct LadderCount {
  /// 'x': root of F(z, 1), solutions keyed by y. 'y': root of F(1, z), keyed by |x|.
  char chart = 'x';
  std::size_t root = 0;
  /// w_l for l = 0..N.
  std::vector<long> w;
};

struct MediumLadderReport {
  bool diagnostic = false;
  /// The Y_S actually used (Y_S' in diagnostic mode).
  LogReal Y_S;
  std::vector<LogReal> ladder;
  int N = 0;
  std::optional<std::string> ladder_error;
  /// n >= 3s and the ladder was constructed.
  bool ladder_valid = false;
  long medium_count = 0;
  long medium_in_window = 0;
  /// No medium solution in the region; never reported as a plain pass.
  bool vacuous = true;
  std::vector<LadderCount> counts;
  /// w_0 <= 2 and w_l <= 2 for 1 <= l < N.
  bool caps_hold = true;
  /// The caps are claims only with the unmodified Y_S.
  bool caps_enforced = false;
  /// Window radius strictly decreasing in y for a fixed root.
  bool window_monotone = true;
  bool all_in_window() const { return medium_in_window == medium_count; }
  bool pass() const { return all_in_window() && window_monotone && (caps_hold || !caps_enforced); }
};

/// ln of R (ns)^2 / H^(1/s - 1/n) ((4 e^3 s)^n m / t^n)^(1/s).
Real medium_window_ln(const Thresholds& th, const mpz_class& t);

/// Medium solutions (Y_S < min(|x|,|y|), max(|x|,|y|) <= Y_L) against the
/// windows over all roots of both charts; per-root counts over the ladder.
/// A supplied `diagnostic_ys` replaces Y_S and rebuilds Y_1..Y_N from it.
MediumLadderReport medium_ladder_check(const BinaryForm& f, const mpz_class& m, const std::vector<Solution>& sols,
                                       const Thresholds& th, const std::optional<LogReal>& diagnostic_ys = std::nullopt,
                                       mpfr_prec_t precision_bits = kDefaultPrecisionBits);

// ---------------------------------------------------------------------------
// Explicit count of small solutions.

/// (n ln Y + n ln(6R + 5)) / ln(M / (6^n m)). Throws std::domain_error when
/// M <= 6^n m.
Real small_count_bound(const LogReal& y_cap, const Real& measure, const mpz_class& m, int n, const LogReal& R);
/// The bound plus the 12s - 3 extremal members and the anchor.
Real small_count_total(const Real& bound, int s);

struct SmallCountCheck {
  /// m <= M / 100^n; the bound is claimed only then.
  bool applicable = false;
  /// Primitive band solutions with 1 <= y <= Y.
  long observed = 0;
  std::optional<Real> bound, total;
  bool holds = true;
};

/// Observed small primitive count against small_count_total at cap Y.
SmallCountCheck small_count_check(const BinaryForm& f, const mpz_class& m, const std::vector<Solution>& sols,
                                  const LogReal& y_cap, mpfr_prec_t precision_bits = kDefaultPrecisionBits);

// ---------------------------------------------------------------------------
// Bound report.

struct BoundOptions {
  /// Observed counts may exceed a bound shape by at most this factor.
  double empirical_cap = 100;
  mpfr_prec_t precision_bits = kDefaultPrecisionBits;
};

struct BoundReport {
  /// Insertion order is the report order.
  std::vector<std::pair<std::string, bool>> preconditions;
  std::vector<std::pair<std::string, LogReal>> bounds;
  CountsReport observed;
  /// nullopt: the bound is too large to convert ("astronomically large").
  std::vector<std::pair<std::string, std::optional<Real>>> ratios;
  std::vector<std::string> flags;
  PrimeSelection large_disc_prime;
  PrimeSelection three_tier_prime;
  LogReal Y_0;
  /// Unset when the form is outside the thresholds' domain (n <= 2s, ...).
  std::optional<Thresholds> thresholds;
  /// Ratios checked against the empirical cap and whether each held.
  std::vector<std::pair<std::string, bool>> empirical_checks;

  bool precondition(const std::string& name) const;
  bool has_flag(const std::string& name) const;
  bool empirical_ok() const;
};

BoundReport bound_report(const BinaryForm& f, const mpz_class& m, const CountsReport& counts,
                         const BoundOptions& opt = {});

}  // namespace thue

#endif  // THUE_VERIFY_HPP
