#ifndef THUE_CONSTANTS_HPP
#define THUE_CONSTANTS_HPP

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "thue/form.hpp"
#include "thue/logreal.hpp"
#include "thue/measure.hpp"
#include "thue/real.hpp"

namespace thue {

/// R = n^(800 ln^2 n), the representative-set factor. n >= 2.
LogReal big_R(int n);

/// (n(n-1))^(8n(n-1)): the discriminant size above which the
/// large-discriminant count applies. n >= 3.
LogReal large_disc_threshold(int n);

/// The sparsity factor c(s):
///   s                          if n >= s^4
///   s ln s                     if 9s^2 <= n < s^4
///   s ln s (1 + s / ln H)      if n < 9s^2
/// floored at 1. Requires s >= 1, n >= 3s and H >= 2.
Real c_of_s(int s, int n, const mpz_class& h);

struct AbChoice {
  Real a, b;
  /// sqrt(2) sqrt(3 + a^2) / (1 - b); admissible iff < 3.
  Real lhs;
  bool admissible = false;
};

AbChoice check_ab(const Real& a, const Real& b);
/// a = b = 1/10.
AbChoice choose_ab();

/// Ladder length N: 2 when n >= s^4 (and for s = 1); otherwise the smallest
/// N >= 2 with 3 s^(1 + 1/N) <= k, where k = sqrt(n) if n >= 9s^2 and k = n
/// otherwise. Throws std::domain_error when no N <= 64 works or n < 3s.
int ladder_N(int n, int s);

struct Thresholds {
  int n = 0, s = 0;
  mpz_class m, height;
  LogReal R, C, Y_S, Y_L, Y_0, U;
  Real a, b, lambda, capA;
  /// Y_S, Y_1, ..., Y_N, Y_L; empty when the ladder is unavailable.
  std::vector<LogReal> ladder;
  int N = 0;
  /// k from the ladder construction (sqrt(n) or n); 0 when n >= s^4.
  Real k;

  /// n < 3s: Y_S is defined, but outside the main count's hypotheses.
  bool outside_theorem_preconditions = false;
  /// Set when Y_L <= Y_N (or Y_L <= Y_S): no medium range at all.
  bool medium_range_empty = false;
  std::optional<std::string> ladder_error;
};

/// Every threshold for (F, m) with Mahler measure M. `a`, `b` default to
/// choose_ab(). Throws std::domain_error if n <= 2s, lambda >= n, or m < 1.
Thresholds thresholds(const BinaryForm& f, const mpz_class& m, const MeasureResult& measure);
Thresholds thresholds(const BinaryForm& f, const mpz_class& m, const MeasureResult& measure, const AbChoice& ab);

/// Large-discriminant scheme only: Y_0 = (M/m)^5. Needs no sparsity condition.
LogReal y_zero(const Real& measure, const mpz_class& m);

}  // namespace thue

#endif  // THUE_CONSTANTS_HPP
