#ifndef THUE_ENUMERATE_HPP
#define THUE_ENUMERATE_HPP

#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "thue/form.hpp"
#include "thue/solution.hpp"

namespace thue {

/// All canonical (x, y) with |x|, |y| <= b and 1 <= |F(x, y)| <= m,
/// ordered by (y, x).
std::vector<Solution> brute_force(const BinaryForm& f, const mpz_class& m, const mpz_class& b);

enum class FiberAxis { X, Y };

/// Thrown when a fiber holds infinitely many solutions (F is c * y^n or
/// c * x^n with 1 <= |c * t^n| <= m on the fixed coordinate t).
class InfiniteFiber : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Y fibers: every solution with 0 <= y <= cap, x unrestricted. X fibers:
/// every solution whose representative has 0 <= |x| <= cap.
///
/// On the fiber y = y0 the polynomial g(x) = F(x, y0) is split at the
/// integer cells of the real roots of g, g - m and g + m; between cells all
/// three keep their sign, so one test settles each run of integers.
std::vector<Solution> fiber_enumerate(const BinaryForm& f, const mpz_class& m, const mpz_class& cap, FiberAxis axis);

/// Union of both axes: complete for min(|x|, |y|) <= cap.
std::vector<Solution> fiber_enumerate_both(const BinaryForm& f, const mpz_class& m, const mpz_class& cap);

/// Continued-fraction convergents p/q of every real root of F(z, 1) and
/// F(1, z), to `depth` terms, tested at (p + j, q), j in {-1, 0, 1}. The
/// expansions are certified from exact isolating intervals. Heuristic: no
/// completeness claim.
std::vector<Solution> cf_candidates(const BinaryForm& f, const mpz_class& m, int depth);

/// Partial quotients of a rational, in order.
std::vector<mpz_class> continued_fraction(mpq_class q);

/// Leading partial quotients shared by every real number in [lo, hi]
/// (the final agreed term is dropped, as it may be unstable).
std::vector<mpz_class> common_cf_prefix(const mpq_class& lo, const mpq_class& hi);

}  // namespace thue

#endif  // THUE_ENUMERATE_HPP
