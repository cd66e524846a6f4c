#ifndef THUE_STURM_HPP
#define THUE_STURM_HPP

#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "thue/unipoly.hpp"

namespace thue {

/// An isolating interval: exactly one real root in (lo, hi), or the root
/// itself when `exact` (then lo == hi).
struct RootInterval {
  mpq_class lo, hi;
  bool exact = false;
};

/// Sturm chain over Z for the squarefree part of an integer polynomial.
///
/// Remainders are pseudo-remainders rescaled by positive constants, so the
/// sign sequence matches the textbook chain. Because the base polynomial is
/// squarefree, variations(a) - variations(b) counts the distinct real roots
/// in (a, b] for every a < b, roots at the endpoints included.
class SturmChain {
 public:
  /// Coefficients low to high; must not be the zero polynomial.
  explicit SturmChain(std::vector<mpz_class> coeffs);

  /// The squarefree polynomial the chain was built from.
  const std::vector<mpz_class>& base() const { return chain_.front(); }
  int degree() const { return static_cast<int>(chain_.front().size()) - 1; }

  int sign_at(const mpq_class& x) const;
  int sign_at(const mpz_class& x) const;

  int variations(const mpq_class& x) const;
  int variations(const mpz_class& x) const;
  int variations_neg_inf() const;
  int variations_pos_inf() const;

  /// Distinct real roots in (lo, hi]; nullopt bounds are -inf / +inf.
  int count(const std::optional<mpq_class>& lo, const std::optional<mpq_class>& hi) const;
  int count_all() const { return variations_neg_inf() - variations_pos_inf(); }

  /// Integer B with every real root in (-B, B).
  mpz_class root_bound() const;

  /// Disjoint isolating intervals in increasing order.
  std::vector<RootInterval> isolate_real_roots() const;

  /// Shrink an isolating interval to width <= `width` by sign bisection.
  void refine(RootInterval& iv, const mpq_class& width) const;

  /// Sorted integers e such that (e - 1, e] contains a real root, with the
  /// number of roots in that cell.
  std::vector<std::pair<mpz_class, int>> integer_cells() const;

 private:
  int variations_from_signs(const std::vector<int>& s) const;
  void isolate(const mpq_class& lo, const mpq_class& hi, int vlo, int vhi, std::vector<RootInterval>& out) const;
  void cells(const mpz_class& lo, const mpz_class& hi, int vlo, int vhi,
             std::vector<std::pair<mpz_class, int>>& out) const;

  std::vector<std::vector<mpz_class>> chain_;
};

/// Distinct real roots of f in (lo, hi]. Throws std::domain_error if f is
/// zero or vanishes at a finite endpoint.
int sturm_real_root_count(const UniPoly& f, const std::optional<mpq_class>& lo,
                          const std::optional<mpq_class>& hi);

}  // namespace thue

#endif  // THUE_STURM_HPP
