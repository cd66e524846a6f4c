#ifndef THUE_ROOTS_HPP
#define THUE_ROOTS_HPP

#include <stdexcept>
#include <vector>

#include "thue/form.hpp"
#include "thue/real.hpp"
#include "thue/unipoly.hpp"

namespace thue {

/// A disc in C known to contain exactly one root of the polynomial.
struct RootApprox {
  Complex center;
  Real radius;
  /// Set when the root is provably real (then center.im == 0).
  bool is_real = false;
};

struct RootSet {
  std::vector<RootApprox> roots;
  /// Degree drop of a dehomogenized form: roots at infinity.
  int roots_at_infinity = 0;
  mpfr_prec_t working_precision_bits = kDefaultPrecisionBits;

  int real_count() const;
  /// Indices of real roots, ordered by increasing value.
  std::vector<std::size_t> real_indices() const;
  /// Lower bound on min_i |z - root_i| over the finite roots.
  Real min_distance_lower(const Complex& z) const;
  /// Approximate min_i |z - center_i| and the minimizing index.
  std::pair<Real, std::size_t> nearest(const Complex& z) const;
};

class RootError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Simultaneous (Aberth-Ehrlich) iteration with certified radii
/// deg * |f(z)| / |f'(z)| (rounding included). Precision doubles, up to 16x
/// the request, until all discs are pairwise disjoint and every disc that
/// meets the real axis is proven real or non-real.
///
/// Throws RootError for a non-squarefree input, the zero polynomial, or when
/// separation fails at the top precision.
RootSet find_roots(const UniPoly& f, mpfr_prec_t precision_bits = kDefaultPrecisionBits);

/// Roots of F(z, 1); a_n = 0 shows up as roots at infinity.
RootSet form_roots_x(const BinaryForm& f, mpfr_prec_t precision_bits = kDefaultPrecisionBits);
/// Roots of F(1, z).
RootSet form_roots_y(const BinaryForm& f, mpfr_prec_t precision_bits = kDefaultPrecisionBits);

}  // namespace thue

#endif  // THUE_ROOTS_HPP
