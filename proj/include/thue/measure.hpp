#ifndef THUE_MEASURE_HPP
#define THUE_MEASURE_HPP

#include <gmpxx.h>

#include "thue/form.hpp"
#include "thue/logreal.hpp"
#include "thue/real.hpp"
#include "thue/roots.hpp"

namespace thue {

/// A positive real with a certified relative error bound:
/// |true - value| <= relative_error_bound * value.
struct MeasureResult {
  Real value;
  Real relative_error_bound;

  Real lower() const;
  Real upper() const;
  /// ln(value) with an absolute error bound on the log.
  Real log_value() const;
  Real log_error() const;
};

/// Mahler measure |a| prod max(1, |gamma_i|). Powers of x and y are split off
/// exactly first; they contribute 1.
MeasureResult mahler_measure(const BinaryForm& f, mpfr_prec_t precision_bits = kDefaultPrecisionBits);

/// Absolute height of the root alpha_j of F(z, 1):
/// (|a| prod_k sqrt(1 + |alpha_k|^2) / cont(F))^(1/n), so scaling F leaves it
/// unchanged. The value is the same for every root of an irreducible F; `j`
/// only selects which root is meant.
MeasureResult absolute_height(const BinaryForm& f, int j, mpfr_prec_t precision_bits = kDefaultPrecisionBits);

/// 2^(n-1) n^((n-1)/2) M^(n-2) |value| / (|D|^(1/2) |y|^n) in log space.
/// Throws std::domain_error if y == 0 or D == 0.
LogReal lewis_mahler_rhs(const BinaryForm& f, const mpz_class& value, const mpz_class& y);
/// Same with M and D supplied by the caller.
LogReal lewis_mahler_rhs(int n, const Real& measure, const mpz_class& disc, const mpz_class& value,
                         const mpz_class& y);

/// a^(2(n-1)) prod_{i<j} (g_i - g_j)^2 from certified roots, with
/// |true - value| <= relative_error_bound * |value|. Forms with a vanishing
/// end coefficient are sheared first (det 1 leaves D unchanged).
/// Throws RootError when D = 0.
struct DiscEstimate {
  Real value;
  Real relative_error_bound;
};
DiscEstimate discriminant_root_product(const BinaryForm& f, mpfr_prec_t precision_bits = kDefaultPrecisionBits);

/// The measure against the discriminant and the height, compared in log
/// space with `slack` absorbed on the favourable side:
///   M >= (|D| / n^n)^(1/(2n-2)),
///   H / binom(n, n/2) <= M <= sqrt(n+1) H.
struct MahlerChainCheck {
  bool disc_lower = true;
  bool height_lower = true;
  bool height_upper = true;
  /// ln M minus each bound's ln (positive means room to spare).
  double disc_margin = 0, height_lower_margin = 0, height_upper_margin = 0;
  bool holds() const { return disc_lower && height_lower && height_upper; }
};
MahlerChainCheck mahler_chain_check(const BinaryForm& f, double slack = 0x1p-40,
                                    mpfr_prec_t precision_bits = kDefaultPrecisionBits);

}  // namespace thue

#endif  // THUE_MEASURE_HPP
