#include "thue/measure.hpp"

#include <cmath>
#include <stdexcept>

namespace thue {

Real MeasureResult::lower() const { return value * (Real(1L, value.precision()) - relative_error_bound); }
Real MeasureResult::upper() const { return value * (Real(1L, value.precision()) + relative_error_bound); }
Real MeasureResult::log_value() const { return log(value); }

Real MeasureResult::log_error() const {
  // |ln(1 + e)| <= e / (1 - e) for |e| < 1.
  const Real one(1L, value.precision());
  return relative_error_bound / (one - relative_error_bound);
}

namespace {

// F(z, 1) with the factor z^a (from x^a | F) divided out. Roots at infinity
// (from y^b | F) are already absent from this chart.
UniPoly stripped_chart(const BinaryForm& f) {
  std::vector<mpq_class> c = f.x_chart().coeffs();
  std::size_t lead_zeros = 0;
  while (lead_zeros < c.size() && c[lead_zeros] == 0) ++lead_zeros;
  c.erase(c.begin(), c.begin() + static_cast<long>(lead_zeros));
  return UniPoly(std::move(c));
}

struct RootProduct {
  Real value, lo, hi;
};

// |lead| * prod phi(|gamma|) with interval bounds from the certified radii.
template <class Phi>
RootProduct root_product(const UniPoly& g, mpfr_prec_t prec, Phi phi) {
  const Real lead = abs(Real(g.leading(), prec));
  RootProduct p{lead, lead, lead};
  if (g.degree() < 1) return p;
  RootSet rs = find_roots(g, prec);
  for (const auto& r : rs.roots) {
    const Real a = r.center.abs().with_precision(prec);
    const Real rad = r.radius.with_precision(prec);
    Real alo = a - rad;
    if (alo.sign() < 0) alo = Real(prec);
    p.value *= phi(a);
    p.lo *= phi(alo);
    p.hi *= phi(a + rad);
  }
  return p;
}

MeasureResult to_result(const RootProduct& p, int ops, mpfr_prec_t prec) {
  const Real up = (p.hi - p.value) / p.value;
  const Real down = (p.value - p.lo) / p.value;
  // Rounding in the products and abs/sqrt: a few ulps per operation.
  const Real rounding = pow(Real(2L, prec), -static_cast<long>(prec) + 3) * static_cast<long>(ops + 4);
  return {p.value, max(up, down) + rounding};
}

}  // namespace

MeasureResult mahler_measure(const BinaryForm& f, mpfr_prec_t prec) {
  if (f.is_zero()) throw std::domain_error("Mahler measure of the zero form");
  const UniPoly g = stripped_chart(f);
  const Real one(1L, prec);
  RootProduct p = root_product(g, prec, [&](const Real& a) { return max(one, a); });
  return to_result(p, 2 * g.degree(), prec);
}

MeasureResult absolute_height(const BinaryForm& f, int j, mpfr_prec_t prec) {
  if (f.is_zero()) throw std::domain_error("height of the zero form");
  const int n = f.degree();
  const UniPoly chart = f.x_chart();
  if (j < 0 || j >= chart.degree()) throw std::out_of_range("root index out of range");
  const UniPoly g = stripped_chart(f);
  const Real one(1L, prec);
  RootProduct p = root_product(g, prec, [&](const Real& a) { return sqrt(one + a * a); });
  MeasureResult inner = to_result(p, 4 * g.degree(), prec);
  const Real cont(content(f), prec);
  const Real inv_n = one / static_cast<long>(n);
  Real value = pow(inner.value / cont, inv_n);
  // (1 +- e)^(1/n) stays within 1 +- e.
  return {value, inner.relative_error_bound + pow(Real(2L, prec), -static_cast<long>(prec) + 4)};
}

LogReal lewis_mahler_rhs(int n, const Real& measure, const mpz_class& disc, const mpz_class& value,
                         const mpz_class& y) {
  if (y == 0) throw std::domain_error("Lewis-Mahler bound needs y != 0");
  if (disc == 0) throw std::domain_error("Lewis-Mahler bound needs a nonzero discriminant");
  if (value == 0) return {};
  constexpr mpfr_prec_t P = LogReal::kPrecision;
  Real ln = const_log2(P) * static_cast<long>(n - 1);
  ln += log(Real(static_cast<long>(n), P)) * Real(mpq_class(n - 1, 2), P);
  ln += log(measure.with_precision(P)) * static_cast<long>(n - 2);
  ln += LogReal::from_integer(value).log_magnitude();
  ln -= LogReal::from_integer(disc).log_magnitude() / 2L;
  ln -= LogReal::from_integer(y).log_magnitude() * static_cast<long>(n);
  return LogReal::from_log(ln, 1);
}

LogReal lewis_mahler_rhs(const BinaryForm& f, const mpz_class& value, const mpz_class& y) {
  if (y == 0) throw std::domain_error("Lewis-Mahler bound needs y != 0");
  const mpz_class d = discriminant(f);
  if (d == 0) throw std::domain_error("Lewis-Mahler bound needs a nonzero discriminant");
  return lewis_mahler_rhs(f.degree(), mahler_measure(f).value, d, value, y);
}

DiscEstimate discriminant_root_product(const BinaryForm& f, mpfr_prec_t prec) {
  const BinaryForm g = apply_matrix(f, end_coefficient_shear(f));
  const int n = g.degree();
  const UniPoly chart = g.x_chart();
  const RootSet rs = find_roots(chart, prec);
  const Real one(1L, prec);
  Complex prod(one, Real(prec));
  Real err_factor = one;
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    for (std::size_t j = i + 1; j < rs.roots.size(); ++j) {
      const Complex diff = rs.roots[i].center - rs.roots[j].center;
      const Real dabs = diff.abs();
      const Real r = rs.roots[i].radius + rs.roots[j].radius;
      if (!(dabs > r)) throw RootError("root discs overlap in the discriminant product");
      prod *= diff * diff;
      // |d + e|^2 / |d|^2 <= (1 + |e| / |d|)^2 and the same below.
      const Real e = r / (dabs - r);
      err_factor *= (one + e) * (one + e);
    }
  }
  Real value = prod.re * pow(Real(chart.leading(), prec), 2L * (n - 1));
  const long ops = static_cast<long>(rs.roots.size() * rs.roots.size()) * 4 + 4L * n;
  const Real rounding = pow(Real(2L, prec), -static_cast<long>(prec) + 4) * ops;
  // The imaginary part is pure rounding noise; it is folded into the bound.
  const Real im_rel = abs(prod.im) / abs(prod.re);
  return {value, err_factor - one + rounding + im_rel};
}

MahlerChainCheck mahler_chain_check(const BinaryForm& f, double slack, mpfr_prec_t prec) {
  MahlerChainCheck c;
  const int n = f.degree();
  const MeasureResult m = mahler_measure(f, prec);
  const double ln_lo = log(m.lower()).to_double();
  const double ln_hi = log(m.upper()).to_double();
  const mpz_class d = discriminant(f);
  if (d != 0) {
    const double ln_d = LogReal::from_integer(d).ln_double();
    const double rhs = (ln_d - n * std::log(static_cast<double>(n))) / (2.0 * n - 2);
    c.disc_margin = ln_hi - rhs;
    c.disc_lower = c.disc_margin + slack >= 0;
  }
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n / 2));
  const double ln_h = LogReal::from_integer(height(f)).ln_double();
  const double ln_b = LogReal::from_integer(binom).ln_double();
  c.height_lower_margin = ln_hi - (ln_h - ln_b);
  c.height_lower = c.height_lower_margin + slack >= 0;
  c.height_upper_margin = ln_h + 0.5 * std::log(n + 1.0) - ln_lo;
  c.height_upper = c.height_upper_margin + slack >= 0;
  return c;
}

}  // namespace thue
