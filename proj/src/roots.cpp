#include "thue/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

namespace thue {

int RootSet::real_count() const {
  return static_cast<int>(std::count_if(roots.begin(), roots.end(), [](const RootApprox& r) { return r.is_real; }));
}

std::vector<std::size_t> RootSet::real_indices() const {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (roots[i].is_real) idx.push_back(i);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return roots[a].center.re < roots[b].center.re; });
  return idx;
}

Real RootSet::min_distance_lower(const Complex& z) const {
  Real best(working_precision_bits);
  bool first = true;
  for (const auto& r : roots) {
    Real d = (z - r.center).abs() - r.radius;
    if (d.sign() < 0) d = Real(working_precision_bits);
    if (first || d < best) best = d;
    first = false;
  }
  return best;
}

std::pair<Real, std::size_t> RootSet::nearest(const Complex& z) const {
  Real best(working_precision_bits);
  std::size_t arg = 0;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    Real d = (z - roots[i].center).abs();
    if (i == 0 || d < best) {
      best = d;
      arg = i;
    }
  }
  return {best, arg};
}

namespace {

using LComplex = std::complex<long double>;

// Aberth iteration in long double to seed the multiprecision phase. Returns
// false if the coefficients do not fit or the iteration blows up.
bool seed_roots(const std::vector<long double>& c, std::vector<LComplex>& z) {
  const int d = static_cast<int>(c.size()) - 1;
  for (long double v : c)
    if (!std::isfinite(v)) return false;
  // Starting circle: Fujiwara-type radius, points rotated off the axes.
  long double rad = 0;
  for (int k = 1; k <= d; ++k) {
    long double q = std::fabs(c[static_cast<std::size_t>(d - k)] / c[static_cast<std::size_t>(d)]);
    if (q > 0) rad = std::max(rad, std::pow(q, 1.0L / k));
  }
  if (rad == 0) rad = 1;
  z.resize(static_cast<std::size_t>(d));
  const long double pi = 3.141592653589793238462643383279502884L;
  for (int k = 0; k < d; ++k) z[static_cast<std::size_t>(k)] = std::polar(rad, 2 * pi * k / d + 0.4L);

  for (int iter = 0; iter < 1000; ++iter) {
    long double worst = 0;
    for (int i = 0; i < d; ++i) {
      LComplex zi = z[static_cast<std::size_t>(i)];
      LComplex p = c[static_cast<std::size_t>(d)], dp = 0;
      for (int k = d - 1; k >= 0; --k) {
        dp = dp * zi + p;
        p = p * zi + c[static_cast<std::size_t>(k)];
      }
      if (p == LComplex(0)) continue;
      LComplex ratio = p / dp;
      LComplex sum = 0;
      for (int j = 0; j < d; ++j)
        if (j != i) sum += 1.0L / (zi - z[static_cast<std::size_t>(j)]);
      LComplex w = ratio / (1.0L - ratio * sum);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return false;
      z[static_cast<std::size_t>(i)] = zi - w;
      worst = std::max(worst, std::abs(w) / std::max(1.0L, std::abs(zi)));
    }
    if (worst < 1e-17L) break;
  }
  for (const auto& v : z)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

struct Eval {
  Complex p, dp;
  Real abs_sum;  // sum |c_k| |z|^k, for the rounding bound
  Real dabs_sum;
};

Eval horner(const std::vector<Real>& c, const std::vector<Real>& cabs, const Complex& z) {
  const mpfr_prec_t prec = z.precision();
  const int d = static_cast<int>(c.size()) - 1;
  Eval e{Complex(c.back(), Real(prec)), Complex(prec), cabs.back(), Real(prec)};
  const Real az = z.abs();
  for (int k = d - 1; k >= 0; --k) {
    e.dp = e.dp * z + e.p;
    e.p = e.p * z + Complex(c[static_cast<std::size_t>(k)], Real(prec));
    e.dabs_sum = e.dabs_sum * az + e.abs_sum;
    e.abs_sum = e.abs_sum * az + cabs[static_cast<std::size_t>(k)];
  }
  return e;
}

// One attempt at a fixed precision. Empty result means "not separated".
std::vector<RootApprox> attempt(const UniPoly& f, std::vector<Complex> z, mpfr_prec_t prec) {
  const int d = f.degree();
  std::vector<Real> c, cabs;
  for (const auto& q : f.coeffs()) {
    c.emplace_back(q, prec);
    cabs.push_back(abs(c.back()));
  }
  for (auto& v : z) v = Complex(v.re.with_precision(prec), v.im.with_precision(prec));

  const Real tol = pow(Real(2L, prec), -static_cast<long>(prec) + 12);
  Real last_worst(prec);
  int stalled = 0;
  for (int iter = 0; iter < 400; ++iter) {
    Real worst(prec);
    for (int i = 0; i < d; ++i) {
      Eval e = horner(c, cabs, z[static_cast<std::size_t>(i)]);
      if (e.p.re.is_zero() && e.p.im.is_zero()) continue;
      Complex ratio = e.p / e.dp;
      Complex sum(prec);
      for (int j = 0; j < d; ++j) {
        if (j == i) continue;
        Complex diff = z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
        sum += Complex(Real(1L, prec), Real(prec)) / diff;
      }
      Complex w = ratio / (Complex(Real(1L, prec), Real(prec)) - ratio * sum);
      if (!w.re.is_finite() || !w.im.is_finite()) return {};
      Real rel = w.abs() / max(Real(1L, prec), z[static_cast<std::size_t>(i)].abs());
      z[static_cast<std::size_t>(i)] -= w;
      if (rel > worst) worst = rel;
    }
    if (worst < tol) break;
    if (iter > 0 && !(worst < last_worst)) {
      if (++stalled > 4) break;
    } else {
      stalled = 0;
    }
    last_worst = worst;
  }

  // Inclusion radii: some root lies within d |f(z)| / |f'(z)| of z.
  const Real unit = pow(Real(2L, prec), -static_cast<long>(prec));
  const Real slack = unit * static_cast<long>(4 * d + 8);
  std::vector<RootApprox> out(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    Eval e = horner(c, cabs, z[static_cast<std::size_t>(i)]);
    Real num = e.p.abs() + slack * e.abs_sum;
    Real den = e.dp.abs() - slack * e.dabs_sum;
    if (den.sign() <= 0) return {};
    out[static_cast<std::size_t>(i)].center = z[static_cast<std::size_t>(i)];
    out[static_cast<std::size_t>(i)].radius = num / den * static_cast<long>(d);
    // Round the radius up a little for the division itself.
    out[static_cast<std::size_t>(i)].radius *= Real(1L, prec) + slack;
  }

  auto disjoint = [&](const Complex& a, const Real& ra, const Complex& b, const Real& rb) {
    return (a - b).abs() > (ra + rb) * (Real(1L, prec) + slack);
  };
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (!disjoint(out[static_cast<std::size_t>(i)].center, out[static_cast<std::size_t>(i)].radius,
                    out[static_cast<std::size_t>(j)].center, out[static_cast<std::size_t>(j)].radius))
        return {};

  // n disjoint discs each holding a root: one root per disc. The conjugate
  // of the root in disc i lies in conj(disc i); if that meets no other disc,
  // the root is its own conjugate.
  for (int i = 0; i < d; ++i) {
    RootApprox& r = out[static_cast<std::size_t>(i)];
    const Complex cc = r.center.conj();
    std::vector<int> hits;
    for (int j = 0; j < d; ++j)
      if (!disjoint(cc, r.radius, out[static_cast<std::size_t>(j)].center, out[static_cast<std::size_t>(j)].radius))
        hits.push_back(j);
    if (abs(r.center.im) > r.radius) {
      // Non-real; its conjugate partner must be visible.
      if (hits.size() != 1 || hits[0] == i) return {};
    } else {
      if (hits.size() != 1 || hits[0] != i) return {};
      r.is_real = true;
    }
  }
  for (auto& r : out) {
    if (r.is_real) {
      r.radius += abs(r.center.im);
      r.center.im = Real(prec);
    }
  }
  return out;
}

}  // namespace

RootSet find_roots(const UniPoly& f, mpfr_prec_t precision_bits) {
  if (f.is_zero()) throw RootError("roots of the zero polynomial");
  RootSet set;
  set.working_precision_bits = precision_bits;
  const int d = f.degree();
  if (d == 0) return set;
  if (!is_squarefree(f)) throw RootError("polynomial is not squarefree: " + f.to_string());

  std::vector<long double> cl;
  for (const auto& q : f.coeffs()) {
    Real r(q, 64);
    cl.push_back(mpfr_get_ld(r.get(), MPFR_RNDN));
  }
  std::vector<LComplex> seed;
  std::vector<Complex> z0;
  const bool seeded = seed_roots(cl, seed);
  for (int k = 0; k < d; ++k) {
    if (seeded) {
      Real re(precision_bits), im(precision_bits);
      mpfr_set_ld(re.get(), seed[static_cast<std::size_t>(k)].real(), MPFR_RNDN);
      mpfr_set_ld(im.get(), seed[static_cast<std::size_t>(k)].imag(), MPFR_RNDN);
      z0.emplace_back(re, im);
    } else {
      // Unit-circle start; the multiprecision iteration does the work.
      const double ang = 2 * M_PI * k / d + 0.4;
      z0.emplace_back(Real(std::cos(ang), precision_bits), Real(std::sin(ang), precision_bits));
    }
  }

  for (mpfr_prec_t prec = precision_bits; prec <= 16 * precision_bits; prec *= 2) {
    std::vector<RootApprox> roots = attempt(f, z0, prec);
    if (!roots.empty()) {
      set.roots = std::move(roots);
      set.working_precision_bits = prec;
      return set;
    }
  }
  throw RootError("failed to separate roots of " + f.to_string());
}

namespace {

RootSet chart_roots(const UniPoly& chart, int degree, mpfr_prec_t prec) {
  RootSet set = find_roots(chart, prec);
  set.roots_at_infinity = degree - chart.degree();
  return set;
}

}  // namespace

RootSet form_roots_x(const BinaryForm& f, mpfr_prec_t precision_bits) {
  return chart_roots(f.x_chart(), f.degree(), precision_bits);
}

RootSet form_roots_y(const BinaryForm& f, mpfr_prec_t precision_bits) {
  return chart_roots(f.y_chart(), f.degree(), precision_bits);
}

}  // namespace thue
