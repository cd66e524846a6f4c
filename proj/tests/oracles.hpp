#ifndef THUE_TESTS_ORACLES_HPP
#define THUE_TESTS_ORACLES_HPP

// Reference computations kept deliberately naive and independent of the
// library: cofactor determinants, long-double root products, int64 scans.

#include <cmath>
#include <complex>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using cld = std::complex<long double>;

/// Laplace expansion along the first row.
inline mpz_class cofactor_det(const std::vector<std::vector<mpz_class>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  mpz_class acc = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<mpz_class>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<mpz_class> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    mpz_class term = m[0][c] * cofactor_det(minor);
    acc += (c % 2 == 0) ? term : mpz_class(-term);
  }
  return acc;
}

/// Sylvester matrix of integer polynomials given high-to-low.
inline std::vector<std::vector<mpz_class>> sylvester(const std::vector<mpz_class>& f, const std::vector<mpz_class>& g) {
  const std::size_t df = f.size() - 1, dg = g.size() - 1, n = df + dg;
  std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n, 0));
  for (std::size_t r = 0; r < dg; ++r)
    for (std::size_t k = 0; k <= df; ++k) m[r][r + k] = f[k];
  for (std::size_t r = 0; r < df; ++r)
    for (std::size_t k = 0; k <= dg; ++k) m[dg + r][r + k] = g[k];
  return m;
}

/// Durand-Kerner in long double; coefficients low to high, leading nonzero.
inline std::vector<cld> roots(const std::vector<long double>& c) {
  const int d = static_cast<int>(c.size()) - 1;
  std::vector<cld> z(static_cast<std::size_t>(d));
  const cld seed(0.4L, 0.9L);
  cld p = 1;
  for (int i = 0; i < d; ++i) {
    z[static_cast<std::size_t>(i)] = p;
    p *= seed;
  }
  auto eval = [&](cld x) {
    cld acc = 0;
    for (int k = d; k >= 0; --k) acc = acc * x + c[static_cast<std::size_t>(k)];
    return acc;
  };
  for (int it = 0; it < 5000; ++it) {
    for (int i = 0; i < d; ++i) {
      cld den = c[static_cast<std::size_t>(d)];
      for (int j = 0; j < d; ++j)
        if (j != i) den *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
      z[static_cast<std::size_t>(i)] -= eval(z[static_cast<std::size_t>(i)]) / den;
    }
  }
  return z;
}

/// a_lead^(2(d-1)) prod_{i<j} (z_i - z_j)^2, the finite-root part.
inline long double disc_product(const std::vector<long double>& c) {
  const auto z = roots(c);
  cld acc = std::pow(cld(c.back()), 2 * (static_cast<int>(z.size()) - 1));
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j) acc *= (z[i] - z[j]) * (z[i] - z[j]);
  return acc.real();
}

/// |a_lead| prod max(1, |z|).
inline long double mahler(const std::vector<long double>& c) {
  long double acc = std::fabs(c.back());
  for (const auto& z : roots(c)) acc *= std::max(1.0L, std::abs(z));
  return acc;
}

/// Real root of a monotone function on [lo, hi] by plain bisection.
template <class Fn>
long double bisect(Fn f, long double lo, long double hi) {
  for (int i = 0; i < 200; ++i) {
    long double mid = (lo + hi) / 2;
    if ((f(lo) < 0) == (f(mid) < 0)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

/// Exhaustive int64 scan: canonical (x, y), |x|,|y| <= b, 1 <= |F| <= m.
/// coeffs[i] multiplies x^i y^(n-i).
inline std::set<std::pair<long, long>> scan(const std::vector<long>& coeffs, long m, long b) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  std::set<std::pair<long, long>> out;
  for (long y = 0; y <= b; ++y) {
    for (long x = -b; x <= b; ++x) {
      if (y == 0 && x <= 0) continue;
      __int128 v = 0;
      for (int i = 0; i <= n; ++i) {
        __int128 t = coeffs[static_cast<std::size_t>(i)];
        for (int k = 0; k < i; ++k) t *= x;
        for (int k = 0; k < n - i; ++k) t *= y;
        v += t;
      }
      if (v < 0) v = -v;
      if (v >= 1 && v <= m) out.emplace(x, y);
    }
  }
  return out;
}

}  // namespace oracle

#endif  // THUE_TESTS_ORACLES_HPP
