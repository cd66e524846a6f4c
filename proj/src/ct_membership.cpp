#include "thue/ct_membership.hpp"

#include <cmath>
#include <stdexcept>

#include "thue/sturm.hpp"

namespace thue {

int real_projective_zeros(const BinaryForm& g) {
  if (g.is_zero()) return -1;
  const UniPoly chart = g.x_chart();
  int zeros = 0;
  if (chart.degree() >= 1) zeros = SturmChain(chart.primitive_integer()).count_all();
  if (g.degree() >= 1 && g.coeff(g.degree()) == 0) ++zeros;
  return zeros;
}

namespace {

double van_der_corput(std::uint64_t k) {
  double v = 0, base = 0.5;
  while (k) {
    if (k & 1) v += base;
    base *= 0.5;
    k >>= 1;
  }
  return v;
}

}  // namespace

std::vector<std::pair<mpz_class, mpz_class>> sample_directions(int directions, std::uint64_t seed) {
  std::vector<std::pair<mpz_class, mpz_class>> out;
  if (directions >= 1) out.emplace_back(1, 0);
  if (directions >= 2) out.emplace_back(0, 1);
  const double scale = 1 << 20;
  for (std::uint64_t k = 1; static_cast<int>(out.size()) < directions; ++k) {
    const double theta = M_PI * van_der_corput(seed + k);
    mpz_class u(std::lround(scale * std::cos(theta)));
    mpz_class v(std::lround(scale * std::sin(theta)));
    if (u == 0 && v == 0) continue;
    const mpz_class g = gcd(u, v);
    out.emplace_back(u / g, v / g);
  }
  return out;
}

CtReport ct_membership_sample(const BinaryForm& f, int t, int directions, std::uint64_t seed) {
  if (f.degree() < 2) throw std::domain_error("directional derivatives need degree >= 2");
  const auto [fx, fy] = partial_forms(f);
  const std::vector<mpz_class> dx = fx.dense(), dy = fy.dense();
  CtReport rep;
  for (const auto& [u, v] : sample_directions(directions, seed)) {
    std::vector<mpz_class> c(dx.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = u * dx[i] + v * dy[i];
    const BinaryForm g = BinaryForm::from_dense(f.degree() - 1, c);
    ++rep.directions_checked;
    int z = real_projective_zeros(g);
    if (z < 0) {
      rep.degenerate_direction = true;
      if (!rep.witness) rep.witness = std::make_pair(u, v);
      continue;
    }
    if (z > rep.max_real_zeros_seen) rep.max_real_zeros_seen = z;
    if (z > t && !rep.witness) rep.witness = std::make_pair(u, v);
  }
  return rep;
}

}  // namespace thue
