#include "thue/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace thue {

UniPoly::UniPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
  for (auto& q : c_) q.canonicalize();
  normalize();
}

UniPoly UniPoly::from_integers(const std::vector<mpz_class>& coeffs) {
  std::vector<mpq_class> q(coeffs.begin(), coeffs.end());
  return UniPoly(std::move(q));
}

UniPoly UniPoly::monomial(int degree, mpq_class c) {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<mpq_class> v(static_cast<std::size_t>(degree) + 1);
  v.back() = std::move(c);
  return UniPoly(std::move(v));
}

void UniPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpq_class UniPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<std::size_t>(i)];
}

const mpq_class& UniPoly::leading() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return c_.back();
}

mpq_class UniPoly::operator()(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpq_class> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return UniPoly(std::move(d));
}

std::vector<mpz_class> UniPoly::primitive_integer() const {
  if (c_.empty()) return {};
  mpz_class den = 1;
  for (const auto& q : c_) den = lcm(den, mpz_class(q.get_den()));
  std::vector<mpz_class> z(c_.size());
  mpz_class g = 0;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    z[i] = c_[i].get_num() * (den / c_[i].get_den());
    g = gcd(g, z[i]);
  }
  for (auto& v : z) v /= g;
  return z;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<mpq_class> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  normalize();
  return *this;
}

UniPoly operator*(UniPoly a, const mpq_class& k) {
  for (auto& q : a.c_) q *= k;
  a.normalize();
  return a;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (degree() < d.degree()) return {UniPoly{}, *this};
  std::vector<mpq_class> rem = c_;
  std::vector<mpq_class> quo(static_cast<std::size_t>(degree() - d.degree() + 1));
  const mpq_class& lead = d.leading();
  const int dd = d.degree();
  for (int k = degree() - dd; k >= 0; --k) {
    mpq_class q = rem[static_cast<std::size_t>(k + dd)] / lead;
    quo[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= q * d.c_[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

std::string UniPoly::to_string(const char* var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpq_class& q = c_[static_cast<std::size_t>(i)];
    if (q == 0) continue;
    if (!first) os << (q < 0 ? " - " : " + ");
    else if (q < 0) os << "-";
    first = false;
    mpq_class a = abs(q);
    if (a != 1 || i == 0) os << a.get_str();
    if (i > 0) os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (mpq_class(1) / a.leading());
}

bool is_squarefree(const UniPoly& f) {
  if (f.is_zero()) return false;
  return gcd(f, f.derivative()).degree() <= 0;
}

UniPoly squarefree_part(const UniPoly& f) {
  if (f.degree() <= 0) return f;
  UniPoly g = gcd(f, f.derivative());
  return f.divmod(g).first;
}

mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(t);
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

mpq_class resultant(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() || g.is_zero()) throw std::domain_error("resultant of zero polynomial");
  const int df = f.degree();
  const int dg = g.degree();
  if (df == 0 && dg == 0) return 1;

  // f = (cf) * F with F integral; Res(f, g) = cf^dg * cg^df * Res(F, G).
  auto scaled = [](const UniPoly& p, mpq_class& scale) {
    std::vector<mpz_class> z = p.primitive_integer();
    scale = p.leading() / mpq_class(z.back());
    return z;
  };
  mpq_class cf, cg;
  std::vector<mpz_class> F = scaled(f, cf);
  std::vector<mpz_class> G = scaled(g, cg);

  const std::size_t n = static_cast<std::size_t>(df + dg);
  std::vector<std::vector<mpz_class>> syl(n, std::vector<mpz_class>(n));
  for (int r = 0; r < dg; ++r)
    for (int i = 0; i <= df; ++i)
      syl[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + df - i)] = F[static_cast<std::size_t>(i)];
  for (int r = 0; r < df; ++r)
    for (int i = 0; i <= dg; ++i)
      syl[static_cast<std::size_t>(dg + r)][static_cast<std::size_t>(r + dg - i)] = G[static_cast<std::size_t>(i)];

  mpq_class res(bareiss_determinant(std::move(syl)));
  mpq_class k = 1;
  for (int i = 0; i < dg; ++i) k *= cf;
  for (int i = 0; i < df; ++i) k *= cg;
  res *= k;
  res.canonicalize();
  return res;
}

}  // namespace thue
