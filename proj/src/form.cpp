#include "thue/form.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "thue/sturm.hpp"

namespace thue {

BinaryForm BinaryForm::from_dense(int degree, const std::vector<mpz_class>& coeffs) {
  if (degree < 0 || coeffs.size() != static_cast<std::size_t>(degree) + 1) {
    throw std::invalid_argument("dense coefficient list does not match degree");
  }
  BinaryForm f;
  f.degree_ = degree;
  for (int i = 0; i <= degree; ++i) {
    if (coeffs[static_cast<std::size_t>(i)] != 0) f.terms_.emplace_back(i, coeffs[static_cast<std::size_t>(i)]);
  }
  return f;
}

mpz_class BinaryForm::coeff(int i) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), i,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == i) return it->second;
  return 0;
}

std::vector<mpz_class> BinaryForm::dense() const {
  std::vector<mpz_class> d(static_cast<std::size_t>(degree_) + 1);
  for (const auto& [e, c] : terms_) d[static_cast<std::size_t>(e)] = c;
  return d;
}

UniPoly BinaryForm::x_chart() const { return UniPoly::from_integers(dense()); }

UniPoly BinaryForm::y_chart() const {
  std::vector<mpz_class> d = dense();
  std::reverse(d.begin(), d.end());
  return UniPoly::from_integers(d);
}

std::string BinaryForm::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    mpz_class a = abs(c);
    const int ye = degree_ - e;
    if (a != 1 || (e == 0 && ye == 0)) os << a.get_str();
    if (e > 0) os << "x" << (e > 1 ? "^" + std::to_string(e) : "");
    if (ye > 0) os << "y" << (ye > 1 ? "^" + std::to_string(ye) : "");
  }
  return os.str();
}

BinaryForm make_form(const std::vector<BinaryForm::Term>& pairs, int degree) {
  if (degree < 1) throw std::invalid_argument("form degree must be at least 1");
  std::vector<BinaryForm::Term> t;
  std::vector<bool> seen(static_cast<std::size_t>(degree) + 1, false);
  for (const auto& [e, c] : pairs) {
    if (e < 0 || e > degree) {
      throw std::invalid_argument("exponent " + std::to_string(e) + " outside [0, " + std::to_string(degree) + "]");
    }
    if (seen[static_cast<std::size_t>(e)]) throw std::invalid_argument("duplicate exponent " + std::to_string(e));
    seen[static_cast<std::size_t>(e)] = true;
    if (c != 0) t.emplace_back(e, c);
  }
  if (t.empty()) throw std::invalid_argument("all coefficients are zero");
  std::sort(t.begin(), t.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  BinaryForm f;
  f.degree_ = degree;
  f.terms_ = std::move(t);
  return f;
}

mpz_class eval_form(const BinaryForm& f, const mpz_class& x, const mpz_class& y) {
  // Homogeneous Horner over the dense coefficient list.
  const int n = f.degree();
  std::vector<mpz_class> ypow(static_cast<std::size_t>(n) + 1);
  ypow[0] = 1;
  for (int i = 1; i <= n; ++i) ypow[static_cast<std::size_t>(i)] = ypow[static_cast<std::size_t>(i - 1)] * y;
  mpz_class acc = 0;
  int e = n;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    while (e > it->first) {
      acc *= x;
      --e;
    }
    acc += it->second * ypow[static_cast<std::size_t>(n - it->first)];
  }
  while (e > 0) {
    acc *= x;
    --e;
  }
  return acc;
}

namespace {

// Coefficients of a homogeneous form indexed by the power of x.
using Dense = std::vector<mpz_class>;

Dense mul(const Dense& p, const Dense& q) {
  Dense r(p.size() + q.size() - 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  }
  return r;
}

}  // namespace

BinaryForm apply_matrix(const BinaryForm& f, const Mat2& m) {
  if (m.det() == 0) throw std::domain_error("singular matrix in form action");
  const int n = f.degree();
  // L1 = a x + b y, L2 = c x + d y.
  const Dense l1{m.b, m.a};
  const Dense l2{m.d, m.c};
  std::vector<Dense> p1(static_cast<std::size_t>(n) + 1), p2(static_cast<std::size_t>(n) + 1);
  p1[0] = p2[0] = Dense{1};
  for (int i = 1; i <= n; ++i) {
    p1[static_cast<std::size_t>(i)] = mul(p1[static_cast<std::size_t>(i - 1)], l1);
    p2[static_cast<std::size_t>(i)] = mul(p2[static_cast<std::size_t>(i - 1)], l2);
  }
  Dense out(static_cast<std::size_t>(n) + 1);
  for (const auto& [e, c] : f.terms()) {
    Dense t = mul(p1[static_cast<std::size_t>(e)], p2[static_cast<std::size_t>(n - e)]);
    for (std::size_t k = 0; k < t.size(); ++k) out[k] += c * t[k];
  }
  return BinaryForm::from_dense(n, out);
}

std::pair<BinaryForm, BinaryForm> partial_forms(const BinaryForm& f) {
  const int n = f.degree();
  if (n < 1) throw std::invalid_argument("partial derivatives need degree >= 1");
  Dense fx(static_cast<std::size_t>(n)), fy(static_cast<std::size_t>(n));
  for (const auto& [e, c] : f.terms()) {
    if (e > 0) fx[static_cast<std::size_t>(e - 1)] += c * e;
    if (e < n) fy[static_cast<std::size_t>(e)] += c * (n - e);
  }
  return {BinaryForm::from_dense(n - 1, fx), BinaryForm::from_dense(n - 1, fy)};
}

mpz_class height(const BinaryForm& f) {
  mpz_class h = 0;
  for (const auto& t : f.terms()) h = std::max(h, mpz_class(abs(t.second)));
  return h;
}

mpz_class content(const BinaryForm& f) {
  mpz_class g = 0;
  for (const auto& t : f.terms()) g = gcd(g, t.second);
  return g;
}

Mat2 end_coefficient_shear(const BinaryForm& f) {
  const int n = f.degree();
  Mat2 total = Mat2::identity();
  BinaryForm g = f;
  if (g.coeff(n) == 0) {
    // y -> k x + y moves F(1, k) into the x^n slot.
    for (long k = 1;; k = (k > 0) ? -k : -k + 1) {
      if (eval_form(g, 1, k) != 0) {
        Mat2 s{1, 0, k, 1};
        g = apply_matrix(g, s);
        total = total * s;
        break;
      }
    }
  }
  if (g.coeff(0) == 0) {
    // x -> x + k y moves F(k, 1) into the y^n slot and keeps a_n.
    for (long k = 1;; k = (k > 0) ? -k : -k + 1) {
      if (eval_form(g, k, 1) != 0) {
        Mat2 s{1, k, 0, 1};
        total = total * s;
        break;
      }
    }
  }
  return total;
}

mpz_class discriminant(const BinaryForm& f) {
  if (f.is_zero()) return 0;
  const int n = f.degree();
  const Mat2 shear = end_coefficient_shear(f);
  const BinaryForm g = (shear == Mat2::identity()) ? f : apply_matrix(f, shear);
  const UniPoly p = g.x_chart();
  // D = (-1)^(n(n-1)/2) Res(f, f') / a_n; det(shear) = 1 keeps D unchanged.
  mpq_class r = resultant(p, p.derivative()) / p.leading();
  if (((n * (n - 1)) / 2) % 2 == 1) r = -r;
  if (r.get_den() != 1) throw std::logic_error("non-integral discriminant");
  return r.get_num();
}

namespace {

// Smallest-denominator rational in the closed interval [lo, hi].
mpq_class simplest_between(mpq_class lo, mpq_class hi) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (mpq_class(fl) == lo) return lo;
  if (mpq_class(fl + 1) <= hi) return mpq_class(fl + 1);
  // lo, hi in (fl, fl + 1): recurse on reciprocals of fractional parts.
  mpq_class r = simplest_between(1 / (hi - fl), 1 / (lo - fl));
  return fl + 1 / r;
}

}  // namespace

bool has_rational_linear_factor(const BinaryForm& f) {
  const int n = f.degree();
  if (f.coeff(0) == 0 || f.coeff(n) == 0) return true;  // x | F or y | F
  // A rational root p/q of F(z, 1) has q | a_n, so two such roots differ by
  // at least 1/a_n^2. Isolate each real root to width < 1/(2 a_n^2) and test
  // the simplest fraction in the interval.
  const UniPoly p = squarefree_part(f.x_chart());
  const mpz_class an = abs(f.coeff(n));
  const mpq_class width(1, 2 * an * an);
  SturmChain chain(p.primitive_integer());
  for (auto iv : chain.isolate_real_roots()) {
    if (iv.exact) {
      return true;
    }
    chain.refine(iv, width);
    if (iv.exact) return true;
    if (p(simplest_between(iv.lo, iv.hi)) == 0) return true;
  }
  return false;
}

PointDecomposition decompose_point(const mpz_class& x, const mpz_class& y, long p) {
  if (p < 2) throw std::invalid_argument("decompose_point needs a prime p");
  PointDecomposition out;
  const mpz_class pz(p);
  if (mpz_divisible_p(y.get_mpz_t(), pz.get_mpz_t())) {
    out.j = 0;
    out.u = x;
    out.v = y / pz;
    return out;
  }
  mpz_class yinv;
  mpz_invert(yinv.get_mpz_t(), y.get_mpz_t(), pz.get_mpz_t());
  mpz_class j = x * yinv;
  mpz_fdiv_r(j.get_mpz_t(), j.get_mpz_t(), pz.get_mpz_t());
  if (j == 0) j = pz;
  out.j = j.get_si();
  mpz_class num = x - j * y;
  out.u = num / pz;
  out.v = y;
  return out;
}

Mat2 sublattice_matrix(long j, long p) {
  if (j == 0) return {1, 0, 0, p};
  return {p, j, 0, 1};
}

}  // namespace thue
