#ifndef THUE_FORM_HPP
#define THUE_FORM_HPP

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "thue/unipoly.hpp"

namespace thue {

/// 2x2 integer matrix, row-major: [[a, b], [c, d]].
struct Mat2 {
  mpz_class a, b, c, d;

  mpz_class det() const { return a * d - b * c; }
  static Mat2 identity() { return {1, 0, 0, 1}; }
  friend Mat2 operator*(const Mat2& l, const Mat2& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// Integer binary form F(x, y) = sum_i a_i x^i y^(n-i), stored sparsely.
///
/// Forms built through make_form() have degree >= 1 and at least one
/// nonzero coefficient. Derived forms (partial derivatives) may be the zero
/// form or have degree 0; is_zero() tells them apart.
class BinaryForm {
 public:
  using Term = std::pair<int, mpz_class>;

  BinaryForm() = default;

  /// Build from a dense coefficient list a_0..a_n (index = power of x).
  /// No nonzero requirement; used for derived forms.
  static BinaryForm from_dense(int degree, const std::vector<mpz_class>& coeffs);

  int degree() const { return degree_; }
  /// Nonzero terms sorted by exponent of x.
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Number of nonzero coefficients minus one.
  int sparsity() const { return static_cast<int>(terms_.size()) - 1; }
  mpz_class coeff(int i) const;
  std::vector<mpz_class> dense() const;

  /// f(z) = F(z, 1).
  UniPoly x_chart() const;
  /// g(z) = F(1, z).
  UniPoly y_chart() const;

  std::string to_string() const;

  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

 private:
  friend BinaryForm make_form(const std::vector<Term>&, int);
  int degree_ = 0;
  std::vector<Term> terms_;
};

/// Throws std::invalid_argument on an out-of-range or duplicate exponent,
/// a nonpositive degree, or when every coefficient is zero.
BinaryForm make_form(const std::vector<BinaryForm::Term>& pairs, int degree);

mpz_class eval_form(const BinaryForm& f, const mpz_class& x, const mpz_class& y);

/// F_A(x, y) = F(ax + by, cx + dy). Throws std::domain_error if det A = 0.
BinaryForm apply_matrix(const BinaryForm& f, const Mat2& m);

/// (F_x, F_y), each of degree n - 1.
std::pair<BinaryForm, BinaryForm> partial_forms(const BinaryForm& f);

mpz_class height(const BinaryForm& f);
mpz_class content(const BinaryForm& f);
inline int sparsity(const BinaryForm& f) { return f.sparsity(); }

/// Exact discriminant, 0 when F has a repeated linear factor over C.
mpz_class discriminant(const BinaryForm& f);

/// The unimodular shear used by discriminant() to make a_n and a_0
/// nonzero. Identity when both are already nonzero.
Mat2 end_coefficient_shear(const BinaryForm& f);

/// True iff F has a linear factor over Q.
bool has_rational_linear_factor(const BinaryForm& f);

struct PointDecomposition {
  long j = 0;
  mpz_class u, v;
};

/// For prime p, returns j in {0..p} and (u, v) with A_j (u, v) = (x, y),
/// where A_0 = [[1, 0], [0, p]] and A_j = [[p, j], [0, 1]] for j >= 1.
PointDecomposition decompose_point(const mpz_class& x, const mpz_class& y, long p);

/// A_j from decompose_point().
Mat2 sublattice_matrix(long j, long p);

}  // namespace thue

#endif  // THUE_FORM_HPP
