#ifndef THUE_UNIPOLY_HPP
#define THUE_UNIPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace thue {

/// Dense univariate polynomial over Q, coefficients stored low to high.
/// The highest stored coefficient is nonzero unless the polynomial is zero
/// (then the coefficient list is empty).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<mpq_class> coeffs);
  static UniPoly from_integers(const std::vector<mpz_class>& coeffs);
  static UniPoly monomial(int degree, mpq_class c = 1);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  mpq_class coeff(int i) const;
  const mpq_class& leading() const;

  mpq_class operator()(const mpq_class& x) const;
  UniPoly derivative() const;

  /// Integer polynomial with the same roots: scaled by a positive rational
  /// so that the coefficients are coprime integers.
  std::vector<mpz_class> primitive_integer() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const mpq_class& k);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division; throws std::domain_error on a zero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;

  std::string to_string(const char* var = "x") const;

 private:
  void normalize();
  std::vector<mpq_class> c_;
};

/// Monic gcd (zero if both are zero).
UniPoly gcd(UniPoly a, UniPoly b);

/// True when gcd(f, f') is constant.
bool is_squarefree(const UniPoly& f);

/// f / gcd(f, f').
UniPoly squarefree_part(const UniPoly& f);

/// Determinant of an integer matrix by fraction-free (Bareiss) elimination.
mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m);

/// Resultant Res(f, g) = det Sylvester(f, g). Both inputs must be nonzero.
/// Denominators are cleared first so the elimination runs over Z.
mpq_class resultant(const UniPoly& f, const UniPoly& g);

}  // namespace thue

#endif  // THUE_UNIPOLY_HPP
