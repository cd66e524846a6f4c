#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "thue/form.hpp"
#include "thue/form_json.hpp"
#include "thue/unipoly.hpp"

using namespace thue;

namespace {

BinaryForm cubic() { return make_form({{3, 1}, {0, -2}}, 3); }

UniPoly zpoly(std::initializer_list<long> low_to_high) {
  std::vector<mpz_class> c;
  for (long v : low_to_high) c.emplace_back(v);
  return UniPoly::from_integers(c);
}

BinaryForm random_form(std::mt19937_64& rng, int n, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  std::vector<BinaryForm::Term> t;
  for (int i = 0; i <= n; ++i) {
    long c = d(rng);
    if (i == 0 || i == n) c = c == 0 ? 1 : c;
    t.emplace_back(i, c);
  }
  return make_form(t, n);
}

}  // namespace

TEST_CASE("make_form normalizes and validates") {
  const BinaryForm f = cubic();
  CHECK(f.degree() == 3);
  CHECK(f.sparsity() == 1);
  CHECK(f.coeff(3) == 1);
  CHECK(f.coeff(0) == -2);
  CHECK(f.coeff(1) == 0);

  const BinaryForm lin = make_form({{0, 5}}, 1);
  CHECK(lin.degree() == 1);
  CHECK(lin.coeff(1) == 0);

  CHECK_THROWS_AS(make_form({{4, 1}, {4, 2}}, 4), std::invalid_argument);
  CHECK_THROWS_AS(make_form({{5, 1}}, 4), std::invalid_argument);
  CHECK_THROWS_AS(make_form({{-1, 1}}, 4), std::invalid_argument);
  CHECK_THROWS_AS(make_form({{1, 0}, {2, 0}}, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_form({{0, 1}}, 0), std::invalid_argument);
}

TEST_CASE("eval_form") {
  const BinaryForm f = cubic();
  CHECK(eval_form(f, 1, 0) == 1);
  CHECK(eval_form(f, 1, 1) == -1);
  // Oracle: 5^3 - 2 * 4^3.
  const long direct = 5 * 5 * 5 - 2 * 4 * 4 * 4;
  CHECK(direct == -3);
  CHECK(eval_form(f, 5, 4) == -3);
}

TEST_CASE("apply_matrix") {
  const BinaryForm f = cubic();
  CHECK(apply_matrix(f, Mat2::identity()) == f);
  const BinaryForm sheared = apply_matrix(f, {1, 1, 0, 1});
  CHECK(sheared == make_form({{3, 1}, {2, 3}, {1, 3}, {0, -1}}, 3));
  CHECK_THROWS_AS(apply_matrix(f, {1, 2, 2, 4}), std::domain_error);

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> small(-9, 9);
  const BinaryForm g = make_form({{5, 3}, {2, -7}, {0, 4}}, 5);
  const Mat2 a{2, 1, 1, 1};  // det 1
  const BinaryForm ga = apply_matrix(g, a);
  for (int k = 0; k < 100; ++k) {
    const mpz_class u = small(rng), v = small(rng);
    CHECK(eval_form(ga, u, v) == eval_form(g, a.a * u + a.b * v, a.c * u + a.d * v));
  }
  const Mat2 b{1, -3, 2, -5};
  CHECK(apply_matrix(apply_matrix(g, a), b) == apply_matrix(g, a * b));
}

TEST_CASE("partial_forms") {
  auto [fx, fy] = partial_forms(cubic());
  CHECK(fx == make_form({{2, 3}}, 2));
  CHECK(fy == make_form({{0, -6}}, 2));

  auto [px, py] = partial_forms(make_form({{4, 1}}, 4));
  CHECK(px == make_form({{3, 4}}, 3));
  CHECK(py.is_zero());
  CHECK(py.degree() == 3);

  auto [qx, qy] = partial_forms(make_form({{1, 1}}, 3));  // x y^2
  CHECK(qx == make_form({{0, 1}}, 2));
  CHECK(qy == make_form({{1, 2}}, 2));
}

TEST_CASE("resultant against cofactor expansion") {
  CHECK(resultant(zpoly({-1, 1}), zpoly({1, 1})) == 2);
  CHECK(resultant(zpoly({-1, 0, 1}), zpoly({-1, 1})) == 0);

  // x^3 - 2 and 3x^2: 5x5 Sylvester determinant.
  const mpz_class ref = oracle::cofactor_det(oracle::sylvester({1, 0, 0, -2}, {3, 0, 0}));
  CHECK(ref == 108);
  CHECK(resultant(zpoly({-2, 0, 0, 1}), zpoly({0, 0, 3})) == 108);

  // Rational coefficients scale as lc^deg.
  UniPoly half(std::vector<mpq_class>{mpq_class(-1, 2), mpq_class(1, 1)});
  CHECK(resultant(half, zpoly({1, 1})) == mpq_class(3, 2));
  CHECK_THROWS(resultant(UniPoly(), zpoly({1, 1})));
}

TEST_CASE("discriminant against the root product") {
  // Numeric oracle: a_n^(2(n-1)) prod (g_i - g_j)^2 over roots of F(z, 1).
  const long double d1 = oracle::disc_product({-2, 0, 0, 1});
  CHECK(std::llround(d1) == -108);
  CHECK(discriminant(cubic()) == -108);

  const long double d2 = oracle::disc_product({0, 1, 0, 1});  // z^3 + z
  CHECK(std::llround(d2) == -4);
  CHECK(discriminant(make_form({{3, 1}, {1, 1}}, 3)) == -4);

  CHECK(discriminant(make_form({{2, 1}}, 3)) == 0);  // x^2 y
  CHECK(discriminant(make_form({{2, 1}, {0, -1}}, 2)) == 4);

  // Degree drop: 5x^2 y + y^3 has a root at infinity.
  const BinaryForm inf = make_form({{2, 5}, {0, 1}}, 3);
  CHECK(end_coefficient_shear(inf).det() == 1);
  // D(y (5x^2 + y^2)) = D(5x^2 + y^2) * Res(y, 5x^2 + y^2)^2 = -20 * 25.
  CHECK(discriminant(inf) == -500);
}

TEST_CASE("discriminant transforms by det^(n(n-1))") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> e(-3, 3);
  for (int n = 2; n <= 5; ++n) {
    const BinaryForm f = random_form(rng, n, 20);
    const mpz_class d = discriminant(f);
    int found = 0;
    while (found < 10) {
      const Mat2 a{e(rng), e(rng), e(rng), e(rng)};
      const mpz_class det = a.det();
      if (det == 0 || abs(det) > 5) continue;
      ++found;
      mpz_class scale;
      mpz_pow_ui(scale.get_mpz_t(), det.get_mpz_t(), static_cast<unsigned long>(n * (n - 1)));
      CHECK(discriminant(apply_matrix(f, a)) == scale * d);
    }
  }
}

TEST_CASE("height, content, sparsity") {
  const BinaryForm f = cubic();
  CHECK(height(f) == 2);
  CHECK(content(f) == 1);
  CHECK(sparsity(f) == 1);
  const BinaryForm g = make_form({{2, 6}, {0, 9}}, 2);
  CHECK(height(g) == 9);
  CHECK(content(g) == 3);
  CHECK(sparsity(g) == 1);
  const BinaryForm h = make_form({{5, 1}, {3, 1}, {0, -7}}, 5);
  CHECK(height(h) == 7);
  CHECK(sparsity(h) == 2);
}

TEST_CASE("rational linear factors") {
  // Rational-root oracle for x^3 - 2: candidates +-1, +-2 all fail.
  for (long r : {1L, -1L, 2L, -2L}) CHECK(r * r * r - 2 != 0);
  CHECK_FALSE(has_rational_linear_factor(cubic()));
  CHECK(has_rational_linear_factor(make_form({{2, 1}, {0, -1}}, 2)));
  CHECK(has_rational_linear_factor(make_form({{2, 1}, {0, 1}}, 3)));  // x^2 y + y^3
  CHECK(has_rational_linear_factor(make_form({{3, 1}, {1, 1}}, 3)));  // x | F
  CHECK(has_rational_linear_factor(make_form({{3, 6}, {2, -1}, {1, 1}, {0, -1}}, 3)));  // (2x - y)(3x^2 + xy + y^2)
  CHECK_FALSE(has_rational_linear_factor(make_form({{2, 1}, {0, 1}}, 2)));
}

TEST_CASE("decompose_point") {
  auto d = decompose_point(2, 1, 3);
  CHECK(d.j == 2);
  CHECK(d.u == 0);
  CHECK(d.v == 1);
  d = decompose_point(4, 6, 3);
  CHECK(d.j == 0);
  CHECK(d.u == 4);
  CHECK(d.v == 2);
  d = decompose_point(7, 5, 3);
  // 5^-1 = 2 mod 3, so j = 7 * 2 mod 3 = 2.
  CHECK(d.j == 2);
  CHECK(d.u == -1);
  CHECK(d.v == 5);
  for (long x = -20; x <= 20; ++x) {
    for (long y = -20; y <= 20; ++y) {
      for (long p : {3L, 5L, 7L}) {
        const auto r = decompose_point(x, y, p);
        const Mat2 a = sublattice_matrix(r.j, p);
        CHECK(a.a * r.u + a.b * r.v == x);
        CHECK(a.c * r.u + a.d * r.v == y);
      }
    }
  }
}

TEST_CASE("form JSON round trip and diagnostics") {
  const BinaryForm f = make_form({{3, mpz_class("123456789012345678901234567890")}, {0, -2}}, 3);
  CHECK(parse_form(form_to_json(f).dump()) == f);
  CHECK_THROWS_WITH_AS(parse_form("{\"degree\": 3, \"coeffs\": [[3, 1]]}"), doctest::Contains("coeffs[0][1]"),
                       FormParseError);
  CHECK_THROWS_WITH_AS(parse_form("{\"degree\": 3,\n \"coeffs\": [[3, \"1\"],]}"), doctest::Contains("line 2"),
                       FormParseError);
  CHECK_THROWS_AS(parse_form("{\"degree\": 3, \"coeffs\": [[3, \"1\"], [3, \"2\"]]}"), FormParseError);
  CHECK_THROWS_AS(parse_form("{\"degree\": 3, \"coeffs\": [[7, \"1\"]]}"), FormParseError);
}
