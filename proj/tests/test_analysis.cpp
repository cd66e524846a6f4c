#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "thue/ct_membership.hpp"
#include "thue/measure.hpp"
#include "thue/roots.hpp"
#include "thue/sturm.hpp"

using namespace thue;

namespace {

UniPoly zpoly(std::initializer_list<long> low_to_high) {
  std::vector<mpz_class> c;
  for (long v : low_to_high) c.emplace_back(v);
  return UniPoly::from_integers(c);
}

BinaryForm cubic() { return make_form({{3, 1}, {0, -2}}, 3); }

double d(const Real& r) { return r.to_double(); }

}  // namespace

TEST_CASE("find_roots: x^2 + 1") {
  const RootSet rs = find_roots(zpoly({1, 0, 1}));
  REQUIRE(rs.roots.size() == 2);
  CHECK(rs.real_count() == 0);
  const Real tiny = pow(Real(2L, 256), -100L);
  for (const auto& r : rs.roots) {
    CHECK(r.radius < tiny);
    CHECK(std::fabs(d(r.center.re)) < 1e-30);
    CHECK(std::fabs(std::fabs(d(r.center.im)) - 1.0) < 1e-30);
  }
}

TEST_CASE("find_roots: x^3 - 2") {
  const long double ref = oracle::bisect([](long double x) { return x * x * x - 2; }, 0, 2);
  CHECK(std::fabs(static_cast<double>(ref) - 1.259921049894873) < 1e-14);
  const RootSet rs = find_roots(zpoly({-2, 0, 0, 1}));
  REQUIRE(rs.roots.size() == 3);
  CHECK(rs.real_count() == 1);
  for (const auto& r : rs.roots) {
    if (r.is_real) {
      CHECK(std::fabs(d(r.center.re) - static_cast<double>(ref)) < 1e-15);
      CHECK(r.center.im.is_zero());
    } else {
      CHECK(std::fabs(d(r.center.abs()) - std::cbrt(2.0)) < 1e-15);
    }
  }
}

TEST_CASE("find_roots rejects repeated roots and the zero polynomial") {
  CHECK_THROWS_AS(find_roots(zpoly({1, -2, 1})), RootError);
  CHECK_THROWS_AS(find_roots(UniPoly()), RootError);
}

TEST_CASE("find_roots: clustered and large-coefficient inputs") {
  // (x - 1)(x - 1 - 10^-30 scale): roots 10^30 and 10^30 + 1 after scaling.
  mpz_class big("1000000000000000000000000000000");
  const UniPoly p = UniPoly::from_integers({big * (big + 1), -(2 * big + 1), 1});
  const RootSet rs = find_roots(p);
  CHECK(rs.real_count() == 2);
  // Wilkinson-like degree 12.
  UniPoly w = zpoly({1});
  for (long k = 1; k <= 12; ++k) w *= zpoly({-k, 1});
  const RootSet ws = find_roots(w);
  CHECK(ws.real_count() == 12);
  for (std::size_t i = 0; i < ws.roots.size(); ++i) {
    const double c = d(ws.roots[i].center.re);
    CHECK(std::fabs(c - std::round(c)) < 1e-20);
  }
}

TEST_CASE("Sturm counts") {
  CHECK(sturm_real_root_count(zpoly({-1, 0, 1}), mpq_class(-10), mpq_class(10)) == 2);
  CHECK(sturm_real_root_count(zpoly({-2, 0, 0, 1}), std::nullopt, std::nullopt) == 1);
  CHECK(sturm_real_root_count(zpoly({1, 0, 1}), std::nullopt, std::nullopt) == 0);
  CHECK(sturm_real_root_count(zpoly({-1, 0, 1}), mpq_class(0), mpq_class(10)) == 1);
  CHECK_THROWS_AS(sturm_real_root_count(zpoly({-1, 0, 1}), mpq_class(1), mpq_class(10)), std::domain_error);
  CHECK_THROWS_AS(sturm_real_root_count(UniPoly(), std::nullopt, std::nullopt), std::domain_error);
  // Repeated roots count once.
  CHECK(sturm_real_root_count(zpoly({1, -2, 1}), std::nullopt, std::nullopt) == 1);
}

TEST_CASE("Sturm count matches real roots from the root finder") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> c(-50, 50);
  for (int trial = 0; trial < 40; ++trial) {
    const int deg = 2 + trial % 8;
    std::vector<mpz_class> v;
    for (int i = 0; i <= deg; ++i) v.emplace_back(c(rng));
    if (v.back() == 0) v.back() = 1;
    UniPoly p = UniPoly::from_integers(v);
    if (!is_squarefree(p)) continue;
    const RootSet rs = find_roots(p);
    CHECK(static_cast<int>(rs.roots.size()) == deg);
    CHECK(rs.real_count() == sturm_real_root_count(p, std::nullopt, std::nullopt));
  }
}

TEST_CASE("Sturm integer cells and isolation") {
  SturmChain ch(std::vector<mpz_class>{-2, 0, 0, 1});
  auto cells = ch.integer_cells();
  REQUIRE(cells.size() == 1);
  CHECK(cells[0].first == 2);
  auto iv = ch.isolate_real_roots();
  REQUIRE(iv.size() == 1);
  ch.refine(iv[0], mpq_class(1, 1000000));
  CHECK(iv[0].lo < mpq_class(1259922, 1000000));
  CHECK(iv[0].hi > mpq_class(1259920, 1000000));
}

TEST_CASE("Mahler measure") {
  CHECK(std::fabs(static_cast<double>(oracle::mahler({-2, 0, 0, 1})) - 2.0) < 1e-12);
  const MeasureResult m1 = mahler_measure(cubic());
  CHECK(std::fabs(d(m1.value) - 2.0) < 1e-30);
  CHECK(m1.relative_error_bound < pow(Real(2L, 256), -40L));

  CHECK(std::fabs(static_cast<double>(oracle::mahler({2, 0, 0, 1})) - 2.0) < 1e-12);
  CHECK(std::fabs(d(mahler_measure(make_form({{3, 1}, {0, 2}}, 3)).value) - 2.0) < 1e-30);

  CHECK(d(mahler_measure(make_form({{0, 5}}, 3)).value) == 5.0);
  // x^2 y (x - 3y): the x and y powers contribute 1.
  CHECK(std::fabs(d(mahler_measure(make_form({{3, 1}, {2, -3}}, 4)).value) - 3.0) < 1e-30);

  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> c(-1000, 1000);
  for (int trial = 0; trial < 20; ++trial) {
    const int deg = 3 + trial % 5;
    std::vector<long double> ld;
    std::vector<BinaryForm::Term> t;
    for (int i = 0; i <= deg; ++i) {
      long v = c(rng);
      if ((i == 0 || i == deg) && v == 0) v = 7;
      ld.push_back(static_cast<long double>(v));
      t.emplace_back(i, v);
    }
    const BinaryForm f = make_form(t, deg);
    if (discriminant(f) == 0) continue;
    const double ref = static_cast<double>(oracle::mahler(ld));
    CHECK(std::fabs(d(mahler_measure(f).value) / ref - 1) < 1e-10);
  }
}

TEST_CASE("absolute height") {
  CHECK(std::fabs(d(absolute_height(make_form({{1, 1}, {0, -2}}, 1), 0).value) - std::sqrt(5.0)) < 1e-30);

  // Product oracle over the long-double roots of z^3 - 2.
  long double prod = 1;
  for (const auto& z : oracle::roots({-2, 0, 0, 1})) prod *= std::sqrt(1 + std::norm(z));
  const double ref = static_cast<double>(std::cbrt(prod));
  CHECK(std::fabs(ref - 1.6085404) < 1e-6);
  const MeasureResult h = absolute_height(cubic(), 0);
  CHECK(std::fabs(d(h.value) - ref) < 1e-12);
  CHECK(h.relative_error_bound < pow(Real(2L, 256), -40L));

  const MeasureResult h3 = absolute_height(make_form({{3, 3}, {0, -6}}, 3), 1);
  CHECK(std::fabs(d(h3.value) - d(h.value)) < 1e-30);
  CHECK_THROWS_AS(absolute_height(cubic(), 3), std::out_of_range);
}

TEST_CASE("Lewis-Mahler right-hand side") {
  // 2^2 * 3^1 * M^1 * |F| / (sqrt(108) * y^3) with M = 2.
  const double ref = 4.0 * 3.0 * 2.0 * 3.0 / (std::sqrt(108.0) * 64.0);
  CHECK(std::fabs(ref - 0.1083) < 1e-4);
  const LogReal rhs = lewis_mahler_rhs(cubic(), -3, 4);
  CHECK(std::fabs(rhs.to_double() - ref) < 1e-12);
  // The nearest root to 5/4 is 2^(1/3); the distance is below the bound.
  CHECK(std::fabs(std::cbrt(2.0) - 1.25) < ref);

  const LogReal at1 = lewis_mahler_rhs(cubic(), -1, 1);
  CHECK(std::fabs(at1.to_double() - 4.0 * 3.0 * 2.0 / std::sqrt(108.0)) < 1e-12);
  CHECK_THROWS_AS(lewis_mahler_rhs(cubic(), 1, 0), std::domain_error);
  CHECK_THROWS_AS(lewis_mahler_rhs(make_form({{2, 1}}, 3), 1, 1), std::domain_error);
}

TEST_CASE("directional derivative sampling") {
  // u 3x^2 - 6v y^2: at most 2 real zeros for every direction.
  CtReport r2 = ct_membership_sample(cubic(), 2, 200, 1);
  CHECK_FALSE(r2.witness.has_value());
  CHECK(r2.max_real_zeros_seen <= 2);
  CHECK(r2.directions_checked == 200);

  CtReport r0 = ct_membership_sample(cubic(), 0, 10, 1);
  CHECK(r0.witness.has_value());

  // x^n: F_y vanishes identically, so (0, 1) is degenerate.
  CtReport deg = ct_membership_sample(make_form({{4, 1}}, 4), 6, 4, 0);
  CHECK(deg.degenerate_direction);

  // Sparse forms with s + 1 terms stay within 4s - 2 on 1000 directions.
  const BinaryForm f = make_form({{7, 3}, {4, -11}, {0, 5}}, 7);
  CHECK_FALSE(ct_membership_sample(f, 6, 1000, 42).witness.has_value());

  // Axis directions come first and the sample is deterministic.
  auto dirs = sample_directions(5, 7);
  CHECK(dirs[0] == std::make_pair(mpz_class(1), mpz_class(0)));
  CHECK(dirs[1] == std::make_pair(mpz_class(0), mpz_class(1)));
  CHECK(dirs == sample_directions(5, 7));
}

TEST_CASE("real projective zeros") {
  CHECK(real_projective_zeros(make_form({{2, 3}}, 2)) == 1);   // 3x^2: only 0:1
  CHECK(real_projective_zeros(make_form({{0, -6}}, 2)) == 1);  // -6y^2: only 1:0
  CHECK(real_projective_zeros(make_form({{1, 1}}, 2)) == 2);   // xy
  CHECK(real_projective_zeros(BinaryForm::from_dense(2, {0, 0, 0})) == -1);
}
