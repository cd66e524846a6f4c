#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "thue/constants.hpp"
#include "thue/counting.hpp"
#include "thue/enumerate.hpp"
#include "thue/measure.hpp"

using namespace thue;

namespace {

BinaryForm cubic() { return make_form({{3, 1}, {0, -2}}, 3); }

std::set<std::pair<long, long>> points(const std::vector<Solution>& v) {
  std::set<std::pair<long, long>> out;
  for (const auto& s : v) out.emplace(s.x.get_si(), s.y.get_si());
  return out;
}

}  // namespace

TEST_CASE("canonical representatives and primitivity") {
  CHECK(canonical(-3, -4) == std::make_pair(mpz_class(3), mpz_class(4)));
  CHECK(canonical(-3, 0) == std::make_pair(mpz_class(3), mpz_class(0)));
  CHECK(canonical(3, -1) == std::make_pair(mpz_class(-3), mpz_class(1)));
  CHECK(is_primitive(1, 0));
  CHECK_FALSE(is_primitive(2, 0));
  CHECK(is_primitive(-1, 1));
  CHECK_FALSE(is_primitive(2, 2));
  CHECK(small_size(-7, 3) == 3);
  CHECK(large_size(-7, 3) == 7);
}

TEST_CASE("worked instance: x^3 - 2y^3, m = 10, box 100") {
  const std::set<std::pair<long, long>> expected{{1, 0}, {2, 0}, {0, 1}, {1, 1}, {-1, 1},
                                                 {2, 1}, {-2, 1}, {2, 2}, {4, 3}, {5, 4}};
  CHECK(oracle::scan({-2, 0, 0, 1}, 10, 100) == expected);
  const auto sols = brute_force(cubic(), 10, 100);
  CHECK(points(sols) == expected);
  for (const auto& s : sols) CHECK(s.value == eval_form(cubic(), s.x, s.y));

  const CountsReport c = counts(cubic(), 10, sols, {Completeness::BoxComplete, 100});
  CHECK(c.N == 10);
  CHECK(c.P == 8);
  // pi: |F| = 1: (1,0),(1,1); 2: (0,1); 3: (-1,1),(5,4); 6: (2,1); 10: (-2,1),(4,3).
  CHECK(c.pi.at(1) == 2);
  CHECK(c.pi.at(2) == 1);
  CHECK(c.pi.at(3) == 2);
  CHECK(c.pi.at(6) == 1);
  CHECK(c.pi.at(10) == 2);
  long sum = 0;
  for (const auto& [k, cnt] : c.pi) sum += cnt * multiples_count(10, k, 3).get_si();
  CHECK(sum == 10);

  const auto one = brute_force(cubic(), 1, 100);
  CHECK(points(one) == std::set<std::pair<long, long>>{{1, 0}, {1, 1}});
  CHECK(counts(cubic(), 1, one, {Completeness::BoxComplete, 100}).Ptilde == 0);
  // Box 0: only axis unit points can appear.
  CHECK(brute_force(cubic(), 10, 0).empty());
}

TEST_CASE("multiples_count is exact") {
  CHECK(multiples_count(10, 1, 3) == 2);
  CHECK(multiples_count(8, 1, 3) == 2);
  CHECK(multiples_count(7, 1, 3) == 1);
  CHECK(multiples_count(10, 3, 3) == 1);
  CHECK(multiples_count(mpz_class("1000000000000000000000000000000"), 1, 3) == mpz_class("10000000000"));
}

TEST_CASE("fiber enumeration") {
  const auto fib = fiber_enumerate(cubic(), 10, 5, FiberAxis::Y);
  const auto pts = points(fib);
  CHECK(pts.count({4, 3}) == 1);
  CHECK(pts.count({5, 4}) == 1);
  // y = 0 fiber: |x^3| <= 10.
  const auto zero = points(fiber_enumerate(cubic(), 10, 0, FiberAxis::Y));
  CHECK(zero == std::set<std::pair<long, long>>{{1, 0}, {2, 0}});
  // F = x^3 is constant in y on the fiber x = 1.
  CHECK_THROWS_AS(fiber_enumerate(make_form({{3, 1}}, 3), 10, 2, FiberAxis::X), InfiniteFiber);
}

TEST_CASE("fiber enumeration agrees with brute force on random forms") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> coef(-30, 30);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + trial % 4;
    std::vector<long> c(static_cast<std::size_t>(n + 1), 0);
    std::vector<BinaryForm::Term> t;
    for (int i = 0; i <= n; ++i) {
      if (i != 0 && i != n && trial % 2 == 0) continue;  // binomial on even trials
      long v = coef(rng);
      if (v == 0) v = 3;
      c[static_cast<std::size_t>(i)] = v;
      t.emplace_back(i, v);
    }
    const BinaryForm f = make_form(t, n);
    for (long m : {1L, 10L, 100L}) {
      const long box = 40, cap = 6;
      const auto brute = oracle::scan(c, m, box);
      std::set<std::pair<long, long>> brute_in_range;
      for (const auto& p : brute)
        if (std::min(std::labs(p.first), std::labs(p.second)) <= cap) brute_in_range.insert(p);
      std::set<std::pair<long, long>> fib_in_box;
      for (const auto& p : points(fiber_enumerate_both(f, m, cap)))
        if (std::labs(p.first) <= box && std::labs(p.second) <= box) fib_in_box.insert(p);
      CHECK(fib_in_box == brute_in_range);
      CHECK(points(brute_force(f, m, box)) == brute);
    }
  }
}

TEST_CASE("continued fractions") {
  CHECK(continued_fraction(mpq_class(415, 93)) == std::vector<mpz_class>{4, 2, 6, 7});
  CHECK(continued_fraction(mpq_class(-7, 2)) == std::vector<mpz_class>{-4, 2});
  // 2^(1/3) = [1; 3, 1, 5, 1, 1, ...]: bracket with 1.2599210 < 2^(1/3) < 1.2599211.
  const auto pre = common_cf_prefix(mpq_class(12599210, 10000000), mpq_class(12599211, 10000000));
  REQUIRE(pre.size() >= 4);
  CHECK(pre[0] == 1);
  CHECK(pre[1] == 3);
  CHECK(pre[2] == 1);
  CHECK(pre[3] == 5);

  const auto cf = points(cf_candidates(cubic(), 10, 6));
  CHECK(cf.count({4, 3}) == 1);
  CHECK(cf.count({5, 4}) == 1);
  for (const auto& s : cf_candidates(cubic(), 10, 6)) CHECK(s.source == Source::ContinuedFraction);
  // x^2 + y^2 has no real roots in either chart; m = 0 excludes every value.
  CHECK(cf_candidates(make_form({{2, 1}, {0, 1}}, 2), 0, 6).empty());
}

TEST_CASE("sort_and_dedup keeps the earliest source") {
  std::vector<Solution> v{make_solution(cubic(), 5, 4, Source::ContinuedFraction),
                          make_solution(cubic(), -5, -4, Source::Fiber), make_solution(cubic(), 1, 0, Source::Fiber)};
  sort_and_dedup(v);
  REQUIRE(v.size() == 2);
  CHECK(v[0].x == 1);
  CHECK(v[1].source == Source::Fiber);
  CHECK(v[1].x == 5);
}

TEST_CASE("telescoping identity") {
  const auto sols = brute_force(cubic(), 10, 100);
  const TelescopingCheck t = telescoping_check(cubic(), 10, sols, 100);
  CHECK(t.holds);
  CHECK(t.n_closed == 10);
  CHECK(t.weighted_sum == 10);

  const BinaryForm f = make_form({{4, 3}, {1, -5}, {0, 2}}, 4);
  for (long m : {1L, 50L, 1000L}) {
    const auto s = brute_force(f, m, 60);
    CHECK(telescoping_check(f, m, s, 60).holds);
  }
}

TEST_CASE("dyadic identity") {
  for (int u : {0, 1, 2}) {
    const DyadicCheck d = dyadic_check(cubic(), u, 100);
    CHECK(d.identity_holds);
    CHECK(d.monotone_bound_holds);
    CHECK(d.band_counts.size() == static_cast<std::size_t>(u + 1));
    CHECK(d.p_top == d.band_sum);
  }
  // Empty set: 0 = 0.
  const DyadicCheck e = dyadic_check(cubic(), 1, std::vector<Solution>{});
  CHECK(e.identity_holds);
  CHECK(e.band_sum == 0);
}

TEST_CASE("sublattice partition") {
  const BinaryForm f = make_form({{3, 1}, {1, 4}, {0, -3}}, 3);
  for (long p : {3L, 5L, 7L}) {
    const auto sols = brute_force(cubic(), 100, 60);
    const PartitionCheck c = partition_check(cubic(), 100, sols, p, 60);
    CHECK(c.holds);
    CHECK(c.per_index.size() == static_cast<std::size_t>(p + 1));
    CHECK(c.transported_total == c.original_count);
    CHECK(c.transported_band_total == c.original_band_count);
    CHECK(c.reverse_enumeration_agrees);
    const PartitionCheck g = partition_check(f, 50, brute_force(f, 50, 60), p, 60);
    CHECK(g.holds);
  }
}

TEST_CASE("GL2 transport") {
  const auto sols = brute_force(cubic(), 10, 100);
  CHECK(transport_check(cubic(), {2, 1, 1, 1}, sols));
  CHECK(transport_check(cubic(), {1, -3, 0, 1}, sols));
  CHECK(transport_check(cubic(), {0, 1, 1, 0}, sols));
}

TEST_CASE("classification") {
  const Thresholds th = thresholds(cubic(), 10, mahler_measure(cubic()));
  std::vector<Solution> v{make_solution(cubic(), 5, 4, Source::BruteForce)};
  classify_two_tier(v, y_zero(Real(2L, 128), 1));
  CHECK(v[0].size_class == SizeClass::Small);
  v.push_back(make_solution(cubic(), 1, 40, Source::BruteForce));
  classify_two_tier(v, y_zero(Real(2L, 128), 1));
  CHECK(v[1].size_class == SizeClass::Large);

  // Full-size thresholds: everything at desk scale is small.
  classify(v, th, Scheme::ThreeTier);
  for (const auto& s : v) CHECK(s.size_class == SizeClass::Small);

  // A point beyond Y_L is large.
  Thresholds tiny = th;
  tiny.Y_S = LogReal::from_integer(2);
  tiny.Y_L = LogReal::from_integer(mpz_class("1000000000000000000000000000000"));
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 40);
  std::vector<Solution> w{make_solution(cubic(), big, 3, Source::BruteForce),
                          make_solution(cubic(), 5, 4, Source::BruteForce),
                          make_solution(cubic(), 1, 1, Source::BruteForce)};
  classify(w, tiny, Scheme::ThreeTier);
  CHECK(w[0].size_class == SizeClass::Large);
  CHECK(w[1].size_class == SizeClass::Medium);
  CHECK(w[2].size_class == SizeClass::Small);
}
