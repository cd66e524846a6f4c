#ifndef THUE_SOLUTION_HPP
#define THUE_SOLUTION_HPP

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "thue/form.hpp"

namespace thue {

enum class SizeClass { Small, Medium, Large, Unclassified };
enum class Source { BruteForce, Fiber, ContinuedFraction };

std::string to_string(SizeClass c);
std::string to_string(Source s);

/// One class {(x, y), (-x, -y)}, stored as the representative with y > 0,
/// or y = 0 and x > 0.
struct Solution {
  mpz_class x, y;
  mpz_class value;
  /// gcd(|x|, |y|) == 1, with gcd(z, 0) = |z|.
  bool primitive = false;
  SizeClass size_class = SizeClass::Unclassified;
  Source source = Source::BruteForce;
};

/// Canonical representative of (x, y) ~ (-x, -y).
std::pair<mpz_class, mpz_class> canonical(const mpz_class& x, const mpz_class& y);
bool is_primitive(const mpz_class& x, const mpz_class& y);
/// min(|x|, |y|).
mpz_class small_size(const mpz_class& x, const mpz_class& y);
/// max(|x|, |y|).
mpz_class large_size(const mpz_class& x, const mpz_class& y);

Solution make_solution(const BinaryForm& f, const mpz_class& x, const mpz_class& y, Source source);

/// Sort by (y, x) and drop duplicate points; on a tie the entry with the
/// earlier Source (BruteForce < Fiber < ContinuedFraction) is kept.
void sort_and_dedup(std::vector<Solution>& sols);

/// Keep solutions with |x|, |y| <= b.
std::vector<Solution> restrict_to_box(const std::vector<Solution>& sols, const mpz_class& b);
/// Keep solutions with min(|x|, |y|) <= cap.
std::vector<Solution> restrict_to_fiber_range(const std::vector<Solution>& sols, const mpz_class& cap);

/// Point sets equal (values and flags ignored).
bool same_points(const std::vector<Solution>& a, const std::vector<Solution>& b);

}  // namespace thue

#endif  // THUE_SOLUTION_HPP
