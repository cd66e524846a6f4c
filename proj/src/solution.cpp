#include "thue/solution.hpp"

#include <algorithm>

namespace thue {

std::string to_string(SizeClass c) {
  switch (c) {
    case SizeClass::Small: return "small";
    case SizeClass::Medium: return "medium";
    case SizeClass::Large: return "large";
    case SizeClass::Unclassified: break;
  }
  return "unclassified";
}

std::string to_string(Source s) {
  switch (s) {
    case Source::BruteForce: return "brute_force";
    case Source::Fiber: return "fiber";
    case Source::ContinuedFraction: break;
  }
  return "continued_fraction";
}

std::pair<mpz_class, mpz_class> canonical(const mpz_class& x, const mpz_class& y) {
  if (y < 0 || (y == 0 && x < 0)) return {-x, -y};
  return {x, y};
}

bool is_primitive(const mpz_class& x, const mpz_class& y) { return gcd(x, y) == 1; }

mpz_class small_size(const mpz_class& x, const mpz_class& y) { return std::min(mpz_class(abs(x)), mpz_class(abs(y))); }
mpz_class large_size(const mpz_class& x, const mpz_class& y) { return std::max(mpz_class(abs(x)), mpz_class(abs(y))); }

Solution make_solution(const BinaryForm& f, const mpz_class& x, const mpz_class& y, Source source) {
  auto [cx, cy] = canonical(x, y);
  Solution s;
  s.value = eval_form(f, cx, cy);
  s.primitive = is_primitive(cx, cy);
  s.x = std::move(cx);
  s.y = std::move(cy);
  s.source = source;
  return s;
}

void sort_and_dedup(std::vector<Solution>& sols) {
  std::stable_sort(sols.begin(), sols.end(), [](const Solution& a, const Solution& b) {
    if (a.y != b.y) return a.y < b.y;
    if (a.x != b.x) return a.x < b.x;
    return static_cast<int>(a.source) < static_cast<int>(b.source);
  });
  sols.erase(std::unique(sols.begin(), sols.end(),
                         [](const Solution& a, const Solution& b) { return a.x == b.x && a.y == b.y; }),
             sols.end());
}

std::vector<Solution> restrict_to_box(const std::vector<Solution>& sols, const mpz_class& b) {
  std::vector<Solution> out;
  for (const auto& s : sols)
    if (abs(s.x) <= b && abs(s.y) <= b) out.push_back(s);
  return out;
}

std::vector<Solution> restrict_to_fiber_range(const std::vector<Solution>& sols, const mpz_class& cap) {
  std::vector<Solution> out;
  for (const auto& s : sols)
    if (small_size(s.x, s.y) <= cap) out.push_back(s);
  return out;
}

bool same_points(const std::vector<Solution>& a, const std::vector<Solution>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].x != b[i].x || a[i].y != b[i].y) return false;
  return true;
}

}  // namespace thue
