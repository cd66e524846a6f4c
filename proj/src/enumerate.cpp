#include "thue/enumerate.hpp"

#include <algorithm>
#include <set>

#include "thue/sturm.hpp"

namespace thue {

std::vector<Solution> brute_force(const BinaryForm& f, const mpz_class& m, const mpz_class& b) {
  std::vector<Solution> out;
  for (mpz_class y = 0; y <= b; ++y) {
    for (mpz_class x = (y == 0 ? mpz_class(1) : mpz_class(-b)); x <= b; ++x) {
      mpz_class v = eval_form(f, x, y);
      if (v != 0 && abs(v) <= m) {
        Solution s;
        s.x = x;
        s.y = y;
        s.value = std::move(v);
        s.primitive = is_primitive(x, y);
        s.source = Source::BruteForce;
        out.push_back(std::move(s));
      }
    }
  }
  return out;
}

namespace {

using ZPoly = std::vector<mpz_class>;

mpz_class eval(const ZPoly& p, const mpz_class& x) {
  mpz_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int degree(const ZPoly& p) {
  int d = static_cast<int>(p.size()) - 1;
  while (d >= 0 && p[static_cast<std::size_t>(d)] == 0) --d;
  return d;
}

// All integers t with 1 <= |g(t)| <= m; g must have degree >= 1.
void solve_line(const ZPoly& g, const mpz_class& m, std::vector<std::pair<mpz_class, mpz_class>>& out) {
  std::set<mpz_class> ends;
  ZPoly lo = g, hi = g;
  lo[0] -= m;
  hi[0] += m;
  for (const ZPoly* p : {&g, static_cast<const ZPoly*>(&lo), static_cast<const ZPoly*>(&hi)}) {
    for (const auto& cell : SturmChain(*p).integer_cells()) ends.insert(cell.first);
  }
  auto ok = [&](const mpz_class& v) { return v != 0 && abs(v) <= m; };
  const std::vector<mpz_class> e(ends.begin(), ends.end());
  for (std::size_t i = 0; i < e.size(); ++i) {
    mpz_class v = eval(g, e[i]);
    if (ok(v)) out.emplace_back(e[i], std::move(v));
    if (i + 1 == e.size()) break;
    const mpz_class first = e[i] + 1, last = e[i + 1] - 1;
    if (first > last) continue;
    // No root of g, g - m, g + m in (e_i, e_{i+1} - 1]: one sample decides the run.
    if (!ok(eval(g, first))) continue;
    for (mpz_class t = first; t <= last; ++t) out.emplace_back(t, eval(g, t));
  }
}

// Coefficients of t -> F(t, c) (x-fiber=false) or t -> F(c, t) (true), low to high.
ZPoly restrict_form(const BinaryForm& f, const mpz_class& c, bool fix_x) {
  const int n = f.degree();
  ZPoly p(static_cast<std::size_t>(n + 1), mpz_class(0));
  for (const auto& [i, a] : f.terms()) {
    mpz_class cp;
    if (fix_x) {
      // a x^i y^(n-i): power of y is n - i.
      mpz_pow_ui(cp.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(i));
      p[static_cast<std::size_t>(n - i)] += a * cp;
    } else {
      mpz_pow_ui(cp.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(n - i));
      p[static_cast<std::size_t>(i)] += a * cp;
    }
  }
  return p;
}

void fiber(const BinaryForm& f, const mpz_class& m, const mpz_class& c, bool fix_x, std::vector<Solution>& out) {
  const ZPoly g = restrict_form(f, c, fix_x);
  std::vector<std::pair<mpz_class, mpz_class>> hits;
  if (degree(g) < 1) {
    const mpz_class v = g.empty() ? mpz_class(0) : g[0];
    if (v != 0 && abs(v) <= m)
      throw InfiniteFiber("fiber " + std::string(fix_x ? "x = " : "y = ") + c.get_str() + " has infinitely many solutions");
    return;
  }
  solve_line(g, m, hits);
  for (auto& [t, v] : hits) {
    if (c == 0 && t <= 0) continue;  // the other half of the axis holds the same classes
    out.push_back(make_solution(f, fix_x ? c : t, fix_x ? t : c, Source::Fiber));
  }
}

}  // namespace

std::vector<Solution> fiber_enumerate(const BinaryForm& f, const mpz_class& m, const mpz_class& cap, FiberAxis axis) {
  std::vector<Solution> out;
  for (mpz_class c = 0; c <= cap; ++c) fiber(f, m, c, axis == FiberAxis::X, out);
  sort_and_dedup(out);
  return out;
}

std::vector<Solution> fiber_enumerate_both(const BinaryForm& f, const mpz_class& m, const mpz_class& cap) {
  std::vector<Solution> out = fiber_enumerate(f, m, cap, FiberAxis::Y);
  std::vector<Solution> xs = fiber_enumerate(f, m, cap, FiberAxis::X);
  out.insert(out.end(), xs.begin(), xs.end());
  sort_and_dedup(out);
  return out;
}

std::vector<mpz_class> continued_fraction(mpq_class q) {
  std::vector<mpz_class> out;
  for (;;) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    out.push_back(a);
    q -= a;
    if (q == 0) break;
    q = 1 / q;
  }
  return out;
}

std::vector<mpz_class> common_cf_prefix(const mpq_class& lo, const mpq_class& hi) {
  const auto a = continued_fraction(lo), b = continued_fraction(hi);
  std::vector<mpz_class> out;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()) && a[i] == b[i]; ++i) out.push_back(a[i]);
  if (lo != hi && !out.empty()) out.pop_back();
  return out;
}

namespace {

std::vector<std::vector<mpz_class>> root_expansions(const UniPoly& chart, int depth) {
  std::vector<std::vector<mpz_class>> out;
  if (chart.degree() < 1) return out;
  const SturmChain chain(chart.primitive_integer());
  for (RootInterval iv : chain.isolate_real_roots()) {
    std::vector<mpz_class> cf;
    mpq_class width(1, 1 << 16);
    for (int round = 0; round < 9; ++round) {
      chain.refine(iv, width);
      cf = iv.exact ? continued_fraction(iv.lo) : common_cf_prefix(iv.lo, iv.hi);
      if (iv.exact || static_cast<int>(cf.size()) > depth) break;
      width *= width;
    }
    if (static_cast<int>(cf.size()) > depth + 1) cf.resize(static_cast<std::size_t>(depth + 1));
    out.push_back(std::move(cf));
  }
  return out;
}

}  // namespace

std::vector<Solution> cf_candidates(const BinaryForm& f, const mpz_class& m, int depth) {
  std::vector<Solution> out;
  auto test = [&](const mpz_class& x, const mpz_class& y) {
    if (x == 0 && y == 0) return;
    Solution s = make_solution(f, x, y, Source::ContinuedFraction);
    if (s.value != 0 && abs(s.value) <= m) out.push_back(std::move(s));
  };
  for (int chart = 0; chart < 2; ++chart) {
    const UniPoly poly = chart == 0 ? f.x_chart() : f.y_chart();
    for (const auto& cf : root_expansions(poly, depth)) {
      // p_k / q_k by the standard recurrence.
      mpz_class p0 = 1, q0 = 0, p1 = 0, q1 = 1;
      for (const auto& a : cf) {
        mpz_class p = a * p0 + p1, q = a * q0 + q1;
        p1 = p0;
        q1 = q0;
        p0 = p;
        q0 = q;
        for (int j = -1; j <= 1; ++j) {
          if (chart == 0) {
            test(p + j, q);
          } else {
            test(q, p + j);
          }
        }
      }
    }
  }
  sort_and_dedup(out);
  return out;
}

}  // namespace thue
