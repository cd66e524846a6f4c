#include "thue/counting.hpp"

#include <set>
#include <stdexcept>

#include "thue/enumerate.hpp"

namespace thue {

std::string to_string(Completeness c) {
  switch (c) {
    case Completeness::BoxComplete: return "box_complete";
    case Completeness::FiberComplete: return "fiber_complete";
    case Completeness::Heuristic: break;
  }
  return "heuristic";
}

std::string to_string(Scheme s) { return s == Scheme::ThreeTier ? "three-tier" : "two-tier"; }

bool in_band(const mpz_class& value, const mpz_class& m, int n) {
  const mpz_class a = abs(value);
  if (a >= m) return false;
  mpz_class scaled;
  mpz_mul_2exp(scaled.get_mpz_t(), a.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  return scaled >= m;
}

CountsReport counts(const BinaryForm& f, const mpz_class& m, const std::vector<Solution>& sols, const Region& region) {
  CountsReport r;
  r.region = region;
  r.N = static_cast<long>(sols.size());
  for (const auto& s : sols) {
    if (!s.primitive) continue;
    ++r.P;
    ++r.pi[abs(s.value)];
    if (in_band(s.value, m, f.degree())) ++r.Ptilde;
  }
  return r;
}

void classify(std::vector<Solution>& sols, const Thresholds& th, Scheme scheme) {
  if (scheme == Scheme::TwoTier) {
    classify_two_tier(sols, th.Y_0);
    return;
  }
  for (auto& s : sols) {
    if (LogReal::from_integer(large_size(s.x, s.y)) > th.Y_L) {
      s.size_class = SizeClass::Large;
    } else if (LogReal::from_integer(small_size(s.x, s.y)) <= th.Y_S) {
      s.size_class = SizeClass::Small;
    } else {
      s.size_class = SizeClass::Medium;
    }
  }
}

void classify_two_tier(std::vector<Solution>& sols, const LogReal& y0) {
  for (auto& s : sols)
    s.size_class = LogReal::from_integer(abs(s.y)) <= y0 ? SizeClass::Small : SizeClass::Large;
}

mpz_class multiples_count(const mpz_class& m, const mpz_class& k, int n) {
  if (k == 0) throw std::domain_error("multiples of a zero value");
  mpz_class q;
  const mpz_class ak = abs(k);
  mpz_fdiv_q(q.get_mpz_t(), m.get_mpz_t(), ak.get_mpz_t());
  if (q <= 0) return 0;
  mpz_class d;
  mpz_root(d.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(n));
  return d;
}

TelescopingCheck telescoping_check(const BinaryForm& f, const mpz_class& m, const std::vector<Solution>& box_sols,
                                   const mpz_class& box) {
  const int n = f.degree();
  TelescopingCheck r;
  std::set<std::pair<mpz_class, mpz_class>> used;
  mpz_class sum = 0;
  for (const auto& s : box_sols) {
    if (!s.primitive) continue;
    const mpz_class d = multiples_count(m, s.value, n);
    if (d * large_size(s.x, s.y) <= box) {
      ++r.primitives_used;
      sum += d;
      used.emplace(s.x, s.y);
    } else {
      ++r.primitives_skipped;
    }
  }
  for (const auto& s : box_sols) {
    const mpz_class g = gcd(s.x, s.y);
    if (used.count({s.x / g, s.y / g})) ++r.n_closed;
  }
  r.weighted_sum = sum.get_si();
  r.holds = sum == r.n_closed;
  return r;
}

DyadicCheck dyadic_check(const BinaryForm& f, int u, const mpz_class& box) {
  const int n = f.degree();
  mpz_class top;
  mpz_ui_pow_ui(top.get_mpz_t(), 2, static_cast<unsigned long>(n) * static_cast<unsigned long>(u + 1));
  return dyadic_check(f, u, brute_force(f, top - 1, box));
}

DyadicCheck dyadic_check(const BinaryForm& f, int u, const std::vector<Solution>& top_sols) {
  const int n = f.degree();
  DyadicCheck r;
  r.u = u;
  mpz_ui_pow_ui(r.m_top.get_mpz_t(), 2, static_cast<unsigned long>(n) * static_cast<unsigned long>(u + 1));
  r.m_top -= 1;
  std::vector<mpz_class> prim_values;
  for (const auto& s : top_sols) {
    if (!s.primitive || abs(s.value) > r.m_top || s.value == 0) continue;
    ++r.p_top;
    prim_values.push_back(abs(s.value));
  }
  for (int j = 1; j <= u + 1; ++j) {
    mpz_class mj;
    mpz_ui_pow_ui(mj.get_mpz_t(), 2, static_cast<unsigned long>(n) * static_cast<unsigned long>(j));
    long c = 0;
    for (const auto& v : prim_values)
      if (in_band(v, mj, n)) ++c;
    r.band_counts.push_back(c);
    r.band_sum += c;
  }
  r.identity_holds = r.band_sum == r.p_top;

  // P(F, m) only changes at attained values, so those and the left end suffice.
  mpz_class low;
  mpz_ui_pow_ui(low.get_mpz_t(), 2, static_cast<unsigned long>(n) * static_cast<unsigned long>(u));
  std::set<mpz_class> steps{low};
  for (const auto& v : prim_values)
    if (v >= low) steps.insert(v);
  r.monotone_bound_holds = true;
  for (const auto& mm : steps) {
    long p = 0;
    for (const auto& v : prim_values)
      if (v <= mm) ++p;
    ++r.step_points_checked;
    if (p > r.band_sum) r.monotone_bound_holds = false;
  }
  return r;
}

PartitionCheck partition_check(const BinaryForm& f, const mpz_class& m, const std::vector<Solution>& box_sols, long p,
                               const mpz_class& box) {
  const int n = f.degree();
  PartitionCheck r;
  r.p = p;
  r.per_index.assign(static_cast<std::size_t>(p + 1), 0);
  std::vector<long> band_per_index(static_cast<std::size_t>(p + 1), 0);
  std::vector<BinaryForm> sub(static_cast<std::size_t>(p + 1));
  for (long j = 0; j <= p; ++j) sub[static_cast<std::size_t>(j)] = apply_matrix(f, sublattice_matrix(j, p));

  for (const auto& s : box_sols) {
    if (!s.primitive) continue;
    ++r.original_count;
    if (in_band(s.value, m, n)) ++r.original_band_count;
    const PointDecomposition d = decompose_point(s.x, s.y, p);
    const auto jj = static_cast<std::size_t>(d.j);
    if (eval_form(sub[jj], d.u, d.v) != s.value) r.values_preserved = false;
    // No other sublattice may contain a primitive point.
    int hits = 0;
    for (long j = 0; j <= p; ++j) {
      const Mat2 a = sublattice_matrix(j, p);
      // A = [[a, b], [0, d]] upper triangular: solve directly.
      if (s.y % a.d != 0) continue;
      const mpz_class v = s.y / a.d;
      const mpz_class rem = s.x - a.b * v;
      if (rem % a.a == 0) ++hits;
    }
    if (hits != 1) r.indices_unique = false;
    ++r.per_index[jj];
    if (in_band(s.value, m, n)) ++band_per_index[jj];
  }
  for (long j = 0; j <= p; ++j) {
    r.transported_total += r.per_index[static_cast<std::size_t>(j)];
    r.transported_band_total += band_per_index[static_cast<std::size_t>(j)];
  }

  // Reverse direction: enumerate canonical (u, v) with A_j (u, v) in the box.
  for (long j = 0; j <= p && r.reverse_enumeration_agrees; ++j) {
    const Mat2 a = sublattice_matrix(j, p);
    const BinaryForm& g = sub[static_cast<std::size_t>(j)];
    long c = 0;
    mpz_class vmax;
    mpz_fdiv_q(vmax.get_mpz_t(), box.get_mpz_t(), a.d.get_mpz_t());
    for (mpz_class v = 0; v <= vmax; ++v) {
      // |a.a u + a.b v| <= box.
      mpz_class ulo, uhi, t1 = -box - a.b * v, t2 = box - a.b * v;
      mpz_cdiv_q(ulo.get_mpz_t(), t1.get_mpz_t(), a.a.get_mpz_t());
      mpz_fdiv_q(uhi.get_mpz_t(), t2.get_mpz_t(), a.a.get_mpz_t());
      if (v == 0 && ulo < 1) ulo = 1;
      for (mpz_class uu = ulo; uu <= uhi; ++uu) {
        const mpz_class x = a.a * uu + a.b * v, y = a.d * v;
        if (!is_primitive(x, y)) continue;
        const mpz_class val = eval_form(g, uu, v);
        if (val != 0 && abs(val) <= m) ++c;
      }
    }
    if (c != r.per_index[static_cast<std::size_t>(j)]) r.reverse_enumeration_agrees = false;
  }
  r.holds = r.values_preserved && r.indices_unique && r.reverse_enumeration_agrees &&
            r.transported_total == r.original_count && r.transported_band_total == r.original_band_count;
  return r;
}

bool transport_check(const BinaryForm& f, const Mat2& a, const std::vector<Solution>& sols) {
  const mpz_class det = a.det();
  if (det != 1 && det != -1) throw std::domain_error("transport needs a unimodular matrix");
  const BinaryForm fa = apply_matrix(f, a);
  for (const auto& s : sols) {
    // A^-1 = det * [[d, -b], [-c, a]].
    const mpz_class u = det * (a.d * s.x - a.b * s.y);
    const mpz_class v = det * (-a.c * s.x + a.a * s.y);
    if (eval_form(fa, u, v) != s.value) return false;
  }
  return true;
}

}  // namespace thue
