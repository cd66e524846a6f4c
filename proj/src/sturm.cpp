#include "thue/sturm.hpp"

#include <stdexcept>

namespace thue {

namespace {

using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(ZPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) g = gcd(g, c);
  if (g > 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

ZPoly derivative(const ZPoly& p) {
  if (p.size() <= 1) return {};
  ZPoly d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<long>(i);
  return d;
}

// Positive multiple of rem(a, b).
ZPoly scaled_remainder(ZPoly r, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lc = b.back();
  const mpz_class alc = abs(lc);
  const int slc = sgn(lc);
  while (!r.empty() && r.size() - 1 >= db) {
    const std::size_t k = r.size() - 1 - db;
    const mpz_class q = r.back() * slc;
    for (auto& c : r) c *= alc;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] -= q * b[j];
    trim(r);
  }
  return r;
}

std::vector<ZPoly> build_chain(const ZPoly& p) {
  std::vector<ZPoly> chain{p};
  ZPoly d = derivative(p);
  trim(d);
  if (d.empty()) return chain;
  make_primitive(d);
  chain.push_back(d);
  for (;;) {
    const ZPoly& a = chain[chain.size() - 2];
    const ZPoly& b = chain.back();
    ZPoly r = scaled_remainder(a, b);
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    make_primitive(r);
    chain.push_back(std::move(r));
  }
  return chain;
}

}  // namespace

SturmChain::SturmChain(std::vector<mpz_class> coeffs) {
  trim(coeffs);
  if (coeffs.empty()) throw std::domain_error("Sturm chain of the zero polynomial");
  make_primitive(coeffs);
  chain_ = build_chain(coeffs);
  if (chain_.back().size() > 1) {
    // Repeated roots: restart from p / gcd(p, p').
    UniPoly p = UniPoly::from_integers(coeffs);
    UniPoly g = UniPoly::from_integers(chain_.back());
    ZPoly sq = p.divmod(g).first.primitive_integer();
    chain_ = build_chain(sq);
  }
}

int SturmChain::variations_from_signs(const std::vector<int>& s) const {
  int v = 0;
  int last = 0;
  for (int x : s) {
    if (x == 0) continue;
    if (last != 0 && x != last) ++v;
    last = x;
  }
  return v;
}

int SturmChain::sign_at(const mpz_class& x) const {
  const ZPoly& p = chain_.front();
  mpz_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return sgn(acc);
}

int SturmChain::sign_at(const mpq_class& x) const {
  if (x.get_den() == 1) return sign_at(mpz_class(x.get_num()));
  const ZPoly& p = chain_.front();
  const mpz_class& a = x.get_num();
  const mpz_class& b = x.get_den();
  // sign(p(a/b)) = sign(b^d p(a/b)) with b > 0.
  mpz_class acc = p.back();
  mpz_class bp = 1;
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    bp *= b;
    acc = acc * a + p[i] * bp;
  }
  return sgn(acc);
}

int SturmChain::variations(const mpz_class& x) const {
  std::vector<int> s;
  s.reserve(chain_.size());
  for (const auto& p : chain_) {
    mpz_class acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    s.push_back(sgn(acc));
  }
  return variations_from_signs(s);
}

int SturmChain::variations(const mpq_class& x) const {
  if (x.get_den() == 1) return variations(mpz_class(x.get_num()));
  const mpz_class& a = x.get_num();
  const mpz_class& b = x.get_den();
  std::vector<mpz_class> bpow(chain_.front().size());
  bpow[0] = 1;
  for (std::size_t i = 1; i < bpow.size(); ++i) bpow[i] = bpow[i - 1] * b;
  std::vector<int> s;
  s.reserve(chain_.size());
  for (const auto& p : chain_) {
    mpz_class acc = p.back();
    const std::size_t d = p.size() - 1;
    for (std::size_t i = d; i-- > 0;) acc = acc * a + p[i] * bpow[d - i];
    s.push_back(sgn(acc));
  }
  return variations_from_signs(s);
}

int SturmChain::variations_pos_inf() const {
  std::vector<int> s;
  for (const auto& p : chain_) s.push_back(sgn(p.back()));
  return variations_from_signs(s);
}

int SturmChain::variations_neg_inf() const {
  std::vector<int> s;
  for (const auto& p : chain_) {
    int v = sgn(p.back());
    if ((p.size() - 1) % 2 == 1) v = -v;
    s.push_back(v);
  }
  return variations_from_signs(s);
}

int SturmChain::count(const std::optional<mpq_class>& lo, const std::optional<mpq_class>& hi) const {
  const int vlo = lo ? variations(*lo) : variations_neg_inf();
  const int vhi = hi ? variations(*hi) : variations_pos_inf();
  return vlo - vhi;
}

mpz_class SturmChain::root_bound() const {
  const ZPoly& p = chain_.front();
  const mpz_class lead = abs(p.back());
  mpz_class m = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) m = std::max(m, mpz_class(abs(p[i])));
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), m.get_mpz_t(), lead.get_mpz_t());
  return q + 2;
}

void SturmChain::isolate(const mpq_class& lo, const mpq_class& hi, int vlo, int vhi,
                         std::vector<RootInterval>& out) const {
  const int n = vlo - vhi;
  if (n <= 0) return;
  if (n == 1) {
    out.push_back({lo, hi, false});
    return;
  }
  // Split at a point that is not itself a root.
  mpq_class c = (lo + hi) / 2;
  for (long t = 3; sign_at(c) == 0; ++t) c = lo + (hi - lo) / t;
  const int vc = variations(c);
  isolate(lo, c, vlo, vc, out);
  isolate(c, hi, vc, vhi, out);
}

std::vector<RootInterval> SturmChain::isolate_real_roots() const {
  std::vector<RootInterval> out;
  if (degree() < 1) return out;
  const mpz_class b = root_bound();
  const mpq_class lo(-b), hi(b);
  isolate(lo, hi, variations(lo), variations(hi), out);
  return out;
}

void SturmChain::refine(RootInterval& iv, const mpq_class& width) const {
  if (iv.exact) return;
  int slo = sign_at(iv.lo);
  while (iv.hi - iv.lo > width) {
    mpq_class c = (iv.lo + iv.hi) / 2;
    const int sc = sign_at(c);
    if (sc == 0) {
      iv.lo = iv.hi = c;
      iv.exact = true;
      return;
    }
    if (sc == slo) {
      iv.lo = c;
    } else {
      iv.hi = c;
    }
  }
}

void SturmChain::cells(const mpz_class& lo, const mpz_class& hi, int vlo, int vhi,
                       std::vector<std::pair<mpz_class, int>>& out) const {
  const int n = vlo - vhi;
  if (n <= 0) return;
  if (hi - lo == 1) {
    out.emplace_back(hi, n);
    return;
  }
  mpz_class c;
  mpz_class s = lo + hi;
  mpz_fdiv_q_2exp(c.get_mpz_t(), s.get_mpz_t(), 1);
  const int vc = variations(c);
  cells(lo, c, vlo, vc, out);
  cells(c, hi, vc, vhi, out);
}

std::vector<std::pair<mpz_class, int>> SturmChain::integer_cells() const {
  std::vector<std::pair<mpz_class, int>> out;
  if (degree() < 1) return out;
  const mpz_class b = root_bound();
  const mpz_class lo = -b;
  cells(lo, b, variations(lo), variations(b), out);
  return out;
}

int sturm_real_root_count(const UniPoly& f, const std::optional<mpq_class>& lo,
                          const std::optional<mpq_class>& hi) {
  if (f.is_zero()) throw std::domain_error("root count of the zero polynomial");
  if ((lo && f(*lo) == 0) || (hi && f(*hi) == 0)) throw std::domain_error("polynomial vanishes at an interval endpoint");
  if (lo && hi && !(*lo < *hi)) return 0;
  SturmChain chain(f.primitive_integer());
  return chain.count(lo, hi);
}

}  // namespace thue
