#ifndef THUE_COUNTING_HPP
#define THUE_COUNTING_HPP

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "thue/constants.hpp"
#include "thue/form.hpp"
#include "thue/solution.hpp"

namespace thue {

enum class Completeness { BoxComplete, FiberComplete, Heuristic };
std::string to_string(Completeness c);

/// Where a solution list is known to be complete: the box |x|, |y| <= bound,
/// or min(|x|, |y|) <= bound for fibers. Heuristic lists carry no claim.
struct Region {
  Completeness certificate = Completeness::Heuristic;
  mpz_class bound;
};

/// The band for P-tilde: 2^-n m <= |F| < m. Absolute values keep the dyadic
/// bands a partition for every sign pattern.
inline constexpr const char* kBandConvention = "abs-band";
bool in_band(const mpz_class& value, const mpz_class& m, int n);

struct CountsReport {
  long N = 0, P = 0, Ptilde = 0;
  /// |F| value -> number of primitive solutions with that |F|.
  std::map<mpz_class, long> pi;
  Region region;
  std::string band_convention = kBandConvention;
};

CountsReport counts(const BinaryForm& f, const mpz_class& m, const std::vector<Solution>& sols, const Region& region);

enum class Scheme { ThreeTier, TwoTier };
std::string to_string(Scheme s);

/// ThreeTier: large if max(|x|,|y|) > Y_L, else small if min(|x|,|y|) <= Y_S,
/// else medium. TwoTier: small if y <= Y_0, else large.
void classify(std::vector<Solution>& sols, const Thresholds& th, Scheme scheme);
void classify_two_tier(std::vector<Solution>& sols, const LogReal& y0);

struct TelescopingCheck {
  /// Primitive solutions whose multiples d(x, y), d^n |F| <= m, all fit in the box.
  long primitives_used = 0;
  long primitives_skipped = 0;
  /// Solutions in the box that are multiples of a used primitive.
  long n_closed = 0;
  /// Sum over used primitives of floor((m / |F|)^(1/n)).
  long weighted_sum = 0;
  bool holds = false;
};

/// N = sum_k pi(F, k) floor((m/k)^(1/n)) on the part of a box-complete set
/// that is closed under the relevant multiples.
TelescopingCheck telescoping_check(const BinaryForm& f, const mpz_class& m, const std::vector<Solution>& box_sols,
                                   const mpz_class& box);

/// floor((m / k)^(1/n)) exactly.
mpz_class multiples_count(const mpz_class& m, const mpz_class& k, int n);

struct DyadicCheck {
  int u = 0;
  mpz_class m_top;  // 2^(n(u+1)) - 1
  long p_top = 0;
  /// P-tilde(F, 2^(nj)) for j = 1..u+1.
  std::vector<long> band_counts;
  long band_sum = 0;
  bool identity_holds = false;
  /// P(F, m) <= band_sum for every step point m in [2^(nu), 2^(n(u+1))).
  bool monotone_bound_holds = false;
  long step_points_checked = 0;
};

/// Enumerates the box for m = 2^(n(u+1)) - 1 and checks the dyadic split.
DyadicCheck dyadic_check(const BinaryForm& f, int u, const mpz_class& box);
/// Same on a caller-supplied box-complete list for m_top.
DyadicCheck dyadic_check(const BinaryForm& f, int u, const std::vector<Solution>& top_sols);

struct PartitionCheck {
  long p = 0;
  long original_count = 0;
  long original_band_count = 0;
  /// Primitive solutions landing in A_j Z^2, j = 0..p.
  std::vector<long> per_index;
  long transported_total = 0;
  long transported_band_total = 0;
  bool values_preserved = true;
  bool indices_unique = true;
  /// Independent enumeration of |F_{A_j}(u, v)| <= m per j agrees with per_index.
  bool reverse_enumeration_agrees = true;
  bool holds = false;
};

/// Partition of the primitive solutions in a box among the sublattices
/// A_j Z^2 for prime p.
PartitionCheck partition_check(const BinaryForm& f, const mpz_class& m, const std::vector<Solution>& box_sols, long p,
                               const mpz_class& box);

/// For unimodular A: (x, y) -> A^-1 (x, y) maps solutions of F to solutions of
/// F_A with the same value. Returns false on the first mismatch.
bool transport_check(const BinaryForm& f, const Mat2& a, const std::vector<Solution>& sols);

}  // namespace thue

#endif  // THUE_COUNTING_HPP
