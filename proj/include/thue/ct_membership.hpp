#ifndef THUE_CT_MEMBERSHIP_HPP
#define THUE_CT_MEMBERSHIP_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "thue/form.hpp"

namespace thue {

/// Real projective zeros of a binary form: distinct real roots of F(z, 1),
/// plus one for the point 1:0 when the x^n coefficient vanishes.
/// Returns -1 for the zero form (every point is a zero).
int real_projective_zeros(const BinaryForm& g);

struct CtReport {
  int max_real_zeros_seen = 0;
  /// A direction (u, v) whose u F_x + v F_y has more than t real zeros.
  std::optional<std::pair<mpz_class, mpz_class>> witness;
  int directions_checked = 0;
  /// Set when some u F_x + v F_y was identically zero.
  bool degenerate_direction = false;
};

/// Refutation sampling for the class of forms whose directional derivatives
/// u F_x + v F_y all have at most t real projective zeros. Directions are the
/// two axes followed by seeded Halton angles on the upper half circle; a
/// clean report means "not refuted", never "member".
CtReport ct_membership_sample(const BinaryForm& f, int t, int directions, std::uint64_t seed);

/// The sampled directions, in order.
std::vector<std::pair<mpz_class, mpz_class>> sample_directions(int directions, std::uint64_t seed);

}  // namespace thue

#endif  // THUE_CT_MEMBERSHIP_HPP
