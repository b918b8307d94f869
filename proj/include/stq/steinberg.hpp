#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stq/character.hpp"
#include "stq/kl.hpp"
#include "stq/order.hpp"

namespace stq {

/// How x_mu is read off the products chi((p-1)rho + p gamma) M.
enum class MinimumRule {
  /// Only weights (p-1)rho + p gamma + w mu that are already dominant.
  DirectTargets,
  /// Every nonzero straightening of (p-1)rho + p gamma + w mu.
  StraightenedTargets,
};

struct SteinbergOptions {
  unsigned threads = 1;
  MinimumRule rule = MinimumRule::DirectTargets;
  /// Picks uniformly among the maximal candidates instead of the first one.
  std::optional<std::uint64_t> tie_break_seed;
  /// Verifies that simultaneous maximal candidates never share a target.
  bool check_contention = false;
};

struct SteinbergRow {
  Weight weight;
  std::int64_t t_zeta = 0;
  std::int64_t m_p = 0;
};

struct SteinbergReport {
  Weight lambda;
  int p = 0;
  std::vector<SteinbergRow> rows;  ///< decreasing height, then lexicographic
  bool agrees = true;
};

/// The minimal m with p m > <sigma, alpha_0^vee> for every weight sigma of eta.
int m_bound(const OrbitCharacter& eta, const RootSystem& roots, int p);

/// Weights gamma with 0 <= <gamma, alpha_i^vee> < m, lexicographic.
std::vector<Weight> restricted_weights(std::size_t rank, int m);

/// eta chi((p-1)rho + p gamma) is a good filtration character for all gamma in X_m.
bool has_good_steinberg_multiplication(const OrbitCharacter& eta, const CharacterRing& ring, int p,
                                       unsigned threads = 1);

/// M_p(lambda): the smallest orbit character with highest weight lambda and good
/// Steinberg multiplication, built top-down over Psi^+(lambda).
OrbitCharacter minimal_character(const Weight& lambda, const AffineContext& ctx, const CharacterRing& ring,
                                 const SteinbergOptions& options = {});

/// t_zeta(lambda) from the Lusztig character formula; the p-multiple part of lambda
/// enters as a Frobenius twist. Requires p > h and, unless lambda is in pX, a p-regular
/// restricted part lambda_0 - rho.
OrbitCharacter t_zeta(const Weight& lambda, const AffineContext& ctx, const CharacterRing& ring, KLTable& table);

/// f / chi((p-1)rho) in the orbit basis.
OrbitCharacter steinberg_quotient_divide(const FullCharacter& f, const AffineContext& ctx, const CharacterRing& ring);

SteinbergReport compare(const Weight& lambda, const AffineContext& ctx, const CharacterRing& ring, KLTable& table,
                        const SteinbergOptions& options = {});

/// Psi^+(lambda) ordered by decreasing height, then lexicographically.
std::vector<Weight> report_order(const std::vector<Weight>& weights, const RootSystem& roots);

}  // namespace stq
