#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "stq/root_system.hpp"

namespace stq {

bool is_prime(int n);

/// A root system together with the prime p defining W_p and its dot action
/// w . lambda = w(lambda + rho) - rho.
struct AffineContext {
  AffineContext(RootSystem roots, int p);

  /// Throws PreconditionError unless p > h (needed by the Lusztig character formula).
  void require_p_above_coxeter() const;

  RootSystem roots;
  int p;
};

/// Straightening result: chi(nu) = sign * chi(weight) with weight dominant.
struct Straightened {
  Weight weight;
  int sign = 1;
};

/// s_{alpha,np} . nu = nu - (<nu + rho, alpha^vee> - np) alpha.
Weight dot_reflect(const AffineContext& ctx, const Weight& nu, std::size_t root_index, int n);

/// No positive coroot pairing of nu + rho lies in pZ.
bool is_p_regular(const AffineContext& ctx, const Weight& nu);

/// Dominant mu with mu + rho in W(nu + rho), and det(w). Empty when nu + rho lies on a
/// reflecting hyperplane of W (then chi(nu) = 0).
std::optional<Straightened> dot_dominant_rep(const RootSystem& roots, const Weight& nu);

/// a and b lie in the same W_p dot-orbit.
bool dot_linked(const AffineContext& ctx, const Weight& a, const Weight& b);

enum class DownSetSearch {
  /// Search over every weight nu with dom(nu + rho) <= lambda, following strictly
  /// decreasing affine reflections.
  Exhaustive,
  /// Same reflections, but images outside the dominant chamber are dropped. Relies on
  /// the Bruhat order on dominant alcoves being graded with reflection covers; agrees
  /// with Exhaustive in the test suite.
  DominantChamber,
};

/// Psi^+(lambda): dominant mu with (mu - rho) up-arrow-below (lambda - rho). Sorted
/// lexicographically; always contains lambda.
std::vector<Weight> up_down_set(const Weight& lambda, const AffineContext& ctx,
                                DownSetSearch search = DownSetSearch::DominantChamber);

}  // namespace stq
