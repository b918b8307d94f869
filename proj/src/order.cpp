#include "stq/order.hpp"

#include <algorithm>
#include <unordered_set>

#include "stq/errors.hpp"

namespace stq {

namespace {

int floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return static_cast<int>(q);
}

int ceil_div(long a, long b) { return -floor_div(-a, b); }

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

AffineContext::AffineContext(RootSystem r, int prime) : roots(std::move(r)), p(prime) {
  if (!is_prime(p)) throw PreconditionError("p = " + std::to_string(p) + " is not prime");
}

void AffineContext::require_p_above_coxeter() const {
  if (p <= roots.coxeter_number())
    throw PreconditionError("p = " + std::to_string(p) + " must exceed the Coxeter number " +
                            std::to_string(roots.coxeter_number()) + " of " + roots.label());
}

Weight dot_reflect(const AffineContext& ctx, const Weight& nu, std::size_t root_index, int n) {
  const auto& rs = ctx.roots;
  long a = rs.pairing(nu + rs.rho(), root_index) - static_cast<long>(n) * ctx.p;
  return nu - static_cast<int>(a) * rs.positive_roots()[root_index].weight;
}

bool is_p_regular(const AffineContext& ctx, const Weight& nu) {
  const auto& rs = ctx.roots;
  Weight shifted = nu + rs.rho();
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k)
    if (rs.pairing(shifted, k) % ctx.p == 0) return false;
  return true;
}

std::optional<Straightened> dot_dominant_rep(const RootSystem& roots, const Weight& nu) {
  Weight x = nu + roots.rho();
  int sign = 1;
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t i = 0; i < roots.rank(); ++i)
      if (x[i] < 0) {
        x = roots.reflect(x, i);
        sign = -sign;
        moved = true;
      }
  }
  for (std::size_t i = 0; i < roots.rank(); ++i)
    if (x[i] == 0) return std::nullopt;
  return Straightened{x - roots.rho(), sign};
}

bool dot_linked(const AffineContext& ctx, const Weight& a, const Weight& b) {
  const auto& rs = ctx.roots;
  Weight sa = a + rs.rho();
  for (const Weight& w : rs.weyl_orbit(b + rs.rho())) {
    auto r = rs.root_coordinates(sa - w);
    if (r && std::all_of(r->begin(), r->end(), [&](long v) { return v % ctx.p == 0; })) return true;
  }
  return false;
}

std::vector<Weight> up_down_set(const Weight& lambda, const AffineContext& ctx, DownSetSearch search) {
  const auto& rs = ctx.roots;
  if (lambda.rank() != rs.rank() || !lambda.is_dominant())
    throw PreconditionError("up_down_set needs a dominant weight of rank " + std::to_string(rs.rank()));
  const long bound = rs.pairing(lambda, rs.highest_coroot());
  const auto& roots = rs.positive_roots();

  // Nodes are stored rho-shifted (x = nu + rho), where the dot action is linear.
  std::vector<Weight> frontier{lambda};
  std::unordered_set<Weight> seen{lambda};
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const Weight x = frontier[head];
    for (std::size_t k = 0; k < roots.size(); ++k) {
      const long a = rs.pairing(x, k);
      // Moving down: np < a. Staying inside conv(W lambda): 2np - a >= -bound.
      for (int n = ceil_div(a - bound, 2L * ctx.p); static_cast<long>(n) * ctx.p < a; ++n) {
        Weight y = x - static_cast<int>(a - static_cast<long>(n) * ctx.p) * roots[k].weight;
        if (search == DownSetSearch::DominantChamber) {
          if (!y.is_dominant()) continue;
        } else if (!rs.dominance_leq(rs.dominant_representative(y), lambda)) {
          continue;
        }
        if (seen.insert(y).second) frontier.push_back(y);
      }
    }
  }
  std::vector<Weight> out;
  for (const Weight& x : frontier)
    if (x.is_dominant()) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace stq
