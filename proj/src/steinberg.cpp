#include "stq/steinberg.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "stq/errors.hpp"
#include "stq/parallel.hpp"

namespace stq {

namespace {

Weight steinberg_shift(const RootSystem& rs, int p, const Weight& gamma) { return (p - 1) * rs.rho() + p * gamma; }

// Weights of chi(shift) s(mu) that x_mu is read from, under the given rule.
std::vector<Weight> targets(const RootSystem& rs, const Weight& shift, const std::vector<Weight>& orbit,
                            MinimumRule rule) {
  std::vector<Weight> out;
  for (const Weight& sigma : orbit) {
    Weight nu = shift + sigma;
    if (rule == MinimumRule::DirectTargets) {
      if (nu.is_dominant()) out.push_back(nu);
    } else if (auto st = dot_dominant_rep(rs, nu)) {
      out.push_back(st->weight);
    }
  }
  return out;
}

std::int64_t lookup(const WeylAccumulator& acc, const Weight& w) {
  auto it = acc.find(w);
  return it == acc.end() ? 0 : it->second;
}

}  // namespace

int m_bound(const OrbitCharacter& eta, const RootSystem& roots, int p) {
  if (eta.empty()) throw PreconditionError("m_bound of the zero character");
  long top = 0;
  for (const auto& [sigma, c] : eta.terms())
    top = std::max(top, roots.pairing(roots.dominant_representative(sigma), roots.highest_coroot()));
  return static_cast<int>(top / p) + 1;
}

std::vector<Weight> restricted_weights(std::size_t rank, int m) {
  std::vector<Weight> out;
  if (m <= 0) return out;
  Weight g(rank);
  while (true) {
    out.push_back(g);
    std::size_t i = rank;
    while (i > 0 && g[i - 1] == m - 1) g[--i] = 0;
    if (i == 0) break;
    ++g[i - 1];
  }
  return out;
}

bool has_good_steinberg_multiplication(const OrbitCharacter& eta, const CharacterRing& ring, int p,
                                       unsigned threads) {
  const RootSystem& rs = ring.roots();
  const auto gammas = restricted_weights(rs.rank(), m_bound(eta, rs, p));
  std::vector<char> good(gammas.size(), 0);
  parallel_for(gammas.size(), threads, [&](std::size_t k) {
    good[k] = is_good_filtration(ring.multiply_orbit_by_weyl(eta, steinberg_shift(rs, p, gammas[k])));
  });
  return std::all_of(good.begin(), good.end(), [](char g) { return g != 0; });
}

std::vector<Weight> report_order(const std::vector<Weight>& weights, const RootSystem& roots) {
  std::vector<Weight> out = weights;
  std::sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) {
    long ha = roots.scaled_height(a), hb = roots.scaled_height(b);
    return ha != hb ? ha > hb : a < b;
  });
  return out;
}

OrbitCharacter minimal_character(const Weight& lambda, const AffineContext& ctx, const CharacterRing& ring,
                                 const SteinbergOptions& options) {
  const RootSystem& rs = ctx.roots;
  if (lambda.rank() != rs.rank() || !lambda.is_dominant())
    throw PreconditionError("minimal_character needs a dominant weight, got " + lambda.to_string());
  const int p = ctx.p;
  const std::vector<Weight> psi = report_order(up_down_set(lambda, ctx), rs);
  const int m = static_cast<int>(rs.pairing(lambda, rs.highest_coroot()) / p) + 1;
  const std::vector<Weight> gammas = restricted_weights(rs.rank(), m);
  std::vector<Weight> shifts;
  for (const Weight& g : gammas) shifts.push_back(steinberg_shift(rs, p, g));

  OrbitCharacter M{{lambda, 1}};
  std::vector<WeylAccumulator> products(gammas.size());
  parallel_for(gammas.size(), options.threads,
               [&](std::size_t k) { ring.brauer_accumulate(shifts[k], lambda, 1, products[k]); });

  std::mt19937_64 rng(options.tie_break_seed.value_or(0));
  while (true) {
    std::vector<Weight> zero;
    for (const Weight& mu : psi)
      if (M.coeff(mu) == 0) zero.push_back(mu);
    if (zero.empty()) break;
    std::vector<Weight> maximal;
    for (const Weight& mu : zero) {
      bool below_another = std::any_of(zero.begin(), zero.end(), [&](const Weight& nu) {
        return !(nu == mu) && rs.dominance_leq(mu, nu);
      });
      if (!below_another) maximal.push_back(mu);
    }

    if (options.check_contention && maximal.size() > 1) {
      parallel_for(gammas.size(), options.threads, [&](std::size_t k) {
        for (const Weight& a : maximal) {
          auto direct = targets(rs, shifts[k], rs.weyl_orbit(a), MinimumRule::DirectTargets);
          std::unordered_set<Weight> mine(direct.begin(), direct.end());
          for (const Weight& b : maximal) {
            if (a == b) continue;
            for (const Weight& t : targets(rs, shifts[k], rs.weyl_orbit(b), MinimumRule::StraightenedTargets))
              if (mine.count(t))
                throw std::logic_error("candidates " + a.to_string() + " and " + b.to_string() +
                                       " contend for chi(" + t.to_string() + ")");
          }
        }
      });
    }

    const Weight mu = options.tie_break_seed ? maximal[rng() % maximal.size()] : maximal.front();
    const std::vector<Weight> orbit = rs.weyl_orbit(mu);
    std::vector<std::int64_t> least(gammas.size(), std::numeric_limits<std::int64_t>::max());
    parallel_for(gammas.size(), options.threads, [&](std::size_t k) {
      for (const Weight& t : targets(rs, shifts[k], orbit, options.rule))
        least[k] = std::min(least[k], lookup(products[k], t));
    });
    const std::int64_t x = *std::min_element(least.begin(), least.end());
    if (x >= 0)
      throw std::logic_error("x_mu = " + std::to_string(x) + " is not negative at " + mu.to_string() +
                             " for lambda = " + lambda.to_string());
    M.add(mu, -x);
    parallel_for(gammas.size(), options.threads,
                 [&](std::size_t k) { ring.brauer_accumulate(shifts[k], mu, -x, products[k]); });
  }
  return M;
}

OrbitCharacter t_zeta(const Weight& lambda, const AffineContext& ctx, const CharacterRing& ring, KLTable& table) {
  ctx.require_p_above_coxeter();
  const RootSystem& rs = ctx.roots;
  if (lambda.rank() != rs.rank() || !lambda.is_dominant())
    throw PreconditionError("t_zeta needs a dominant weight, got " + lambda.to_string());
  if (table.group().roots().label() != rs.label()) throw PreconditionError("KL table is for another type");
  const int p = ctx.p;
  Weight lambda0(rs.rank()), lambda1(rs.rank());
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    lambda0[i] = lambda[i] % p;
    lambda1[i] = lambda[i] / p;
  }
  const OrbitCharacter twist = frobenius_twist(ring.freudenthal(lambda1), p);
  if (lambda0.is_zero()) return twist;

  const Weight nu = lambda0 - rs.rho();
  if (!is_p_regular(ctx, nu))
    throw PreconditionError("t_zeta: " + nu.to_string() + " = lambda_0 - rho is p-singular for lambda = " +
                            lambda.to_string());
  const auto& g = table.group();
  const AffineElement w = g.weight_to_affine(nu, p);
  const Weight nu0 = g.dot_inverse(w, nu, p);
  OrbitCharacter restricted;
  for (const auto& [y, d] : lcf_coefficients_by_element(w, table))
    restricted.add(g.dot(y, nu0, p) + rs.rho(), std::abs(d));
  if (lambda1.is_zero()) return restricted;
  return ring.multiply(restricted, twist);
}

OrbitCharacter steinberg_quotient_divide(const FullCharacter& f, const AffineContext& ctx, const CharacterRing& ring) {
  if (!ring.is_w_invariant(f)) throw PreconditionError("steinberg_quotient_divide needs a W-invariant character");
  const FullCharacter steinberg = ring.expand(WeylCombo{{(ctx.p - 1) * ctx.roots.rho(), 1}});
  return ring.to_orbit_basis(ring.divide_exact(f, steinberg));
}

SteinbergReport compare(const Weight& lambda, const AffineContext& ctx, const CharacterRing& ring, KLTable& table,
                        const SteinbergOptions& options) {
  SteinbergReport report;
  report.lambda = lambda;
  report.p = ctx.p;
  const OrbitCharacter t = t_zeta(lambda, ctx, ring, table);
  const OrbitCharacter M = minimal_character(lambda, ctx, ring, options);
  const std::vector<Weight> psi = report_order(up_down_set(lambda, ctx), ctx.roots);
  const std::unordered_set<Weight> support(psi.begin(), psi.end());
  for (const auto* c : {&t, &M})
    for (const auto& [mu, k] : c->terms())
      if (!support.count(mu)) throw std::logic_error("s(" + mu.to_string() + ") lies outside Psi+(lambda)");
  for (const Weight& mu : psi) {
    SteinbergRow row{mu, t.coeff(mu), M.coeff(mu)};
    report.agrees = report.agrees && row.t_zeta == row.m_p;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace stq
