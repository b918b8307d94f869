#include "stq/character.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "stq/errors.hpp"

namespace stq {

namespace {

void require_dominant(const RootSystem& rs, const Weight& w, const char* what) {
  if (w.rank() != rs.rank() || !w.is_dominant())
    throw PreconditionError(std::string(what) + ": weight " + w.to_string() + " is not a dominant weight of " +
                            rs.label());
}

}  // namespace

std::vector<Weight> CharacterRing::dominant_weights_below(const Weight& lambda) const {
  require_dominant(roots_, lambda, "dominant_weights_below");
  // Any dominant mu < mu' can be reached by subtracting positive roots one at a time
  // while staying dominant.
  std::vector<Weight> out{lambda};
  std::unordered_set<Weight> seen{lambda};
  for (std::size_t head = 0; head < out.size(); ++head)
    for (const auto& r : roots_.positive_roots()) {
      Weight nxt = out[head] - r.weight;
      if (nxt.is_dominant() && seen.insert(nxt).second) out.push_back(nxt);
    }
  return out;
}

OrbitCharacter CharacterRing::freudenthal(const Weight& lambda) const {
  require_dominant(roots_, lambda, "freudenthal");
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = freudenthal_cache_.find(lambda); it != freudenthal_cache_.end()) return it->second;
  }

  std::vector<Weight> support = dominant_weights_below(lambda);
  std::sort(support.begin(), support.end(), [&](const Weight& a, const Weight& b) {
    long ha = roots_.scaled_height(a), hb = roots_.scaled_height(b);
    return ha != hb ? ha > hb : a < b;
  });

  const Weight& rho = roots_.rho();
  const long top = roots_.scaled_form(lambda + rho, lambda + rho);
  std::unordered_map<Weight, std::int64_t> mult;
  mult.emplace(lambda, 1);
  for (std::size_t idx = 1; idx < support.size(); ++idx) {
    const Weight& mu = support[idx];
    std::int64_t num = 0;
    for (const auto& r : roots_.positive_roots()) {
      // The weights mu + k alpha (k >= 1) of chi(lambda) form an unbroken string.
      for (Weight up = mu + r.weight;; up += r.weight) {
        const Weight dom = roots_.dominant_representative(up);
        if (!roots_.dominance_leq(dom, lambda)) break;
        if (auto it = mult.find(dom); it != mult.end()) num += it->second * roots_.scaled_form(up, r.weight);
      }
    }
    num *= 2;
    const long den = top - roots_.scaled_form(mu + rho, mu + rho);
    if (den <= 0 || num % den != 0) throw std::logic_error("Freudenthal recursion produced a non-integer");
    if (num != 0) mult.emplace(mu, num / den);
  }

  OrbitCharacter result;
  for (const auto& [w, c] : mult) result.add(w, c);
  std::lock_guard lock(cache_mutex_);
  freudenthal_cache_.emplace(lambda, result);
  return result;
}

WeylCombo CharacterRing::orbit_to_weyl(const OrbitCharacter& eta) const {
  OrbitCharacter rest = eta;
  WeylCombo out;
  while (!rest.empty()) {
    // A term of maximal height is maximal for <= among the support.
    auto top = std::max_element(rest.terms().begin(), rest.terms().end(), [&](const auto& a, const auto& b) {
      long ha = roots_.scaled_height(a.first), hb = roots_.scaled_height(b.first);
      return ha != hb ? ha < hb : a.first > b.first;
    });
    const Weight mu = top->first;
    const std::int64_t c = top->second;
    out.add(mu, c);
    OrbitCharacter chi = freudenthal(mu);
    chi *= c;
    rest -= chi;
  }
  return out;
}

OrbitCharacter CharacterRing::weyl_to_orbit(const WeylCombo& f) const {
  OrbitCharacter out;
  for (const auto& [mu, c] : f.terms()) {
    OrbitCharacter chi = freudenthal(mu);
    chi *= c;
    out += chi;
  }
  return out;
}

void CharacterRing::brauer_accumulate(const Weight& lambda, const Weight& mu, std::int64_t coeff,
                                      WeylAccumulator& acc) const {
  for (const Weight& sigma : roots_.weyl_orbit(mu)) {
    auto st = dot_dominant_rep(roots_, lambda + sigma);
    if (!st) continue;
    auto [it, inserted] = acc.try_emplace(st->weight, 0);
    it->second += st->sign * coeff;
    if (it->second == 0) acc.erase(it);
  }
}

WeylCombo CharacterRing::brauer_multiply(const Weight& lambda, const Weight& mu) const {
  require_dominant(roots_, lambda, "brauer_multiply");
  require_dominant(roots_, mu, "brauer_multiply");
  WeylAccumulator acc;
  brauer_accumulate(lambda, mu, 1, acc);
  WeylCombo out;
  for (const auto& [w, c] : acc) out.add(w, c);
  return out;
}

WeylCombo CharacterRing::multiply_orbit_by_weyl(const OrbitCharacter& eta, const Weight& lambda) const {
  require_dominant(roots_, lambda, "multiply_orbit_by_weyl");
  WeylAccumulator acc;
  for (const auto& [mu, c] : eta.terms()) brauer_accumulate(lambda, mu, c, acc);
  WeylCombo out;
  for (const auto& [w, c] : acc) out.add(w, c);
  return out;
}

OrbitCharacter CharacterRing::multiply(const OrbitCharacter& a, const OrbitCharacter& b) const {
  // Coefficient of s(nu) is the coefficient of e(nu) for dominant nu.
  std::unordered_map<Weight, std::int64_t> acc;
  for (const auto& [mu, c] : b.terms()) {
    std::vector<Weight> orbit_b = roots_.weyl_orbit(mu);
    for (const auto& [la, d] : a.terms()) {
      std::vector<Weight> orbit_a = roots_.weyl_orbit(la);
      for (const Weight& x : orbit_a)
        for (const Weight& y : orbit_b) {
          Weight z = x + y;
          if (z.is_dominant()) acc[z] += c * d;
        }
    }
  }
  OrbitCharacter out;
  for (const auto& [w, c] : acc) out.add(w, c);
  return out;
}

FullCharacter CharacterRing::multiply(const FullCharacter& a, const FullCharacter& b) {
  std::unordered_map<Weight, std::int64_t> acc;
  for (const auto& [x, c] : a.terms())
    for (const auto& [y, d] : b.terms()) acc[x + y] += c * d;
  FullCharacter out;
  for (const auto& [w, c] : acc) out.add(w, c);
  return out;
}

OrbitCharacter CharacterRing::dual(const OrbitCharacter& eta) const {
  OrbitCharacter out;
  for (const auto& [mu, c] : eta.terms()) out.add(roots_.dual_weight(mu), c);
  return out;
}

WeylCombo CharacterRing::dual(const WeylCombo& f) const {
  WeylCombo out;
  for (const auto& [mu, c] : f.terms()) out.add(roots_.dual_weight(mu), c);
  return out;
}

FullCharacter CharacterRing::dual(const FullCharacter& f) {
  FullCharacter out;
  for (const auto& [mu, c] : f.terms()) out.add(-mu, c);
  return out;
}

FullCharacter CharacterRing::expand(const OrbitCharacter& eta) const {
  FullCharacter out;
  for (const auto& [mu, c] : eta.terms())
    for (const Weight& w : roots_.weyl_orbit(mu)) out.add(w, c);
  return out;
}

FullCharacter CharacterRing::expand(const WeylCombo& f) const { return expand(weyl_to_orbit(f)); }

bool CharacterRing::is_w_invariant(const FullCharacter& f) const {
  for (const auto& [w, c] : f.terms())
    for (std::size_t i = 0; i < roots_.rank(); ++i)
      if (f.coeff(roots_.reflect(w, i)) != c) return false;
  return true;
}

OrbitCharacter CharacterRing::to_orbit_basis(const FullCharacter& f) const {
  if (!is_w_invariant(f)) throw PreconditionError("character is not W-invariant");
  OrbitCharacter out;
  for (const auto& [w, c] : f.terms())
    if (w.is_dominant()) out.add(w, c);
  return out;
}

FullCharacter CharacterRing::divide_exact(const FullCharacter& f, const FullCharacter& g) const {
  if (g.empty()) throw PreconditionError("division by the zero character");
  // Monomial order: (height, lexicographic). Compatible with addition of exponents.
  using Key = std::pair<long, Weight>;
  auto key = [&](const Weight& w) { return Key{roots_.scaled_height(w), w}; };
  std::map<Key, std::int64_t> rest;
  for (const auto& [w, c] : f.terms()) rest.emplace(key(w), c);
  std::vector<std::pair<Key, std::int64_t>> divisor;
  for (const auto& [w, c] : g.terms()) divisor.emplace_back(key(w), c);
  std::sort(divisor.begin(), divisor.end());
  const auto& [g_low, g_low_c] = divisor.front();
  const auto& [g_lead, g_lead_c] = divisor.back();

  FullCharacter quotient;
  if (rest.empty()) return quotient;
  // No quotient term can lie below low(f) - low(g).
  const Key floor_key = key(rest.begin()->first.second - g_low.second);
  while (!rest.empty()) {
    const auto [lead, c] = *rest.rbegin();
    const Weight shift = lead.second - g_lead.second;
    if (c % g_lead_c != 0 || key(shift) < floor_key)
      throw NotDivisible("no exact quotient: remainder has leading term e(" + lead.second.to_string() + ")");
    const std::int64_t q = c / g_lead_c;
    quotient.add(shift, q);
    for (const auto& [k, d] : divisor) {
      Weight w = k.second + shift;
      auto [it, inserted] = rest.try_emplace(key(w), 0);
      it->second -= q * d;
      if (it->second == 0) rest.erase(it);
    }
  }
  return quotient;
}

bool is_good_filtration(const WeylCombo& f) {
  if (f.empty()) return false;
  return std::all_of(f.terms().begin(), f.terms().end(), [](const auto& t) { return t.second >= 0; });
}

}  // namespace stq
