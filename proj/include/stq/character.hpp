#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <unordered_map>

#include "stq/order.hpp"
#include "stq/root_system.hpp"

namespace stq {

enum class Basis { Orbit, Weyl, Full };

/// Finitely supported integer combination of basis elements indexed by weights.
/// Zero coefficients are never stored. For the Orbit and Weyl bases every key is
/// dominant (checked by CharacterRing operations, not here).
template <Basis B>
class Character {
 public:
  using Terms = std::map<Weight, std::int64_t>;

  Character() = default;
  Character(std::initializer_list<std::pair<const Weight, std::int64_t>> init) {
    for (const auto& [w, c] : init) add(w, c);
  }

  static Character single(const Weight& w, std::int64_t c = 1) {
    Character r;
    r.add(w, c);
    return r;
  }

  void add(const Weight& w, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted && (it->second += c) == 0) terms_.erase(it);
  }

  std::int64_t coeff(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
  }

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Character& operator+=(const Character& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  Character& operator-=(const Character& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  Character& operator*=(std::int64_t k) {
    if (k == 0) terms_.clear();
    for (auto& [w, c] : terms_) c *= k;
    return *this;
  }
  friend Character operator+(Character a, const Character& b) { return a += b; }
  friend Character operator-(Character a, const Character& b) { return a -= b; }
  friend Character operator*(std::int64_t k, Character a) { return a *= k; }
  friend bool operator==(const Character&, const Character&) = default;

 private:
  Terms terms_;
};

/// Element of Z[X]^W in the orbit-sum basis {s(mu)}.
using OrbitCharacter = Character<Basis::Orbit>;
/// Element of Z[X]^W in the Weyl-character basis {chi(mu)}.
using WeylCombo = Character<Basis::Weyl>;
/// General element of Z[X] in the basis {e(mu)}.
using FullCharacter = Character<Basis::Full>;

/// Weyl-basis accumulator used by hot loops; converted to WeylCombo on demand.
using WeylAccumulator = std::unordered_map<Weight, std::int64_t>;

/// Exact arithmetic in Z[X]^W for one root system. Freudenthal expansions are memoized;
/// the cache is internally synchronized so a ring may be shared across threads.
class CharacterRing {
 public:
  explicit CharacterRing(RootSystem roots) : roots_(std::move(roots)) {}

  const RootSystem& roots() const { return roots_; }

  /// chi(lambda) in the orbit basis, via Freudenthal's recursion.
  OrbitCharacter freudenthal(const Weight& lambda) const;
  /// Dominant weights mu <= lambda.
  std::vector<Weight> dominant_weights_below(const Weight& lambda) const;

  WeylCombo orbit_to_weyl(const OrbitCharacter& eta) const;
  OrbitCharacter weyl_to_orbit(const WeylCombo& f) const;

  /// chi(lambda) s(mu) = sum over w mu in W mu of chi(lambda + w mu), straightened.
  WeylCombo brauer_multiply(const Weight& lambda, const Weight& mu) const;
  /// Adds coeff * chi(lambda) s(mu) into acc.
  void brauer_accumulate(const Weight& lambda, const Weight& mu, std::int64_t coeff, WeylAccumulator& acc) const;
  /// eta * chi(lambda) in the Weyl basis.
  WeylCombo multiply_orbit_by_weyl(const OrbitCharacter& eta, const Weight& lambda) const;

  OrbitCharacter multiply(const OrbitCharacter& a, const OrbitCharacter& b) const;
  static FullCharacter multiply(const FullCharacter& a, const FullCharacter& b);

  OrbitCharacter dual(const OrbitCharacter& eta) const;
  WeylCombo dual(const WeylCombo& f) const;
  static FullCharacter dual(const FullCharacter& f);

  FullCharacter expand(const OrbitCharacter& eta) const;
  FullCharacter expand(const WeylCombo& f) const;
  /// Orbit-basis form of a W-invariant element; throws PreconditionError otherwise.
  OrbitCharacter to_orbit_basis(const FullCharacter& f) const;
  bool is_w_invariant(const FullCharacter& f) const;

  /// q with f = q g, by leading-term elimination under the order (height, then
  /// lexicographic). Throws NotDivisible if no exact quotient exists.
  FullCharacter divide_exact(const FullCharacter& f, const FullCharacter& g) const;

 private:
  RootSystem roots_;
  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<Weight, OrbitCharacter> freudenthal_cache_;
};

/// Nonzero with all Weyl-basis coefficients non-negative.
bool is_good_filtration(const WeylCombo& f);

/// Scales every key by p: e(mu) -> e(p mu), s(mu) -> s(p mu).
template <Basis B>
Character<B> frobenius_twist(const Character<B>& c, int p) {
  static_assert(B != Basis::Weyl, "the twist of chi(mu) is not a Weyl character");
  Character<B> r;
  for (const auto& [w, k] : c.terms()) r.add(p * w, k);
  return r;
}

}  // namespace stq
