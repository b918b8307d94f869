#pragma once

// Brute-force reference computations, independent of the library's Freudenthal and
// Brauer code paths. Used only by tests.

#include <map>
#include <vector>

#include "stq/character.hpp"
#include "stq/root_system.hpp"

namespace stq::testing {

/// Kostant partition function on simple-root coordinates.
class KostantPartition {
 public:
  explicit KostantPartition(const RootSystem& rs) : rs_(rs) {
    for (const auto& r : rs.positive_roots()) {
      std::vector<long> v(rs.rank());
      for (std::size_t i = 0; i < rs.rank(); ++i) v[i] = r.root_coords[i];
      roots_.push_back(v);
    }
  }

  long operator()(const std::vector<long>& beta) { return count(beta, 0); }

 private:
  long count(const std::vector<long>& beta, std::size_t from) {
    for (long v : beta)
      if (v < 0) return 0;
    if (from == roots_.size()) {
      for (long v : beta)
        if (v != 0) return 0;
      return 1;
    }
    auto key = std::make_pair(beta, from);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    long total = 0;
    std::vector<long> rest = beta;
    while (true) {
      total += count(rest, from + 1);
      bool ok = true;
      for (std::size_t i = 0; i < rest.size(); ++i) {
        rest[i] -= roots_[from][i];
        if (rest[i] < 0) ok = false;
      }
      if (!ok) break;
    }
    memo_.emplace(key, total);
    return total;
  }

  const RootSystem& rs_;
  std::vector<std::vector<long>> roots_;
  std::map<std::pair<std::vector<long>, std::size_t>, long> memo_;
};

/// chi(lambda) in the orbit basis via Kostant's multiplicity formula, an alternating
/// sum over the full Weyl group.
inline OrbitCharacter kostant_weyl_character(const RootSystem& rs, const Weight& lambda) {
  KostantPartition partition(rs);
  auto group = rs.weyl_group_elements();
  const Weight top = lambda + rs.rho();
  long bound = rs.pairing(lambda, rs.highest_coroot());
  OrbitCharacter out;
  Weight mu(rs.rank());
  while (true) {
    long m = 0;
    for (const auto& w : group) {
      auto coords = rs.root_coordinates(w.apply(top) - (mu + rs.rho()));
      if (!coords) continue;
      long c = partition(*coords);
      m += (w.length % 2 ? -c : c);
    }
    out.add(mu, m);
    std::size_t i = 0;
    while (i < rs.rank() && mu[i] == bound) mu[i++] = 0;
    if (i == rs.rank()) break;
    ++mu[i];
  }
  return out;
}

/// chi(lambda) as a full character, via Kostant.
inline FullCharacter kostant_full(const RootSystem& rs, const Weight& lambda) {
  FullCharacter out;
  const OrbitCharacter orbits = kostant_weyl_character(rs, lambda);
  for (const auto& [mu, c] : orbits.terms())
    for (const Weight& w : rs.weyl_orbit(mu)) out.add(w, c);
  return out;
}

/// Weyl-basis coordinates of a W-invariant full character, by peeling off Kostant
/// characters from the top.
inline WeylCombo full_to_weyl_bruteforce(const RootSystem& rs, FullCharacter f) {
  WeylCombo out;
  while (!f.empty()) {
    const Weight* best = nullptr;
    long best_h = 0;
    for (const auto& [w, c] : f.terms()) {
      if (!w.is_dominant()) continue;
      long h = rs.scaled_height(w);
      if (!best || h > best_h) best = &w, best_h = h;
    }
    Weight top = *best;
    std::int64_t c = f.coeff(top);
    out.add(top, c);
    FullCharacter chi = kostant_full(rs, top);
    chi *= c;
    f -= chi;
  }
  return out;
}

}  // namespace stq::testing
