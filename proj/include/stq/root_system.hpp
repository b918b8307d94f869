#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stq/weight.hpp"

namespace stq {

/// A positive root with its coroot, both carried in parallel.
struct PositiveRoot {
  Weight weight;       ///< fundamental-weight coordinates
  Weight root_coords;  ///< simple-root coordinates
  Weight coroot;       ///< simple-coroot coordinates of the coroot
  int height = 0;      ///< height of the root
};

/// Finite Weyl group element as an integer matrix acting on fundamental-weight
/// coordinates. Only produced by RootSystem::weyl_group_elements().
struct WeylElement {
  std::vector<int> matrix;  ///< row-major rank x rank
  int length = 0;

  Weight apply(const Weight& w) const;
};

/// Root datum of a simple, simply connected type, generated from its Cartan matrix.
///
/// Conventions: cartan(i, j) = <alpha_j, alpha_i^vee>, so simple roots are the columns
/// of the Cartan matrix in the fundamental-weight basis. Bourbaki node numbering.
/// Immutable after construction.
class RootSystem {
 public:
  /// Throws std::invalid_argument for an unsupported type/rank combination.
  static RootSystem build(char type, int rank);
  /// Parses labels such as "A3", "g2".
  static RootSystem from_label(std::string_view label);

  char type() const { return type_; }
  std::size_t rank() const { return rank_; }
  std::string label() const { return std::string(1, type_) + std::to_string(rank_); }

  int cartan(std::size_t i, std::size_t j) const { return cartan_[i * rank_ + j]; }
  const Weight& simple_root(std::size_t i) const { return simple_roots_[i]; }
  const std::vector<PositiveRoot>& positive_roots() const { return roots_; }
  const Weight& rho() const { return rho_; }
  Weight zero() const { return Weight(rank_); }

  /// Highest coroot alpha_0^vee in simple-coroot coordinates.
  const Weight& highest_coroot() const { return roots_[highest_short_].coroot; }
  /// Highest short root alpha_0 in fundamental-weight coordinates.
  const Weight& highest_short_root() const { return roots_[highest_short_].weight; }
  std::size_t highest_short_root_index() const { return highest_short_; }
  int coxeter_number() const { return coxeter_; }

  /// <lambda, coroot> for a coroot given in simple-coroot coordinates.
  long pairing(const Weight& lambda, const Weight& coroot) const { return lambda.dot(coroot); }
  /// <lambda, beta^vee> for the positive root with the given index.
  long pairing(const Weight& lambda, std::size_t root_index) const {
    return lambda.dot(roots_[root_index].coroot);
  }

  Weight reflect(const Weight& lambda, std::size_t simple_index) const;
  Weight reflect_by_root(const Weight& lambda, std::size_t root_index) const;

  /// W-orbit of lambda, sorted lexicographically.
  std::vector<Weight> weyl_orbit(const Weight& lambda) const;
  Weight dominant_representative(const Weight& lambda) const;
  /// mu <= lambda in the dominance order (lambda - mu in N-span of simple roots).
  bool dominance_leq(const Weight& mu, const Weight& lambda) const;
  /// Simple-root coordinates of a weight lying in the root lattice, nullopt otherwise.
  std::optional<std::vector<long>> root_coordinates(const Weight& w) const;
  /// det(C) times the sum of simple-root coordinates. Strictly increases by a positive
  /// amount when a positive root is added.
  long scaled_height(const Weight& w) const;

  /// det(C) times a W-invariant form normalized so that short roots have squared length 2.
  long scaled_form(const Weight& a, const Weight& b) const;
  long cartan_determinant() const { return det_; }

  /// w0(lambda) for the longest element of W.
  Weight longest_element_apply(const Weight& lambda) const;
  /// -w0(lambda).
  Weight dual_weight(const Weight& lambda) const { return -longest_element_apply(lambda); }

  std::uint64_t weyl_group_order() const;
  /// Full listing of W; test utility, refuses groups of order > 50000.
  std::vector<WeylElement> weyl_group_elements() const;

 private:
  RootSystem() = default;
  void finish();

  char type_ = 'A';
  std::size_t rank_ = 0;
  std::vector<int> cartan_;
  std::vector<long> adjugate_;  // det * C^{-1}
  long det_ = 1;
  std::vector<int> half_norm_;  // (alpha_i, alpha_i) / 2 with short roots = 1
  std::vector<long> gram_;      // det * (varpi_i, varpi_k)
  std::vector<Weight> simple_roots_;
  std::vector<PositiveRoot> roots_;
  std::vector<std::size_t> dual_perm_;  // -w0 varpi_i = varpi_{dual_perm_[i]}
  Weight rho_;
  std::size_t highest_short_ = 0;
  int coxeter_ = 0;
};

}  // namespace stq
