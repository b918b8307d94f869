#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "stq/character.hpp"
#include "stq/order.hpp"
#include "stq/root_system.hpp"

namespace stq {

using AlcoveCoords = std::vector<int>;

struct AlcoveCoordsHash {
  std::size_t operator()(const AlcoveCoords& c) const noexcept;
};

/// Element w of the affine Weyl group, identified with the alcove w.C_0.
///
/// Internally the affine map x -> f x + tau on the normalized arrangement, where
/// x = (nu + rho) / p and the walls are <x, alpha^vee> in Z. The alcove coordinates
/// k_alpha = floor(<x, alpha^vee>) for interior x (one per positive root, in the order
/// of RootSystem::positive_roots()) are the canonical key.
class AffineElement {
 public:
  const AlcoveCoords& alcove_coords() const { return coords_; }
  int length() const { return length_; }
  /// The alcove lies in the dominant chamber (all coordinates >= 0).
  bool is_dominant() const;
  const Weight& translation() const { return tau_; }

  bool operator==(const AffineElement& o) const { return coords_ == o.coords_; }
  std::strong_ordering operator<=>(const AffineElement& o) const { return coords_ <=> o.coords_; }

 private:
  friend class AffineWeylGroup;
  std::vector<int> finite_;      // row-major, acts on fundamental-weight coordinates
  std::vector<int> finite_inv_;  // inverse of finite_
  Weight tau_;                   // root-lattice translation
  AlcoveCoords coords_;
  int length_ = 0;
};

class AffineWeylGroup {
 public:
  explicit AffineWeylGroup(RootSystem roots);

  const RootSystem& roots() const { return roots_; }
  /// s_0, s_1, ..., s_n.
  std::size_t generator_count() const { return roots_.rank() + 1; }

  AffineElement identity() const;
  /// w s_i: the alcove across the i-th wall of w.C_0.
  AffineElement apply_generator(const AffineElement& w, std::size_t i) const;
  /// s_i w.
  AffineElement left_generator(std::size_t i, const AffineElement& w) const;
  /// w_0 w for the longest element w_0 of the finite Weyl group.
  AffineElement left_longest(const AffineElement& w) const;
  AffineElement inverse(const AffineElement& w) const;
  AffineElement from_word(const std::vector<std::size_t>& word) const;
  std::vector<std::size_t> reduced_word(const AffineElement& w) const;

  bool is_right_descent(const AffineElement& w, std::size_t i) const;
  /// Some right descent of w; w must not be the identity.
  std::size_t first_right_descent(const AffineElement& w) const;
  bool bruhat_leq(const AffineElement& x, const AffineElement& w) const;
  /// The lower Bruhat interval [e, w], memoized. Exponential in length; small cases.
  const std::vector<AffineElement>& lower_interval(const AffineElement& w) const;

  /// w . nu = f(nu + rho) + p tau - rho.
  Weight dot(const AffineElement& w, const Weight& nu, int p) const;
  /// w^{-1} . nu.
  Weight dot_inverse(const AffineElement& w, const Weight& nu, int p) const;
  /// The unique w with nu in the dot-action alcove w.C_0. Throws PreconditionError
  /// for p-singular nu.
  AffineElement weight_to_affine(const Weight& nu, int p) const;
  /// Inverse of alcove_coords(); nullopt if no element has these coordinates.
  std::optional<AffineElement> from_alcove_coords(const AlcoveCoords& target) const;

 private:
  AffineElement make(std::vector<int> finite, std::vector<int> finite_inv, Weight tau) const;
  Weight apply_matrix(const std::vector<int>& m, const Weight& v) const;
  std::vector<int> multiply(const std::vector<int>& a, const std::vector<int>& b) const;
  std::optional<AffineElement> walk_to(const AlcoveCoords& target) const;

  RootSystem roots_;
  std::vector<std::vector<int>> simple_mats_;  // s_1 .. s_n
  std::vector<int> s0_mat_;                    // reflection in the highest short root
  std::vector<int> w0_mat_;
  std::vector<int> identity_mat_;

  mutable std::mutex interval_mutex_;
  mutable std::unordered_map<AlcoveCoords, std::unique_ptr<std::vector<AffineElement>>, AlcoveCoordsHash>
      intervals_;
};

/// Polynomial in q with integer coefficients; index = power of q, no trailing zeros.
struct KLPolynomial {
  std::vector<std::int64_t> coefficients;

  bool is_zero() const { return coefficients.empty(); }
  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  std::int64_t coeff(int k) const {
    return k >= 0 && k < static_cast<int>(coefficients.size()) ? coefficients[k] : 0;
  }
  std::int64_t evaluate(std::int64_t q) const;
  void trim();
  std::string to_string() const;
  bool operator==(const KLPolynomial&) const = default;

  static KLPolynomial one() { return KLPolynomial{{1}}; }
};

/// Memo table of Kazhdan-Lusztig polynomials P_{x,w} for one affine Weyl group,
/// keyed by alcove coordinates (p does not enter). Concurrent readers, serialized
/// writers. With a cache file, existing records for this type are loaded and new
/// records are appended.
class KLTable {
 public:
  struct Entry {
    KLPolynomial poly;
    std::int64_t mu = 0;
  };

  explicit KLTable(const RootSystem& roots);
  KLTable(const RootSystem& roots, const std::filesystem::path& cache_file);
  ~KLTable();
  KLTable(const KLTable&) = delete;
  KLTable& operator=(const KLTable&) = delete;

  const AffineWeylGroup& group() const { return group_; }

  std::optional<Entry> find(const AffineElement& x, const AffineElement& w) const;
  /// Idempotent: inserting an existing key is a no-op.
  void insert(const AffineElement& x, const AffineElement& w, const KLPolynomial& poly);
  std::size_t size() const;
  /// Number of records read from the cache file at construction.
  std::size_t loaded() const { return loaded_; }
  void flush();

  static constexpr const char* kFormatHeader = "# stq kl-cache v1";

 private:
  struct PairKey {
    AlcoveCoords x, w;
    bool operator==(const PairKey&) const = default;
  };
  struct PairKeyHash {
    std::size_t operator()(const PairKey& k) const noexcept;
  };

  void load(const std::filesystem::path& path);

  AffineWeylGroup group_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<PairKey, Entry, PairKeyHash> store_;
  std::ofstream out_;
  std::size_t loaded_ = 0;
};

/// P_{x,w} by the classical recursion, memoized in the table.
KLPolynomial kl_polynomial(const AffineElement& x, const AffineElement& w, KLTable& table);

/// For dominant w: every dominant y <= w with P_{w0 y, w0 w}, computed through the
/// canonical basis of the spherical module (only dominant alcoves are visited).
/// Results are stored in the table.
std::vector<std::pair<AffineElement, KLPolynomial>> dominant_kl_column(const AffineElement& w, KLTable& table);

enum class LcfConvention {
  /// ch L(w.0) = sum_y (-1)^{l(w)-l(y)} P_{w0 y, w0 w}(1) chi(y.0)
  LongestConjugated,
  /// ch L(w.0) = sum_y (-1)^{l(w)-l(y)} P_{y, w}(1) chi(y.0)
  Direct,
};

/// Signed coefficients d_y of chi(y.0) in ch L(w.0), over dominant y <= w.
std::vector<std::pair<AffineElement, std::int64_t>> lcf_coefficients_by_element(
    const AffineElement& w, KLTable& table, LcfConvention convention = LcfConvention::LongestConjugated);

/// The same as a Weyl-basis combination keyed by y.0. Requires w dominant and p > h.
WeylCombo lcf_simple_d_coefficients(const AffineElement& w, const AffineContext& ctx, KLTable& table,
                                    LcfConvention convention = LcfConvention::LongestConjugated);

/// ch L(nu) for a dominant p-regular weight nu, by translating the LCF from the
/// alcove of nu: sum_y d_y chi(y . nu_0) with nu_0 = w^{-1} . nu in C_0.
WeylCombo simple_character(const Weight& nu, const AffineContext& ctx, KLTable& table);

/// Pre-computes the dominant columns for every dominant w with l(w) <= max_length.
/// Returns the number of columns computed.
std::size_t warm_kl_table(KLTable& table, int max_length);

}  // namespace stq
