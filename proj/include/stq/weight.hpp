#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>

namespace stq {

/// Integral weight in the fundamental-weight basis: coords[i] = <lambda, alpha_i^vee>.
///
/// Fixed-capacity value type; rank is at most kMaxRank (E8).
class Weight {
 public:
  static constexpr std::size_t kMaxRank = 8;

  Weight() = default;
  explicit Weight(std::size_t rank);
  Weight(std::initializer_list<int> coords);
  explicit Weight(std::span<const int> coords);

  /// Parses `3,2,3`. Whitespace around entries is ignored.
  static Weight parse(std::string_view text);

  std::size_t rank() const { return rank_; }
  int operator[](std::size_t i) const { return c_[i]; }
  int& operator[](std::size_t i) { return c_[i]; }
  std::span<const int> coords() const { return {c_.data(), rank_}; }

  bool is_zero() const;
  /// All coordinates non-negative.
  bool is_dominant() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight& operator*=(int k);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight a) { return a *= k; }
  friend Weight operator*(Weight a, int k) { return a *= k; }
  Weight operator-() const;

  /// Plain dot product of coordinate vectors. With a coroot given in simple-coroot
  /// coordinates this is the natural pairing.
  long dot(const Weight& o) const;

  friend bool operator==(const Weight& a, const Weight& b);
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b);

  std::string to_string() const;

 private:
  std::array<int, kMaxRank> c_{};
  std::uint8_t rank_ = 0;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

}  // namespace stq

template <>
struct std::hash<stq::Weight> : stq::WeightHash {};
