#include "stq/weight.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace stq {

Weight::Weight(std::size_t rank) : rank_(static_cast<std::uint8_t>(rank)) {
  if (rank > kMaxRank) throw std::invalid_argument("weight rank exceeds " + std::to_string(kMaxRank));
}

Weight::Weight(std::initializer_list<int> coords) : Weight(coords.size()) {
  std::copy(coords.begin(), coords.end(), c_.begin());
}

Weight::Weight(std::span<const int> coords) : Weight(coords.size()) {
  std::copy(coords.begin(), coords.end(), c_.begin());
}

Weight Weight::parse(std::string_view text) {
  std::array<int, kMaxRank> buf{};
  std::size_t n = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  if (trim(text).empty()) throw std::invalid_argument("empty weight");
  while (true) {
    auto comma = text.find(',');
    auto field = trim(text.substr(0, comma));
    if (n == kMaxRank) throw std::invalid_argument("too many weight coordinates");
    int v = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
      throw std::invalid_argument("malformed weight coordinate '" + std::string(field) + "'");
    buf[n++] = v;
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Weight(std::span<const int>(buf.data(), n));
}

bool Weight::is_zero() const {
  return std::all_of(c_.begin(), c_.begin() + rank_, [](int v) { return v == 0; });
}

bool Weight::is_dominant() const {
  return std::all_of(c_.begin(), c_.begin() + rank_, [](int v) { return v >= 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  for (std::size_t i = 0; i < rank_; ++i) c_[i] += o.c_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (std::size_t i = 0; i < rank_; ++i) c_[i] -= o.c_[i];
  return *this;
}

Weight& Weight::operator*=(int k) {
  for (std::size_t i = 0; i < rank_; ++i) c_[i] *= k;
  return *this;
}

Weight Weight::operator-() const {
  Weight r = *this;
  for (std::size_t i = 0; i < rank_; ++i) r.c_[i] = -r.c_[i];
  return r;
}

long Weight::dot(const Weight& o) const {
  long s = 0;
  for (std::size_t i = 0; i < rank_; ++i) s += static_cast<long>(c_[i]) * o.c_[i];
  return s;
}

bool operator==(const Weight& a, const Weight& b) {
  return a.rank_ == b.rank_ && std::equal(a.c_.begin(), a.c_.begin() + a.rank_, b.c_.begin());
}

std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
  if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
  for (std::size_t i = 0; i < a.rank_; ++i)
    if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string Weight::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < rank_; ++i) {
    if (i) s += ',';
    s += std::to_string(c_[i]);
  }
  return s;
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull ^ w.rank();
  for (int v : w.coords()) {
    h ^= static_cast<std::uint32_t>(v);
    h *= 0x100000001b3ull;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace stq
