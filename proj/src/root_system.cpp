#include "stq/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace stq {

namespace {

struct Fraction {
  long long num = 0;
  long long den = 1;

  void normalize() {
    if (den < 0) num = -num, den = -den;
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) num /= g, den /= g;
  }
  friend Fraction operator-(Fraction a, Fraction b) {
    Fraction r{a.num * b.den - b.num * a.den, a.den * b.den};
    r.normalize();
    return r;
  }
  friend Fraction operator*(Fraction a, Fraction b) {
    Fraction r{a.num * b.num, a.den * b.den};
    r.normalize();
    return r;
  }
  friend Fraction operator/(Fraction a, Fraction b) {
    Fraction r{a.num * b.den, a.den * b.num};
    r.normalize();
    return r;
  }
};

std::vector<int> cartan_matrix(char type, int n) {
  std::vector<int> c(static_cast<std::size_t>(n * n), 0);
  auto at = [&](int i, int j) -> int& { return c[static_cast<std::size_t>(i * n + j)]; };
  auto link = [&](int i, int j) { at(i, j) = at(j, i) = -1; };
  for (int i = 0; i < n; ++i) at(i, i) = 2;
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      at(n - 1, n - 2) = -2;  // alpha_n short
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      at(n - 2, n - 1) = -2;  // alpha_n long
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      link(1, 2);
      link(2, 3);
      at(2, 1) = -2;  // alpha_3, alpha_4 short
      break;
    case 'G':
      link(0, 1);
      at(0, 1) = -3;  // alpha_1 short
      break;
    default:
      break;
  }
  return c;
}

bool admissible(char type, int n) {
  switch (type) {
    case 'A': return n >= 1 && n <= static_cast<int>(Weight::kMaxRank);
    case 'B':
    case 'C': return n >= 2 && n <= static_cast<int>(Weight::kMaxRank);
    case 'D': return n >= 4 && n <= static_cast<int>(Weight::kMaxRank);
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
    default: return false;
  }
}

}  // namespace

Weight WeylElement::apply(const Weight& w) const {
  const std::size_t n = w.rank();
  Weight r(n);
  for (std::size_t i = 0; i < n; ++i) {
    long s = 0;
    for (std::size_t j = 0; j < n; ++j) s += static_cast<long>(matrix[i * n + j]) * w[j];
    r[i] = static_cast<int>(s);
  }
  return r;
}

RootSystem RootSystem::build(char type, int rank) {
  type = static_cast<char>(std::toupper(static_cast<unsigned char>(type)));
  if (!admissible(type, rank))
    throw std::invalid_argument("unsupported root system " + std::string(1, type) + std::to_string(rank));
  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = static_cast<std::size_t>(rank);
  rs.cartan_ = cartan_matrix(type, rank);
  rs.finish();
  return rs;
}

RootSystem RootSystem::from_label(std::string_view label) {
  if (label.size() < 2) throw std::invalid_argument("malformed root system label '" + std::string(label) + "'");
  int rank = 0;
  for (char ch : label.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw std::invalid_argument("malformed root system label '" + std::string(label) + "'");
    rank = rank * 10 + (ch - '0');
    if (rank > 100) break;
  }
  return build(label[0], rank);
}

void RootSystem::finish() {
  const std::size_t n = rank_;

  // Exact inverse via Gauss-Jordan over the rationals.
  std::vector<Fraction> a(n * n), inv(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a[i * n + j] = {cartan(i, j), 1};
      inv[i * n + j] = {i == j ? 1 : 0, 1};
    }
  Fraction det{1, 1};
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (a[piv * n + col].num == 0) ++piv;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a[piv * n + j], a[col * n + j]);
        std::swap(inv[piv * n + j], inv[col * n + j]);
      }
      det = det * Fraction{-1, 1};
    }
    Fraction pv = a[col * n + col];
    det = det * pv;
    for (std::size_t j = 0; j < n; ++j) {
      a[col * n + j] = a[col * n + j] / pv;
      inv[col * n + j] = inv[col * n + j] / pv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r * n + col].num == 0) continue;
      Fraction f = a[r * n + col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r * n + j] = a[r * n + j] - f * a[col * n + j];
        inv[r * n + j] = inv[r * n + j] - f * inv[col * n + j];
      }
    }
  }
  det_ = det.num / det.den;
  adjugate_.resize(n * n);
  for (std::size_t k = 0; k < n * n; ++k) {
    Fraction v = inv[k] * Fraction{det_, 1};
    adjugate_[k] = v.num / v.den;
  }

  // Symmetrizer: d_i C_ij = d_j C_ji, propagated along the Dynkin diagram.
  std::vector<Fraction> d(n, Fraction{0, 1});
  d[0] = {1, 1};
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i].num != 0 && d[j].num == 0 && cartan(i, j) != 0) {
          d[j] = d[i] * Fraction{cartan(i, j), 1} / Fraction{cartan(j, i), 1};
          changed = true;
        }
  }
  long long lcm_den = 1;
  for (auto& f : d) lcm_den = std::lcm(lcm_den, f.den);
  long long g = 0;
  for (auto& f : d) g = std::gcd(g, f.num * (lcm_den / f.den));
  half_norm_.resize(n);
  for (std::size_t i = 0; i < n; ++i) half_norm_[i] = static_cast<int>(d[i].num * (lcm_den / d[i].den) / g);

  gram_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) gram_[i * n + k] = adjugate_[i * n + k] * half_norm_[i];

  simple_roots_.clear();
  for (std::size_t j = 0; j < n; ++j) {
    Weight r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = cartan(i, j);
    simple_roots_.push_back(r);
  }

  // Breadth-first closure of the simple roots under simple reflections.
  roots_.clear();
  std::unordered_set<Weight> seen;
  std::deque<std::pair<Weight, Weight>> queue;  // (weight coords, root coords)
  for (std::size_t j = 0; j < n; ++j) {
    Weight e(n);
    e[j] = 1;
    seen.insert(simple_roots_[j]);
    queue.emplace_back(simple_roots_[j], e);
  }
  while (!queue.empty()) {
    auto [w, r] = queue.front();
    queue.pop_front();
    PositiveRoot pr;
    pr.weight = w;
    pr.root_coords = r;
    pr.height = 0;
    for (int v : r.coords()) pr.height += v;
    roots_.push_back(pr);
    for (std::size_t i = 0; i < n; ++i) {
      int c = w[i];
      if (c == 0) continue;
      Weight r2 = r;
      r2[i] -= c;
      if (!r2.is_dominant()) continue;  // negative root
      Weight w2 = w - c * simple_roots_[i];
      if (seen.insert(w2).second) queue.emplace_back(w2, r2);
    }
  }
  std::stable_sort(roots_.begin(), roots_.end(), [](const PositiveRoot& x, const PositiveRoot& y) {
    return x.height != y.height ? x.height < y.height : x.root_coords < y.root_coords;
  });

  // Coroots: beta^vee = sum_j r_j (d_j / d_beta) alpha_j^vee.
  for (auto& pr : roots_) {
    long half_len2 = 0;  // (beta, beta) / 2 in units where (alpha_i, alpha_i) / 2 = d_i
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        half_len2 += static_cast<long>(pr.root_coords[i]) * pr.root_coords[j] * half_norm_[i] * cartan(i, j);
    half_len2 /= 2;
    pr.coroot = Weight(n);
    for (std::size_t j = 0; j < n; ++j) {
      long num = static_cast<long>(pr.root_coords[j]) * half_norm_[j];
      if (num % half_len2 != 0) throw std::logic_error("non-integral coroot");
      pr.coroot[j] = static_cast<int>(num / half_len2);
    }
  }

  highest_short_ = 0;
  int best = -1;
  for (std::size_t k = 0; k < roots_.size(); ++k) {
    int h = 0;
    for (int v : roots_[k].coroot.coords()) h += v;
    if (h > best) best = h, highest_short_ = k;
  }

  rho_ = Weight(n);
  for (std::size_t i = 0; i < n; ++i) rho_[i] = 1;
  coxeter_ = static_cast<int>(pairing(rho_, highest_coroot())) + 1;

  dual_perm_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Weight v(n);
    v[i] = -1;
    Weight d2 = dominant_representative(v);
    for (std::size_t k = 0; k < n; ++k)
      if (d2[k] == 1) dual_perm_[i] = k;
  }
}

Weight RootSystem::reflect(const Weight& lambda, std::size_t i) const {
  return lambda - lambda[i] * simple_roots_[i];
}

Weight RootSystem::reflect_by_root(const Weight& lambda, std::size_t k) const {
  return lambda - static_cast<int>(pairing(lambda, k)) * roots_[k].weight;
}

std::vector<Weight> RootSystem::weyl_orbit(const Weight& lambda) const {
  Weight start = dominant_representative(lambda);
  std::vector<Weight> out{start};
  std::unordered_set<Weight> seen{start};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (std::size_t i = 0; i < rank_; ++i) {
      // Reflecting only along positive coordinates walks the orbit downward from the
      // dominant element and still reaches every element.
      if (out[head][i] <= 0) continue;
      Weight nxt = reflect(out[head], i);
      if (seen.insert(nxt).second) out.push_back(nxt);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Weight RootSystem::dominant_representative(const Weight& lambda) const {
  Weight x = lambda;
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t i = 0; i < rank_; ++i)
      if (x[i] < 0) {
        x = reflect(x, i);
        moved = true;
      }
  }
  return x;
}

std::optional<std::vector<long>> RootSystem::root_coordinates(const Weight& w) const {
  std::vector<long> r(rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    long s = 0;
    for (std::size_t j = 0; j < rank_; ++j) s += adjugate_[i * rank_ + j] * w[j];
    if (s % det_ != 0) return std::nullopt;
    r[i] = s / det_;
  }
  return r;
}

bool RootSystem::dominance_leq(const Weight& mu, const Weight& lambda) const {
  auto r = root_coordinates(lambda - mu);
  return r && std::all_of(r->begin(), r->end(), [](long v) { return v >= 0; });
}

long RootSystem::scaled_height(const Weight& w) const {
  long s = 0;
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j) s += adjugate_[i * rank_ + j] * w[j];
  return s;
}

long RootSystem::scaled_form(const Weight& a, const Weight& b) const {
  long s = 0;
  for (std::size_t i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    long row = 0;
    for (std::size_t k = 0; k < rank_; ++k) row += gram_[i * rank_ + k] * b[k];
    s += a[i] * row;
  }
  return s;
}

Weight RootSystem::longest_element_apply(const Weight& lambda) const {
  Weight r(rank_);
  for (std::size_t i = 0; i < rank_; ++i) r[dual_perm_[i]] -= lambda[i];
  return r;
}

std::uint64_t RootSystem::weyl_group_order() const {
  auto fact = [](std::uint64_t k) {
    std::uint64_t f = 1;
    for (std::uint64_t i = 2; i <= k; ++i) f *= i;
    return f;
  };
  const std::uint64_t n = rank_;
  switch (type_) {
    case 'A': return fact(n + 1);
    case 'B':
    case 'C': return (std::uint64_t{1} << n) * fact(n);
    case 'D': return (std::uint64_t{1} << (n - 1)) * fact(n);
    case 'E': return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case 'F': return 1152;
    default: return 12;
  }
}

std::vector<WeylElement> RootSystem::weyl_group_elements() const {
  if (weyl_group_order() > 50000) throw std::invalid_argument("Weyl group too large to list");
  const std::size_t n = rank_;
  // An element is determined by its image of rho (a regular weight).
  std::vector<WeylElement> out;
  std::unordered_map<Weight, std::size_t> index;
  WeylElement id;
  id.matrix.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) id.matrix[i * n + i] = 1;
  out.push_back(id);
  index.emplace(rho_, 0);
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (std::size_t s = 0; s < n; ++s) {
      // Left multiplication by s_s: new matrix = S * M.
      const auto& m = out[head].matrix;
      WeylElement e;
      e.matrix.assign(n * n, 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          // (s x)_i = x_i - x_s * C_is
          int v = m[i * n + j] - m[s * n + j] * cartan(i, s);
          e.matrix[i * n + j] = v;
        }
      Weight image = e.apply(rho_);
      if (index.count(image)) continue;
      e.length = out[head].length + 1;
      index.emplace(image, out.size());
      out.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace stq
