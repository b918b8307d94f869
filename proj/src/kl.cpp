#include "stq/kl.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "stq/errors.hpp"

namespace stq {

namespace {

long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

std::size_t hash_ints(const std::vector<int>& v, std::size_t h = 1469598103934665603ull) {
  for (int x : v) {
    h ^= static_cast<std::size_t>(static_cast<unsigned>(x));
    h *= 1099511628211ull;
  }
  return h;
}

int distance(const AlcoveCoords& a, const AlcoveCoords& b) {
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
  return d;
}

}  // namespace

std::size_t AlcoveCoordsHash::operator()(const AlcoveCoords& c) const noexcept { return hash_ints(c); }

bool AffineElement::is_dominant() const {
  return std::all_of(coords_.begin(), coords_.end(), [](int k) { return k >= 0; });
}

// ---------------------------------------------------------------------------
// AffineWeylGroup

AffineWeylGroup::AffineWeylGroup(RootSystem roots) : roots_(std::move(roots)) {
  const std::size_t n = roots_.rank();
  auto matrix_of = [&](auto&& map) {
    std::vector<int> m(n * n);
    for (std::size_t j = 0; j < n; ++j) {
      Weight e(n);
      e[j] = 1;
      Weight img = map(e);
      for (std::size_t i = 0; i < n; ++i) m[i * n + j] = img[i];
    }
    return m;
  };
  for (std::size_t i = 0; i < n; ++i)
    simple_mats_.push_back(matrix_of([&](const Weight& e) { return roots_.reflect(e, i); }));
  s0_mat_ = matrix_of([&](const Weight& e) { return roots_.reflect_by_root(e, roots_.highest_short_root_index()); });
  w0_mat_ = matrix_of([&](const Weight& e) { return roots_.longest_element_apply(e); });
  identity_mat_ = matrix_of([](const Weight& e) { return e; });
}

Weight AffineWeylGroup::apply_matrix(const std::vector<int>& m, const Weight& v) const {
  const std::size_t n = roots_.rank();
  Weight out(n);
  for (std::size_t i = 0; i < n; ++i) {
    int s = 0;
    for (std::size_t j = 0; j < n; ++j) s += m[i * n + j] * v[j];
    out[i] = s;
  }
  return out;
}

std::vector<int> AffineWeylGroup::multiply(const std::vector<int>& a, const std::vector<int>& b) const {
  const std::size_t n = roots_.rank();
  std::vector<int> c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (int aik = a[i * n + k])
        for (std::size_t j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
  return c;
}

AffineElement AffineWeylGroup::make(std::vector<int> finite, std::vector<int> finite_inv, Weight tau) const {
  AffineElement w;
  w.finite_ = std::move(finite);
  w.finite_inv_ = std::move(finite_inv);
  w.tau_ = std::move(tau);
  const Weight frho = apply_matrix(w.finite_, roots_.rho());
  const auto& pos = roots_.positive_roots();
  w.coords_.resize(pos.size());
  w.length_ = 0;
  for (std::size_t k = 0; k < pos.size(); ++k) {
    // Sample point f(eps rho) + tau.
    int c = static_cast<int>(roots_.pairing(w.tau_, k)) + (roots_.pairing(frho, k) > 0 ? 0 : -1);
    w.coords_[k] = c;
    w.length_ += std::abs(c);
  }
  return w;
}

AffineElement AffineWeylGroup::identity() const { return make(identity_mat_, identity_mat_, roots_.zero()); }

AffineElement AffineWeylGroup::apply_generator(const AffineElement& w, std::size_t i) const {
  if (i > roots_.rank()) throw std::out_of_range("generator index");
  if (i == 0) {
    Weight tau = w.tau_ + apply_matrix(w.finite_, roots_.highest_short_root());
    return make(multiply(w.finite_, s0_mat_), multiply(s0_mat_, w.finite_inv_), std::move(tau));
  }
  const auto& s = simple_mats_[i - 1];
  return make(multiply(w.finite_, s), multiply(s, w.finite_inv_), w.tau_);
}

AffineElement AffineWeylGroup::left_generator(std::size_t i, const AffineElement& w) const {
  if (i > roots_.rank()) throw std::out_of_range("generator index");
  const auto& s = i == 0 ? s0_mat_ : simple_mats_[i - 1];
  Weight tau = apply_matrix(s, w.tau_);
  if (i == 0) tau += roots_.highest_short_root();
  return make(multiply(s, w.finite_), multiply(w.finite_inv_, s), std::move(tau));
}

AffineElement AffineWeylGroup::left_longest(const AffineElement& w) const {
  return make(multiply(w0_mat_, w.finite_), multiply(w.finite_inv_, w0_mat_), apply_matrix(w0_mat_, w.tau_));
}

AffineElement AffineWeylGroup::inverse(const AffineElement& w) const {
  return make(w.finite_inv_, w.finite_, -apply_matrix(w.finite_inv_, w.tau_));
}

AffineElement AffineWeylGroup::from_word(const std::vector<std::size_t>& word) const {
  AffineElement w = identity();
  for (std::size_t i : word) w = apply_generator(w, i);
  return w;
}

std::vector<std::size_t> AffineWeylGroup::reduced_word(const AffineElement& w) const {
  std::vector<std::size_t> word;
  AffineElement cur = w;
  while (cur.length() > 0) {
    std::size_t s = first_right_descent(cur);
    word.push_back(s);
    cur = apply_generator(cur, s);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

bool AffineWeylGroup::is_right_descent(const AffineElement& w, std::size_t i) const {
  return apply_generator(w, i).length() < w.length();
}

std::size_t AffineWeylGroup::first_right_descent(const AffineElement& w) const {
  for (std::size_t i = 0; i < generator_count(); ++i)
    if (is_right_descent(w, i)) return i;
  throw PreconditionError("the identity has no descents");
}

bool AffineWeylGroup::bruhat_leq(const AffineElement& x, const AffineElement& w) const {
  AffineElement a = x, b = w;
  while (true) {
    if (a.length() > b.length()) return false;
    if (a == b) return true;
    if (b.length() == 0) return false;
    // Lifting property: for a descent s of b, a <= b iff min(a, as) <= bs.
    const std::size_t s = first_right_descent(b);
    AffineElement as = apply_generator(a, s);
    if (as.length() < a.length()) a = std::move(as);
    b = apply_generator(b, s);
  }
}

const std::vector<AffineElement>& AffineWeylGroup::lower_interval(const AffineElement& w) const {
  {
    std::lock_guard lock(interval_mutex_);
    if (auto it = intervals_.find(w.alcove_coords()); it != intervals_.end()) return *it->second;
  }
  auto out = std::make_unique<std::vector<AffineElement>>();
  if (w.length() == 0) {
    out->push_back(w);
  } else {
    const std::size_t s = first_right_descent(w);
    const auto& below = lower_interval(apply_generator(w, s));
    std::unordered_set<AlcoveCoords, AlcoveCoordsHash> seen;
    for (const auto& u : below) {
      if (seen.insert(u.alcove_coords()).second) out->push_back(u);
      AffineElement us = apply_generator(u, s);
      if (seen.insert(us.alcove_coords()).second) out->push_back(std::move(us));
    }
    std::sort(out->begin(), out->end(), [](const AffineElement& a, const AffineElement& b) {
      return a.length() != b.length() ? a.length() < b.length() : a < b;
    });
  }
  std::lock_guard lock(interval_mutex_);
  auto [it, inserted] = intervals_.try_emplace(w.alcove_coords(), std::move(out));
  return *it->second;
}

Weight AffineWeylGroup::dot(const AffineElement& w, const Weight& nu, int p) const {
  return apply_matrix(w.finite_, nu + roots_.rho()) + p * w.tau_ - roots_.rho();
}

Weight AffineWeylGroup::dot_inverse(const AffineElement& w, const Weight& nu, int p) const {
  return apply_matrix(w.finite_inv_, nu + roots_.rho() - p * w.tau_) - roots_.rho();
}

std::optional<AffineElement> AffineWeylGroup::walk_to(const AlcoveCoords& target) const {
  AffineElement cur = identity();
  int d = distance(cur.alcove_coords(), target);
  while (d > 0) {
    bool moved = false;
    for (std::size_t i = 0; i < generator_count() && !moved; ++i) {
      AffineElement next = apply_generator(cur, i);
      int dn = distance(next.alcove_coords(), target);
      if (dn < d) {
        cur = std::move(next);
        d = dn;
        moved = true;
      }
    }
    if (!moved) return std::nullopt;
  }
  return cur;
}

AffineElement AffineWeylGroup::weight_to_affine(const Weight& nu, int p) const {
  if (nu.rank() != roots_.rank()) throw PreconditionError("weight rank mismatch");
  const Weight shifted = nu + roots_.rho();
  const auto& pos = roots_.positive_roots();
  AlcoveCoords target(pos.size());
  for (std::size_t k = 0; k < pos.size(); ++k) {
    long a = roots_.pairing(shifted, k);
    if (a % p == 0) throw PreconditionError("weight " + nu.to_string() + " is p-singular");
    target[k] = static_cast<int>(floor_div(a, p));
  }
  auto w = walk_to(target);
  if (!w) throw std::logic_error("alcove walk failed for " + nu.to_string());
  return *w;
}

std::optional<AffineElement> AffineWeylGroup::from_alcove_coords(const AlcoveCoords& target) const {
  if (target.size() != roots_.positive_roots().size()) return std::nullopt;
  return walk_to(target);
}

// ---------------------------------------------------------------------------
// KLPolynomial

std::int64_t KLPolynomial::evaluate(std::int64_t q) const {
  std::int64_t r = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) r = r * q + *it;
  return r;
}

void KLPolynomial::trim() {
  while (!coefficients.empty() && coefficients.back() == 0) coefficients.pop_back();
}

std::string KLPolynomial::to_string() const {
  if (coefficients.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    std::int64_t c = coefficients[k];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    std::int64_t a = c < 0 ? -c : c;
    if (k == 0 || a != 1) os << a;
    if (k >= 1) os << "q";
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// KLTable

std::size_t KLTable::PairKeyHash::operator()(const PairKey& k) const noexcept { return hash_ints(k.w, hash_ints(k.x)); }

KLTable::KLTable(const RootSystem& roots) : group_(roots) {}

KLTable::KLTable(const RootSystem& roots, const std::filesystem::path& cache_file) : group_(roots) {
  load(cache_file);
  const bool fresh = !std::filesystem::exists(cache_file) || std::filesystem::file_size(cache_file) == 0;
  if (cache_file.has_parent_path()) std::filesystem::create_directories(cache_file.parent_path());
  out_.open(cache_file, std::ios::app);
  if (!out_) throw std::runtime_error("cannot open KL cache " + cache_file.string());
  if (fresh) out_ << kFormatHeader << "\n";
}

KLTable::~KLTable() { flush(); }

void KLTable::flush() {
  std::unique_lock lock(mutex_);
  if (out_.is_open()) out_.flush();
}

void KLTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return;
  std::string line;
  if (!std::getline(in, line)) return;
  if (line != kFormatHeader) throw std::runtime_error("unrecognized KL cache format in " + path.string());
  const auto& rs = group_.roots();
  const std::size_t npos = rs.positive_roots().size();
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (std::size_t bar; (bar = line.find('|', start)) != std::string::npos; start = bar + 1)
      fields.push_back(line.substr(start, bar - start));
    fields.push_back(line.substr(start));
    if (fields.size() != 5) throw std::runtime_error("malformed KL cache record: " + line);
    std::istringstream head(fields[0]);
    char type = 0;
    std::size_t rank = 0;
    head >> type >> rank;
    if (type != rs.type() || rank != rs.rank()) continue;
    auto ints = [&](const std::string& s) {
      std::istringstream is(s);
      std::vector<long long> v;
      for (long long x; is >> x;) v.push_back(x);
      return v;
    };
    PairKey key;
    for (long long x : ints(fields[1])) key.x.push_back(static_cast<int>(x));
    for (long long x : ints(fields[2])) key.w.push_back(static_cast<int>(x));
    if (key.x.size() != npos || key.w.size() != npos) throw std::runtime_error("malformed KL cache record: " + line);
    Entry e;
    for (long long c : ints(fields[3])) e.poly.coefficients.push_back(c);
    e.poly.trim();
    auto mu = ints(fields[4]);
    e.mu = mu.empty() ? 0 : mu[0];
    if (store_.emplace(std::move(key), std::move(e)).second) ++loaded_;
  }
}

std::optional<KLTable::Entry> KLTable::find(const AffineElement& x, const AffineElement& w) const {
  std::shared_lock lock(mutex_);
  auto it = store_.find(PairKey{x.alcove_coords(), w.alcove_coords()});
  if (it == store_.end()) return std::nullopt;
  return it->second;
}

void KLTable::insert(const AffineElement& x, const AffineElement& w, const KLPolynomial& poly) {
  Entry e{poly, 0};
  const int gap = w.length() - x.length();
  if (gap % 2 == 1) e.mu = poly.coeff((gap - 1) / 2);
  std::unique_lock lock(mutex_);
  auto [it, inserted] = store_.try_emplace(PairKey{x.alcove_coords(), w.alcove_coords()}, e);
  if (!inserted || !out_.is_open()) return;
  const auto& rs = group_.roots();
  out_ << rs.type() << ' ' << rs.rank() << " |";
  for (int c : x.alcove_coords()) out_ << ' ' << c;
  out_ << " |";
  for (int c : w.alcove_coords()) out_ << ' ' << c;
  out_ << " |";
  for (auto c : poly.coefficients) out_ << ' ' << c;
  out_ << " | " << e.mu << '\n';
}

std::size_t KLTable::size() const {
  std::shared_lock lock(mutex_);
  return store_.size();
}

// ---------------------------------------------------------------------------
// Classical recursion

KLPolynomial kl_polynomial(const AffineElement& x, const AffineElement& w, KLTable& table) {
  const auto& g = table.group();
  if (x == w) return KLPolynomial::one();
  if (x.length() >= w.length() || !g.bruhat_leq(x, w)) return {};
  if (auto e = table.find(x, w)) return e->poly;

  const std::size_t s = g.first_right_descent(w);
  AffineElement xs = g.apply_generator(x, s);
  KLPolynomial result;
  if (xs.length() < x.length()) {
    result = kl_polynomial(xs, w, table);
  } else {
    // w = vs with v < w and xs > x:
    // P_{x,w} = q P_{xs,v} + P_{x,v} - sum_{z : zs < z} mu(z,v) q^{(l(w)-l(z))/2} P_{x,z}.
    const AffineElement v = g.apply_generator(w, s);
    auto add = [&](const KLPolynomial& p, int shift, std::int64_t scale) {
      if (p.is_zero()) return;
      if (result.coefficients.size() < p.coefficients.size() + shift)
        result.coefficients.resize(p.coefficients.size() + shift, 0);
      for (std::size_t k = 0; k < p.coefficients.size(); ++k) result.coefficients[k + shift] += scale * p.coefficients[k];
    };
    add(kl_polynomial(xs, v, table), 1, 1);
    add(kl_polynomial(x, v, table), 0, 1);
    for (const AffineElement& z : g.lower_interval(v)) {
      const int gap = v.length() - z.length();
      if (z.length() < x.length() || gap <= 0 || gap % 2 == 0) continue;
      if (!g.is_right_descent(z, s) || !g.bruhat_leq(x, z)) continue;
      const std::int64_t mu = kl_polynomial(z, v, table).coeff((gap - 1) / 2);
      if (mu == 0) continue;
      add(kl_polynomial(x, z, table), (w.length() - z.length()) / 2, -mu);
    }
    result.trim();
  }
  table.insert(x, w, result);
  return result;
}

// ---------------------------------------------------------------------------
// Spherical module on dominant alcoves

namespace {

using VPoly = std::vector<std::int64_t>;  // index = power of v

void vadd(VPoly& a, const VPoly& b, int shift, std::int64_t scale) {
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (b[k] == 0) continue;
    const int idx = static_cast<int>(k) + shift;
    if (idx < 0) throw std::logic_error("negative power in the spherical module");
    if (a.size() <= static_cast<std::size_t>(idx)) a.resize(idx + 1, 0);
    a[idx] += scale * b[k];
  }
}

bool vzero(const VPoly& a) {
  return std::all_of(a.begin(), a.end(), [](std::int64_t c) { return c == 0; });
}

int smallest_prime_above(int n) {
  int p = n + 1;
  while (!is_prime(p)) ++p;
  return p;
}

// Dominant elements y <= w, found as the dot-orbit down-set of w.0 for an auxiliary p
// for which 0 is regular.
std::vector<AffineElement> dominant_lower_set(const AffineElement& w, const AffineWeylGroup& g) {
  const RootSystem& rs = g.roots();
  const int p = smallest_prime_above(rs.coxeter_number());
  AffineContext ctx(rs, p);
  std::vector<AffineElement> out;
  for (const Weight& mu : up_down_set(g.dot(w, rs.zero(), p) + rs.rho(), ctx))
    out.push_back(g.weight_to_affine(mu - rs.rho(), p));
  return out;
}

VPoly to_vpoly(const KLPolynomial& P, int gap) {
  VPoly n(static_cast<std::size_t>(gap) + 1, 0);
  for (int k = 0; k <= P.degree(); ++k) n[gap - 2 * k] += P.coefficients[k];
  return n;
}

KLPolynomial to_kl(const VPoly& n, int gap) {
  KLPolynomial P;
  for (std::size_t k = 0; k < n.size(); ++k) {
    if (n[k] == 0) continue;
    const int e = gap - static_cast<int>(k);
    if (e < 0 || e % 2 != 0) throw std::logic_error("spherical module coefficient has the wrong parity");
    const std::size_t idx = static_cast<std::size_t>(e / 2);
    if (P.coefficients.size() <= idx) P.coefficients.resize(idx + 1, 0);
    P.coefficients[idx] += n[k];
  }
  P.trim();
  return P;
}

class SphericalSolver {
 public:
  using Column = std::vector<std::pair<AffineElement, VPoly>>;

  explicit SphericalSolver(KLTable& table) : table_(table), g_(table.group()) {}

  const Column& canonical(const AffineElement& w) {
    if (auto it = memo_.find(w.alcove_coords()); it != memo_.end()) return it->second;
    Column col = from_table(w);
    if (col.empty()) {
      col = compute(w);
      // The diagonal entry goes in last and marks the column as complete.
      const AffineElement w0w = g_.left_longest(w);
      for (const auto& [y, n] : col)
        if (!(y == w)) table_.insert(g_.left_longest(y), w0w, to_kl(n, w.length() - y.length()));
      table_.insert(w0w, w0w, KLPolynomial::one());
    }
    return memo_.emplace(w.alcove_coords(), std::move(col)).first->second;
  }

 private:
  Column from_table(const AffineElement& w) {
    Column col;
    const AffineElement w0w = g_.left_longest(w);
    if (!table_.find(w0w, w0w)) return col;
    for (const AffineElement& y : dominant_lower_set(w, g_)) {
      auto e = table_.find(g_.left_longest(y), w0w);
      if (!e) return {};
      if (!e->poly.is_zero()) col.emplace_back(y, to_vpoly(e->poly, w.length() - y.length()));
    }
    return col;
  }

  Column compute(const AffineElement& w) {
    if (w.length() == 0) return {{w, VPoly{1}}};
    const std::size_t s = g_.first_right_descent(w);
    const AffineElement ws = g_.apply_generator(w, s);

    // Ordered by decreasing length so corrections are applied top-down.
    using Key = std::pair<int, AlcoveCoords>;
    std::map<Key, std::pair<AffineElement, VPoly>> acc;
    auto slot = [&](const AffineElement& y) -> VPoly& {
      auto [it, inserted] = acc.try_emplace(Key{-y.length(), y.alcove_coords()}, y, VPoly{});
      return it->second.second;
    };
    // M_y C_s = M_{ys} + v^{+-1} M_y, or (v + v^{-1}) M_y when ys leaves the dominant chamber.
    for (const auto& [y, n] : canonical(ws)) {
      AffineElement ys = g_.apply_generator(y, s);
      if (!ys.is_dominant()) {
        vadd(slot(y), n, 1, 1);
        vadd(slot(y), n, -1, 1);
        continue;
      }
      vadd(slot(ys), n, 0, 1);
      vadd(slot(y), n, ys.length() > y.length() ? 1 : -1, 1);
    }
    for (auto it = acc.begin(); it != acc.end(); ++it) {
      if (it->second.first == w) continue;
      VPoly& n = it->second.second;
      if (n.empty() || n[0] == 0) continue;
      const std::int64_t c = n[0];
      const AffineElement z = it->second.first;
      for (const auto& [y, m] : canonical(z)) vadd(slot(y), m, 0, -c);
    }
    Column col;
    for (auto& [key, entry] : acc) {
      if (vzero(entry.second)) continue;
      while (entry.second.back() == 0) entry.second.pop_back();
      if (entry.first == w ? entry.second != VPoly{1} : entry.second[0] != 0)
        throw std::logic_error("spherical canonical basis normalization failed");
      col.emplace_back(std::move(entry.first), std::move(entry.second));
    }
    return col;
  }

  KLTable& table_;
  const AffineWeylGroup& g_;
  std::unordered_map<AlcoveCoords, Column, AlcoveCoordsHash> memo_;
};

}  // namespace

std::vector<std::pair<AffineElement, KLPolynomial>> dominant_kl_column(const AffineElement& w, KLTable& table) {
  if (!w.is_dominant()) throw PreconditionError("dominant_kl_column needs a dominant alcove");
  SphericalSolver solver(table);
  std::vector<std::pair<AffineElement, KLPolynomial>> out;
  for (const auto& [y, n] : solver.canonical(w)) out.emplace_back(y, to_kl(n, w.length() - y.length()));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::vector<std::pair<AffineElement, std::int64_t>> lcf_coefficients_by_element(const AffineElement& w,
                                                                                 KLTable& table,
                                                                                 LcfConvention convention) {
  if (!w.is_dominant()) throw PreconditionError("the LCF needs w.0 dominant");
  std::vector<std::pair<AffineElement, std::int64_t>> out;
  auto sign = [&](const AffineElement& y) { return (w.length() - y.length()) % 2 ? -1 : 1; };
  if (convention == LcfConvention::LongestConjugated) {
    for (const auto& [y, P] : dominant_kl_column(w, table))
      if (std::int64_t v = P.evaluate(1)) out.emplace_back(y, sign(y) * v);
  } else {
    for (const AffineElement& y : dominant_lower_set(w, table.group()))
      if (std::int64_t v = kl_polynomial(y, w, table).evaluate(1)) out.emplace_back(y, sign(y) * v);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return out;
}

WeylCombo lcf_simple_d_coefficients(const AffineElement& w, const AffineContext& ctx, KLTable& table,
                                    LcfConvention convention) {
  ctx.require_p_above_coxeter();
  if (table.group().roots().label() != ctx.roots.label()) throw PreconditionError("KL table is for another type");
  WeylCombo out;
  for (const auto& [y, d] : lcf_coefficients_by_element(w, table, convention))
    out.add(table.group().dot(y, ctx.roots.zero(), ctx.p), d);
  return out;
}

WeylCombo simple_character(const Weight& nu, const AffineContext& ctx, KLTable& table) {
  ctx.require_p_above_coxeter();
  if (!nu.is_dominant()) throw PreconditionError("simple_character needs a dominant weight");
  const auto& g = table.group();
  const AffineElement w = g.weight_to_affine(nu, ctx.p);
  const Weight nu0 = g.dot_inverse(w, nu, ctx.p);
  WeylCombo out;
  for (const auto& [y, d] : lcf_coefficients_by_element(w, table)) out.add(g.dot(y, nu0, ctx.p), d);
  return out;
}

std::size_t warm_kl_table(KLTable& table, int max_length) {
  const auto& g = table.group();
  std::vector<AffineElement> frontier{g.identity()};
  std::unordered_set<AlcoveCoords, AlcoveCoordsHash> seen{frontier[0].alcove_coords()};
  SphericalSolver solver(table);
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const AffineElement w = frontier[head];
    solver.canonical(w);
    if (w.length() >= max_length) continue;
    for (std::size_t i = 0; i < g.generator_count(); ++i) {
      AffineElement next = g.apply_generator(w, i);
      if (next.length() > w.length() && next.is_dominant() && seen.insert(next.alcove_coords()).second)
        frontier.push_back(std::move(next));
    }
  }
  return frontier.size();
}

}  // namespace stq
