#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "stq/root_system.hpp"
#include "test_support.hpp"

using stq::RootSystem;
using stq::Weight;
using stq::testing::find_root;
using stq::testing::random_weight;

TEST_CASE("build_root_system: rank-1 and A3 counts") {
  auto a1 = RootSystem::build('A', 1);
  CHECK(a1.positive_roots().size() == 1);
  CHECK(a1.coxeter_number() == 2);

  auto a3 = RootSystem::build('A', 3);
  CHECK(a3.positive_roots().size() == 6);
  CHECK(a3.coxeter_number() == 4);

  auto a4 = RootSystem::build('A', 4);
  CHECK(a4.pairing(a4.rho(), a4.highest_coroot()) == 4);
}

TEST_CASE("build_root_system: all simple types") {
  struct Row {
    char type;
    int rank;
    std::size_t roots;
    int h;
    std::uint64_t order;
  };
  const Row table[] = {
      {'A', 2, 3, 3, 6},        {'A', 7, 28, 8, 40320},  {'B', 2, 4, 4, 8},     {'B', 3, 9, 6, 48},
      {'C', 3, 9, 6, 48},       {'C', 4, 16, 8, 384},    {'D', 4, 12, 6, 192},  {'D', 5, 20, 8, 1920},
      {'E', 6, 36, 12, 51840},  {'E', 7, 63, 18, 2903040}, {'E', 8, 120, 30, 696729600},
      {'F', 4, 24, 12, 1152},   {'G', 2, 6, 6, 12},
  };
  for (const auto& row : table) {
    CAPTURE(row.type);
    CAPTURE(row.rank);
    auto rs = RootSystem::build(row.type, row.rank);
    CHECK(rs.positive_roots().size() == row.roots);
    CHECK(rs.coxeter_number() == row.h);
    CHECK(rs.weyl_group_order() == row.order);
    if (row.order < 100000) CHECK(rs.weyl_orbit(rs.rho()).size() == row.order);
  }
}

TEST_CASE("build_root_system: unsupported combinations") {
  CHECK_THROWS_AS(RootSystem::build('B', 1), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build('D', 3), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build('E', 5), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build('G', 3), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build('H', 3), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::from_label("A"), std::invalid_argument);
  CHECK(RootSystem::from_label("g2").label() == "G2");
}

TEST_CASE("rho pairs to 1 exactly on simple coroots") {
  for (auto label : {"A4", "B3", "C3", "D4", "F4", "G2", "E6"}) {
    auto rs = RootSystem::from_label(label);
    for (const auto& r : rs.positive_roots()) {
      long v = rs.pairing(rs.rho(), r.coroot);
      CHECK(v >= 1);
      CHECK((v == 1) == (r.height == 1));
    }
    CHECK(rs.pairing(rs.rho(), rs.highest_coroot()) == rs.coxeter_number() - 1);
  }
}

TEST_CASE("pairing") {
  auto a3 = RootSystem::build('A', 3);
  for (std::size_t i = 0; i < 3; ++i) {
    Weight coroot(3);
    coroot[i] = 1;
    CHECK(a3.pairing(a3.rho(), coroot) == 1);
  }
  CHECK(a3.pairing(Weight{3, 2, 3}, a3.highest_coroot()) == 8);
  CHECK(a3.pairing(a3.zero(), a3.highest_coroot()) == 0);
  // Simple-coroot pairing reads coordinates.
  Weight lam{5, -2, 7};
  for (std::size_t i = 0; i < 3; ++i) {
    Weight e(3);
    e[i] = 1;
    CHECK(a3.pairing(lam, e) == lam[i]);
  }
}

TEST_CASE("weyl_orbit") {
  auto a1 = RootSystem::build('A', 1);
  CHECK(a1.weyl_orbit(Weight{2}) == std::vector<Weight>{Weight{-2}, Weight{2}});
  CHECK(a1.weyl_orbit(Weight{0}) == std::vector<Weight>{Weight{0}});
  auto a2 = RootSystem::build('A', 2);
  CHECK(a2.weyl_orbit(Weight{1, 1}).size() == 6);
  // Orbit sizes divide |W|.
  std::mt19937 rng(7);
  for (auto label : {"A3", "B3", "G2"}) {
    auto rs = RootSystem::from_label(label);
    for (int t = 0; t < 20; ++t) {
      auto orbit = rs.weyl_orbit(random_weight(rng, rs.rank(), -3, 3));
      CHECK(rs.weyl_group_order() % orbit.size() == 0);
    }
  }
}

TEST_CASE("dominant_representative") {
  auto a1 = RootSystem::build('A', 1);
  CHECK(a1.dominant_representative(Weight{-3}) == Weight{3});
  auto a2 = RootSystem::build('A', 2);
  CHECK(a2.dominant_representative(Weight{2, 5}) == Weight{2, 5});
  CHECK(a2.reflect(Weight{1, 0}, 0) == Weight{-1, 1});
  CHECK(a2.dominant_representative(Weight{-1, 1}) == Weight{1, 0});

  std::mt19937 rng(11);
  for (auto label : {"A3", "C3", "G2", "F4"}) {
    auto rs = RootSystem::from_label(label);
    for (int t = 0; t < 25; ++t) {
      Weight w = random_weight(rng, rs.rank(), -4, 4);
      Weight d = rs.dominant_representative(w);
      CHECK(d.is_dominant());
      CHECK(rs.dominant_representative(d) == d);
      for (std::size_t i = 0; i < rs.rank(); ++i) CHECK(rs.dominant_representative(rs.reflect(w, i)) == d);
    }
  }
}

TEST_CASE("dominance_leq") {
  auto a2 = RootSystem::build('A', 2);
  CHECK(a2.dominance_leq(Weight{1, 1}, Weight{1, 1}));
  CHECK(a2.dominance_leq(Weight{0, 0}, Weight{1, 1}));
  CHECK_FALSE(a2.dominance_leq(Weight{1, 0}, Weight{0, 1}));
  CHECK_FALSE(a2.dominance_leq(Weight{0, 1}, Weight{1, 0}));
}

TEST_CASE("dominance_leq is a partial order on random triples") {
  std::mt19937 rng(3);
  for (auto label : {"A2", "B2", "G2", "A3"}) {
    auto rs = RootSystem::from_label(label);
    int comparable = 0;
    for (int t = 0; t < 400; ++t) {
      Weight a = random_weight(rng, rs.rank(), -3, 3);
      Weight b = random_weight(rng, rs.rank(), -3, 3);
      Weight c = random_weight(rng, rs.rank(), -3, 3);
      CHECK(rs.dominance_leq(a, a));
      if (rs.dominance_leq(a, b) && rs.dominance_leq(b, a)) CHECK(a == b);
      if (rs.dominance_leq(a, b) && rs.dominance_leq(b, c)) CHECK(rs.dominance_leq(a, c));
      comparable += rs.dominance_leq(a, b);
    }
    CHECK(comparable > 0);
  }
}

TEST_CASE("pairing(w lambda, w beta^vee) = pairing(lambda, beta^vee)") {
  std::mt19937 rng(5);
  for (auto label : {"A3", "B3", "C3", "G2", "F4", "D4"}) {
    auto rs = RootSystem::from_label(label);
    std::uniform_int_distribution<std::size_t> gen(0, rs.rank() - 1);
    std::uniform_int_distribution<std::size_t> pick(0, rs.positive_roots().size() - 1);
    for (int t = 0; t < 30; ++t) {
      Weight lam = random_weight(rng, rs.rank(), -5, 5);
      std::size_t k = pick(rng);
      Weight beta = rs.positive_roots()[k].weight;
      Weight wl = lam, wb = beta;
      for (int step = 0; step < 7; ++step) {
        std::size_t i = gen(rng);
        wl = rs.reflect(wl, i);
        wb = rs.reflect(wb, i);
      }
      auto [idx, sign] = find_root(rs, wb);
      REQUIRE(idx >= 0);
      CHECK(sign * rs.pairing(wl, static_cast<std::size_t>(idx)) == rs.pairing(lam, k));
    }
  }
}

TEST_CASE("invariant form and longest element") {
  for (auto label : {"A3", "B3", "G2", "E6", "D5"}) {
    auto rs = RootSystem::from_label(label);
    // Short roots have (alpha, alpha) = 2 after scaling.
    long min_len = 1L << 40;
    for (const auto& r : rs.positive_roots()) min_len = std::min(min_len, rs.scaled_form(r.weight, r.weight));
    CHECK(min_len == 2 * rs.cartan_determinant());
    Weight lam = rs.rho();
    lam[0] = 3;
    Weight w0l = rs.longest_element_apply(lam);
    CHECK((-w0l).is_dominant());
    CHECK(rs.scaled_form(w0l, w0l) == rs.scaled_form(lam, lam));
    CHECK(rs.longest_element_apply(w0l) == lam);
  }
  auto a2 = RootSystem::build('A', 2);
  CHECK(a2.dual_weight(Weight{1, 0}) == Weight{0, 1});
  auto b3 = RootSystem::build('B', 3);
  CHECK(b3.dual_weight(Weight{1, 2, 3}) == Weight{1, 2, 3});
}

TEST_CASE("weyl group listing matches the order") {
  for (auto label : {"A1", "A3", "B3", "G2", "A4"}) {
    auto rs = RootSystem::from_label(label);
    auto elems = rs.weyl_group_elements();
    CHECK(elems.size() == rs.weyl_group_order());
    int longest = 0;
    for (const auto& e : elems) longest = std::max(longest, e.length);
    CHECK(static_cast<std::size_t>(longest) == rs.positive_roots().size());
  }
  CHECK_THROWS(RootSystem::build('E', 6).weyl_group_elements());
}

TEST_CASE("weight text format") {
  CHECK(Weight::parse("3,2,3") == Weight{3, 2, 3});
  CHECK(Weight::parse(" -1, 0 ,4") == Weight{-1, 0, 4});
  CHECK(Weight{3, 2, 3}.to_string() == "3,2,3");
  CHECK_THROWS_AS(Weight::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Weight::parse("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(Weight::parse("1,x"), std::invalid_argument);
  CHECK_THROWS_AS(Weight::parse("1,2,3,4,5,6,7,8,9"), std::invalid_argument);
}
