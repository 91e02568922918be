#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <vector>

#include "anc/noncross.hpp"
#include "anc/signed_perm.hpp"

using namespace anc;

namespace {

GroundPermutation plain_cycle(int lo, int hi) {
  std::vector<int> cycle;
  for (int i = lo; i <= hi; ++i) cycle.push_back(i);
  return GroundPermutation::single_cycle(cycle);
}

GroundPermutation from_cycles(const std::vector<int>& points,
                              const std::vector<std::vector<int>>& cycles) {
  GroundPermutation id = GroundPermutation::identity(points);
  std::vector<int> img = points;
  sort_canonical(img);
  std::vector<int> pts = img;
  for (const auto& c : cycles)
    for (size_t k = 0; k < c.size(); ++k)
      img[static_cast<size_t>(id.index_of(c[k]))] = c[(k + 1) % c.size()];
  return {pts, img};
}

// Figure-3 data: X = {1..11}, gamma = (1..8)(9,10,11),
// tau = (1,9,7,8)(2,3)(4,5,6,10,11).
GroundPermutation figure3_gamma() {
  std::vector<int> points(11);
  std::iota(points.begin(), points.end(), 1);
  return from_cycles(points, {{1, 2, 3, 4, 5, 6, 7, 8}, {9, 10, 11}});
}

GroundPermutation figure3_tau() {
  std::vector<int> points(11);
  std::iota(points.begin(), points.end(), 1);
  return from_cycles(points, {{1, 9, 7, 8}, {2, 3}, {4, 5, 6, 10, 11}});
}

void for_each_perm_of(int m, const std::function<void(const GroundPermutation&)>& fn) {
  std::vector<int> points(static_cast<size_t>(m));
  std::iota(points.begin(), points.end(), 1);
  std::vector<int> img = points;
  do {
    fn(GroundPermutation(points, img));
  } while (std::next_permutation(img.begin(), img.end()));
}

}  // namespace

TEST_CASE("induced permutations walk to the first return") {
  const GroundPermutation eight = plain_cycle(1, 8);
  CHECK(induced(eight, {1, 2, 3, 4, 5, 6, 7, 8}) == eight);
  CHECK(induced(eight, {1, 3, 4}) == GroundPermutation::single_cycle({1, 3, 4}));
  CHECK(induced(figure3_tau(), {4, 5, 6}) == GroundPermutation::single_cycle({4, 5, 6}));
  CHECK_THROWS_AS(induced(eight, {}), std::invalid_argument);
}

TEST_CASE("joint orbit counts") {
  const AnnulusConfig cfg = AnnulusConfig::make(1, 1);
  CHECK(joint_orbit_count(GroundPermutation::identity(cfg.gamma.points()), cfg.gamma) == 2);
  CHECK(joint_orbit_count(figure3_tau(), figure3_gamma()) == 1);
  const GroundPermutation id4 = GroundPermutation::identity({1, 2, 3, 4});
  CHECK(joint_orbit_count(id4, plain_cycle(1, 4)) == 1);
}

TEST_CASE("genus values") {
  const GroundPermutation gamma = plain_cycle(1, 4);
  CHECK(genus(gamma, gamma) == 0);
  CHECK(genus(from_cycles({1, 2, 3, 4}, {{1, 3}, {2, 4}}), gamma) == 1);
  const AnnulusConfig cfg42 = AnnulusConfig::make(4, 2);
  const SignedPermutation fig1 = parse_cycles("(1,2,3,5)(4,-6)", 6);
  CHECK(genus(to_ground(fig1), cfg42.gamma) == 0);
  CHECK(genus(figure3_tau(), figure3_gamma()) == 0);
}

TEST_CASE("annulus config invariants") {
  const AnnulusConfig cfg = AnnulusConfig::make(4, 2);
  CHECK(cfg.n == 6);
  CHECK(cfg.gamma.cycles().size() == 2);
  CHECK(cfg.outer == std::vector<int>{1, 2, 3, 4, -1, -2, -3, -4});
  CHECK(cfg.inner == std::vector<int>{5, 6, -5, -6});
  CHECK(cycle_string(cfg.reference_perm()) == "(1,2,3,4,-1,-2,-3,-4)(5,6,-5,-6)");
  CHECK_THROWS_AS(AnnulusConfig::make(0, 1), std::invalid_argument);
}

TEST_CASE("AC-test permutations") {
  const GroundPermutation g = from_cycles({1, 2, 3, 4}, {{1, 2}, {3, 4}});
  CHECK(ac_test_perm(g, 1, 3) == from_cycles({1, 2, 3, 4}, {{2, 4}}));
  CHECK(ac_test_perm(g, 1, 3).apply(1) == 1);
  const AnnulusConfig cfg = AnnulusConfig::make(1, 1);
  CHECK(ac_test_perm(cfg.gamma, 1, 2) ==
        from_cycles({1, 2, -1, -2}, {{-1, -2}}));
  CHECK_THROWS_AS(ac_test_perm(cfg.gamma, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(ac_test_perm(plain_cycle(1, 4), 1, 2), std::invalid_argument);
}

TEST_CASE("crossing pattern witnesses") {
  const GroundPermutation gamma = plain_cycle(1, 4);
  const auto dc = find_crossing_pattern(from_cycles({1, 2, 3, 4}, {{1, 3}, {2, 4}}), gamma);
  REQUIRE(dc.has_value());
  CHECK(dc->kind == CrossingWitness::Kind::DC);
  CHECK(dc->points == std::vector<int>{1, 2, 3, 4});
  CHECK(dc->json() == "{\"kind\": \"DC\", \"points\": [1, 2, 3, 4]}");

  CHECK_FALSE(find_crossing_pattern(figure3_tau(), figure3_gamma()).has_value());
  CHECK_FALSE(check_compatible(figure3_tau(), figure3_gamma()).has_value());
  CHECK(is_noncrossing_by_patterns(figure3_tau(), figure3_gamma()));
  CHECK(is_noncrossing(figure3_tau(), figure3_gamma()));
}

TEST_CASE("a classic disc example: (1,3,4)(5,8)(6,7) on an 8-cycle") {
  std::vector<int> points(8);
  std::iota(points.begin(), points.end(), 1);
  const GroundPermutation gamma = plain_cycle(1, 8);
  const GroundPermutation tau = from_cycles(points, {{1, 3, 4}, {5, 8}, {6, 7}});
  CHECK(is_noncrossing(tau, gamma));
  CHECK(is_noncrossing_by_patterns(tau, gamma));
  // Swapping one chord breaks planarity.
  const GroundPermutation crossing = from_cycles(points, {{1, 3, 4}, {5, 7}, {6, 8}});
  CHECK_FALSE(is_noncrossing(crossing, gamma));
  const auto witness = find_crossing_pattern(crossing, gamma);
  REQUIRE(witness.has_value());
  CHECK(witness->kind == CrossingWitness::Kind::DC);
}

TEST_CASE("incompatibility witness: double jump across the circles") {
  const AnnulusConfig cfg = AnnulusConfig::make(1, 1);
  const SignedPermutation tau = parse_cycles("(1,2,-1,-2)", 2);
  const auto w = check_compatible(to_ground(tau), cfg.gamma);
  REQUIRE(w.has_value());
  CHECK(w->kind == CrossingWitness::Kind::Incompatible);
  CHECK_FALSE(is_noncrossing(to_ground(tau), cfg.gamma));
}

TEST_CASE("identity and gamma are always members") {
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; q + p <= 4; ++q) {
      const AnnulusConfig cfg = AnnulusConfig::make(p, q);
      CHECK(is_noncrossing(GroundPermutation::identity(cfg.gamma.points()), cfg.gamma));
      CHECK(is_noncrossing(cfg.gamma, cfg.gamma));
      CHECK(is_noncrossing_by_patterns(cfg.gamma, cfg.gamma));
    }
}

TEST_CASE("disc equivalence: genus vs compatibility + DC, |X| <= 5") {
  for (int m = 1; m <= 5; ++m) {
    const GroundPermutation gamma = plain_cycle(1, m);
    long long members = 0;
    for_each_perm_of(m, [&](const GroundPermutation& tau) {
      const bool by_genus = is_noncrossing(tau, gamma);
      const bool by_patterns = is_noncrossing_by_patterns(tau, gamma);
      REQUIRE(by_genus == by_patterns);
      members += by_genus ? 1 : 0;
    });
    // Catalan numbers 1, 2, 5, 14, 42.
    const long long catalan[] = {1, 1, 2, 5, 14, 42};
    CHECK(members == catalan[m]);
  }
}

TEST_CASE("annulus equivalence: genus vs patterns over S(X), |X| <= 5") {
  for (int m = 2; m <= 5; ++m)
    for (int k = 1; k < m; ++k) {
      std::vector<int> first, second;
      for (int i = 1; i <= k; ++i) first.push_back(i);
      for (int i = k + 1; i <= m; ++i) second.push_back(i);
      std::vector<int> points(static_cast<size_t>(m));
      std::iota(points.begin(), points.end(), 1);
      const GroundPermutation gamma = from_cycles(points, {first, second});
      for_each_perm_of(m, [&](const GroundPermutation& tau) {
        REQUIRE(is_noncrossing(tau, gamma) == is_noncrossing_by_patterns(tau, gamma));
      });
    }
}

TEST_CASE("annulus equivalence over B_n, p+q <= 3") {
  for (int p = 1; p <= 2; ++p)
    for (int q = 1; p + q <= 3; ++q) {
      const AnnulusConfig cfg = AnnulusConfig::make(p, q);
      for_each_in_hyperoctahedral(p + q, [&](const SignedPermutation& tau) {
        const GroundPermutation g = to_ground(tau);
        REQUIRE(is_noncrossing(g, cfg.gamma) == is_noncrossing_by_patterns(g, cfg.gamma));
      });
    }
}

TEST_CASE("disconnected split equivalence, p+q <= 4") {
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; p + q <= 4; ++q) {
      const AnnulusConfig cfg = AnnulusConfig::make(p, q);
      const GroundPermutation alpha = induced(cfg.gamma, cfg.outer);
      const GroundPermutation beta = induced(cfg.gamma, cfg.inner);
      for_each_in_hyperoctahedral(p + q, [&](const SignedPermutation& tau) {
        const GroundPermutation g = to_ground(tau);
        bool disconnected = true;
        for (const auto& orbit : orbits(tau).orbits) {
          bool outer = false, inner = false;
          for (int x : orbit) (cfg.on_outer(x) ? outer : inner) = true;
          if (outer && inner) disconnected = false;
        }
        if (!disconnected) return;
        const bool whole = is_noncrossing(g, cfg.gamma);
        const bool split = is_noncrossing(induced(g, cfg.outer), alpha) &&
                           is_noncrossing(induced(g, cfg.inner), beta);
        REQUIRE(whole == split);
      });
    }
}

TEST_CASE("complement closure for connected members, p+q <= 4") {
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; p + q <= 4; ++q) {
      const AnnulusConfig cfg = AnnulusConfig::make(p, q);
      const SignedPermutation gamma = cfg.reference_perm();
      for_each_in_hyperoctahedral(p + q, [&](const SignedPermutation& tau) {
        const GroundPermutation g = to_ground(tau);
        if (!is_noncrossing(g, cfg.gamma)) return;
        bool connected = false;
        for (const auto& orbit : orbits(tau).orbits) {
          bool outer = false, inner = false;
          for (int x : orbit) (cfg.on_outer(x) ? outer : inner) = true;
          if (outer && inner) connected = true;
        }
        if (!connected) return;
        const SignedPermutation complement = compose(inverse(tau), gamma);
        CHECK(is_noncrossing(to_ground(complement), cfg.gamma));
      });
    }
}

TEST_CASE("pattern scans reject references with more than two circles") {
  std::vector<int> points(6);
  std::iota(points.begin(), points.end(), 1);
  const GroundPermutation gamma = from_cycles(points, {{1, 2}, {3, 4}, {5, 6}});
  const GroundPermutation id = GroundPermutation::identity(points);
  CHECK_THROWS_AS(check_compatible(id, gamma), std::invalid_argument);
  CHECK_THROWS_AS(find_crossing_pattern(id, gamma), std::invalid_argument);
}
