#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "semiprim/perm.hpp"
#include "semiprim/perm_group.hpp"
#include "support/oracles.hpp"

/**
 * @file test_perm_group.cpp
 * @brief Stabilizer-chain, orbit, coset-action and conjugacy tests, checked
 *        against brute-force closure oracles.
 */

using namespace semiprim;

namespace {

PermGroup symmetric(Point n) {
  std::vector<std::vector<Point>> cycle;
  std::vector<Point> full;
  for (Point i = 1; i <= n; ++i)
    full.push_back(i);
  return PermGroup(n, {perm_from_cycles(n, {full}),
                       perm_from_cycles(n, {{1, 2}})});
}

PermGroup alternating5() {
  return PermGroup(5, {perm_from_cycles(5, {{1, 2, 3, 4, 5}}),
                       perm_from_cycles(5, {{3, 4, 5}})});
}

Perm random_word(std::mt19937 &rng, const std::vector<Perm> &gens,
                 Point degree, int length) {
  Perm w(degree);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  for (int i = 0; i < length; ++i)
    w = w * gens[pick(rng)];
  return w;
}

Perm random_perm(std::mt19937 &rng, Point degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::shuffle(images.begin(), images.end(), rng);
  return Perm(std::move(images));
}

} // namespace

TEST_CASE("chain orders match known group orders") {
  CHECK(symmetric(4).order() == 24);
  CHECK(symmetric(6).order() == 720);
  CHECK(alternating5().order() == 60);
  CHECK(PermGroup(5, {perm_from_cycles(5, {{1, 2, 3}, {4, 5}})}).order() == 6);
  CHECK(PermGroup(3).order() == 1);
  CHECK(PermGroup(4, {Perm(4)}).order() == 1);
}

TEST_CASE("chain order equals brute-force closure count") {
  std::vector<PermGroup> groups = {
      symmetric(4),
      alternating5(),
      PermGroup(4, {perm_from_cycles(4, {{1, 2, 3, 4}}),
                    perm_from_cycles(4, {{1, 3}})}), // D4
      PermGroup(8, {perm_from_cycles(8, {{1, 2, 3, 4, 5, 6, 7, 8}})}),
      PermGroup(6, {perm_from_cycles(6, {{1, 2, 3}}),
                    perm_from_cycles(6, {{4, 5, 6}})}),
  };
  for (const PermGroup &g : groups) {
    auto brute = oracles::brute_elements(g.degree(), g.generators());
    CHECK(g.order() == brute.size());
  }
}

TEST_CASE("chain is deterministic for a fixed generator sequence") {
  PermGroup g = symmetric(5);
  StabChain a(g.degree(), g.generators());
  StabChain b(g.degree(), g.generators());
  CHECK(a.base() == b.base());
  CHECK(a.order() == b.order());
  CHECK(a.strong_generators() == b.strong_generators());
}

TEST_CASE("membership: random words are members, oracle agreement holds") {
  std::mt19937 rng(31337);
  PermGroup d4(4, {perm_from_cycles(4, {{1, 2, 3, 4}}),
                   perm_from_cycles(4, {{1, 3}})});
  auto closure = oracles::brute_elements(4, d4.generators());
  std::set<Perm> closure_set(closure.begin(), closure.end());

  for (int i = 0; i < 120; ++i) {
    Perm w = random_word(rng, d4.generators(), 4, 1 + i % 9);
    CHECK(d4.contains(w));
  }
  int outsiders = 0;
  for (int i = 0; i < 120; ++i) {
    Perm p = random_perm(rng, 4);
    CHECK(d4.contains(p) == closure_set.count(p) > 0);
    if (!closure_set.count(p))
      ++outsiders;
  }
  CHECK(outsiders > 0);
}

TEST_CASE("membership rejects cosets of a cyclic subgroup") {
  PermGroup c3(3, {perm_from_cycles(3, {{1, 2, 3}})});
  CHECK(c3.contains(perm_from_cycles(3, {{1, 2, 3}})));
  CHECK_FALSE(c3.contains(perm_from_cycles(3, {{1, 2}})));
  CHECK(c3.contains(Perm(3)));
}

TEST_CASE("orbits follow cycle structure") {
  PermGroup g(5, {perm_from_cycles(5, {{1, 2, 3}, {4, 5}})});
  CHECK(g.orbit_of(0) == std::vector<Point>{0, 1, 2});
  CHECK(g.orbit_of(3) == std::vector<Point>{3, 4});
  CHECK(g.orbits() ==
        std::vector<std::vector<Point>>{{0, 1, 2}, {3, 4}});
  CHECK_THROWS_AS(g.orbit_of(5), std::invalid_argument);
}

TEST_CASE("orbit-stabilizer identity holds exactly") {
  std::vector<PermGroup> groups = {symmetric(4), symmetric(6), alternating5(),
                                   PermGroup(6, {perm_from_cycles(6, {{1, 2, 3}}),
                                                 perm_from_cycles(6, {{4, 5}})})};
  for (const PermGroup &g : groups)
    for (Point x = 0; x < g.degree(); ++x) {
      mpz_class orb = static_cast<unsigned long>(g.orbit_of(x).size());
      CHECK(orb * g.point_stabilizer(x).order() == g.order());
    }
}

TEST_CASE("point stabilizer of S4 is S3") {
  PermGroup stab = symmetric(4).point_stabilizer(0);
  CHECK(stab.order() == 6);
  for (const Perm &g : stab.generators())
    CHECK(g[0] == 0);
}

TEST_CASE("pointwise stabilizer fixes a set of points") {
  PermGroup stab = symmetric(5).pointwise_stabilizer({0, 1});
  CHECK(stab.order() == 6);
  for (const Perm &g : stab.generators()) {
    CHECK(g[0] == 0);
    CHECK(g[1] == 1);
  }
}

TEST_CASE("transitivity profile distinguishes regular and non-regular") {
  // Regular C8: transitive and semiregular.
  PermGroup c8(8, {perm_from_cycles(8, {{1, 2, 3, 4, 5, 6, 7, 8}})});
  auto prof = c8.transitivity_profile();
  CHECK(prof.is_transitive);
  CHECK(prof.is_semiregular);

  // An order-2 subgroup moving everything: semiregular, 4 orbits of length 2.
  PermGroup z(8, {perm_from_cycles(8, {{1, 2}, {3, 4}, {5, 6}, {7, 8}})});
  auto zprof = z.transitivity_profile();
  CHECK_FALSE(zprof.is_transitive);
  CHECK(zprof.is_semiregular);
  CHECK(zprof.rank == 4);
  CHECK(zprof.subdegrees == std::vector<std::uint64_t>{2, 2, 2, 2});

  // S4 natural: transitive, not semiregular.
  auto sprof = symmetric(4).transitivity_profile();
  CHECK(sprof.is_transitive);
  CHECK_FALSE(sprof.is_semiregular);
}

TEST_CASE("semiregularity matches trivial point stabilizers") {
  std::vector<PermGroup> groups = {
      symmetric(4),
      PermGroup(8, {perm_from_cycles(8, {{1, 2, 3, 4, 5, 6, 7, 8}})}),
      PermGroup(8, {perm_from_cycles(8, {{1, 2}, {3, 4}, {5, 6}, {7, 8}})}),
      alternating5()};
  for (const PermGroup &g : groups) {
    bool all_trivial = true;
    for (Point x = 0; x < g.degree(); ++x)
      if (g.point_stabilizer(x).order() != 1)
        all_trivial = false;
    CHECK(g.transitivity_profile().is_semiregular == all_trivial);
  }
}

TEST_CASE("rank and subdegrees of standard groups") {
  auto [rank_s4, sub_s4] = symmetric(4).rank_and_subdegrees();
  CHECK(rank_s4 == 2);
  CHECK(sub_s4 == std::vector<std::uint64_t>{1, 3});

  PermGroup c4(4, {perm_from_cycles(4, {{1, 2, 3, 4}})});
  auto [rank_c4, sub_c4] = c4.rank_and_subdegrees();
  CHECK(rank_c4 == 4);
  CHECK(sub_c4 == std::vector<std::uint64_t>{1, 1, 1, 1});

  PermGroup intrans(5, {perm_from_cycles(5, {{1, 2, 3}})});
  CHECK_THROWS_AS(intrans.rank_and_subdegrees(), std::invalid_argument);
}

TEST_CASE("subdegree multiset is independent of the base point") {
  for (const PermGroup &g : {symmetric(6), alternating5()}) {
    auto reference = g.point_stabilizer(0).orbits();
    std::vector<std::size_t> ref_sizes;
    for (const auto &o : reference)
      ref_sizes.push_back(o.size());
    std::sort(ref_sizes.begin(), ref_sizes.end());
    for (Point x : {Point{1}, Point{2}, Point{4}}) {
      std::vector<std::size_t> sizes;
      for (const auto &o : g.point_stabilizer(x).orbits())
        sizes.push_back(o.size());
      std::sort(sizes.begin(), sizes.end());
      CHECK(sizes == ref_sizes);
    }
  }
}

TEST_CASE("sum of subdegrees equals degree for transitive groups") {
  for (const PermGroup &g : {symmetric(4), symmetric(6), alternating5()}) {
    auto [rank, subs] = g.rank_and_subdegrees();
    std::uint64_t sum = 0;
    for (auto s : subs)
      sum += s;
    CHECK(sum == g.degree());
    CHECK(rank == subs.size());
  }
}

TEST_CASE("element enumeration is complete, distinct and capped") {
  PermGroup g = symmetric(4);
  auto elems = g.elements();
  CHECK(elems.size() == 24);
  std::set<Perm> uniq(elems.begin(), elems.end());
  CHECK(uniq.size() == 24);
  for (const Perm &e : elems)
    CHECK(g.contains(e));
  CHECK_THROWS(symmetric(6).elements(100));
}

TEST_CASE("coset action on a point stabilizer recovers the natural action") {
  PermGroup s4 = symmetric(4);
  auto res = coset_action(s4, s4.point_stabilizer(0));
  CHECK(res.image.degree() == 4);
  CHECK(res.faithful);
  CHECK(res.image.order() == 24);
  auto [rank, subs] = res.image.rank_and_subdegrees();
  CHECK(rank == 2);
  CHECK(subs == std::vector<std::uint64_t>{1, 3});
}

TEST_CASE("coset action on the whole group is trivial and unfaithful") {
  PermGroup s4 = symmetric(4);
  auto res = coset_action(s4, s4);
  CHECK(res.image.degree() == 1);
  CHECK_FALSE(res.faithful);
}

TEST_CASE("coset action on A4 inside S4 is the sign action") {
  PermGroup s4 = symmetric(4);
  PermGroup a4(4, {perm_from_cycles(4, {{1, 2, 3}}),
                   perm_from_cycles(4, {{2, 3, 4}})});
  REQUIRE(a4.order() == 12);
  auto res = coset_action(s4, a4);
  CHECK(res.image.degree() == 2);
  CHECK(res.image.order() == 2);
  CHECK_FALSE(res.faithful);
}

TEST_CASE("coset action rejects non-subgroups") {
  PermGroup g(4, {perm_from_cycles(4, {{1, 2, 3, 4}})});
  PermGroup h(4, {perm_from_cycles(4, {{1, 2}})});
  CHECK_THROWS_AS(coset_action(g, h), std::invalid_argument);
}

TEST_CASE("subgroup conjugacy in S4") {
  PermGroup s4 = symmetric(4);
  PermGroup t12(4, {perm_from_cycles(4, {{1, 2}})});
  PermGroup t34(4, {perm_from_cycles(4, {{3, 4}})});
  PermGroup double_trans(4, {perm_from_cycles(4, {{1, 2}, {3, 4}})});
  CHECK(are_conjugate_subgroups(s4, t12, t34));
  CHECK(are_conjugate_subgroups(s4, t12, t12));
  CHECK_FALSE(are_conjugate_subgroups(s4, t12, double_trans));

  // The normal Klein four group vs a non-normal one: same order, same
  // abstract type, not conjugate.
  PermGroup v_normal(4, {perm_from_cycles(4, {{1, 2}, {3, 4}}),
                         perm_from_cycles(4, {{1, 3}, {2, 4}})});
  PermGroup v_other(4, {perm_from_cycles(4, {{1, 2}}),
                        perm_from_cycles(4, {{3, 4}})});
  REQUIRE(v_normal.order() == 4);
  REQUIRE(v_other.order() == 4);
  CHECK_FALSE(are_conjugate_subgroups(s4, v_normal, v_other));
}

TEST_CASE("point stabilizers of a transitive group are conjugate") {
  PermGroup g = symmetric(4);
  CHECK(are_conjugate_subgroups(g, g.point_stabilizer(0),
                                g.point_stabilizer(2)));
}

TEST_CASE("action kernel via augmented domain: sign map has kernel A4") {
  PermGroup s4 = symmetric(4);
  // Both generators (4-cycle and transposition) are odd.
  std::vector<Perm> sign_images = {perm_from_cycles(2, {{1, 2}}),
                                   perm_from_cycles(2, {{1, 2}})};
  PermGroup ker = action_kernel(s4, sign_images);
  CHECK(ker.order() == 12);
  CHECK(ker.contains(perm_from_cycles(4, {{1, 2, 3}})));
  CHECK_FALSE(ker.contains(perm_from_cycles(4, {{1, 2}})));
}

TEST_CASE("augmented point stabilizer matches the direct one") {
  PermGroup g = symmetric(5);
  PermGroup direct = g.point_stabilizer(2);
  PermGroup via_action =
      augmented_point_stabilizer(g, g.generators(), 2);
  CHECK(direct.order() == via_action.order());
  CHECK(direct.contains_subgroup(via_action));
  CHECK(via_action.contains_subgroup(direct));
}

TEST_CASE("orbit_action reconstructs the natural action") {
  PermGroup g = symmetric(4);
  auto res = orbit_action<Point>(
      Point{0}, g.generators(),
      [](Point p, const Perm &s) { return s[p]; });
  REQUIRE(res.states == std::vector<Point>{0, 1, 2, 3});
  CHECK(res.gen_images == g.generators());
}

TEST_CASE("orbit_action on unordered pairs gives the S4 pair action") {
  PermGroup g = symmetric(4);
  using Pair = std::pair<Point, Point>;
  auto act = [](const Pair &pr, const Perm &s) {
    Point a = s[pr.first], b = s[pr.second];
    return a < b ? Pair{a, b} : Pair{b, a};
  };
  auto res = orbit_action<Pair>(Pair{0, 1}, g.generators(), act);
  CHECK(res.states.size() == 6);
  PermGroup image(6, res.gen_images);
  CHECK(image.order() == 24);
  auto [rank, subs] = image.rank_and_subdegrees();
  CHECK(rank == 3);
  CHECK(subs == std::vector<std::uint64_t>{1, 1, 4});
}

TEST_CASE("reduced generator subsequences still generate") {
  PermGroup bloated(4, {Perm(4), perm_from_cycles(4, {{1, 2}}),
                        perm_from_cycles(4, {{1, 2}}),
                        perm_from_cycles(4, {{1, 2, 3, 4}}),
                        perm_from_cycles(4, {{1, 3}})});
  auto reduced = reduced_generators(bloated);
  CHECK(reduced.size() == 2);
  CHECK(PermGroup(4, reduced).order() == bloated.order());
}

TEST_CASE("group equality via order plus containment") {
  PermGroup a(4, {perm_from_cycles(4, {{1, 2}}), perm_from_cycles(4, {{1, 2, 3, 4}})});
  PermGroup b = symmetric(4);
  CHECK(a.same_group_as(b));
  CHECK_FALSE(a.same_group_as(PermGroup(4, {perm_from_cycles(4, {{1, 2, 3}}),
                                            perm_from_cycles(4, {{2, 3, 4}})})));
}
