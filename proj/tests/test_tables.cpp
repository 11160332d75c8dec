#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "semiprim/automorphisms.hpp"
#include "semiprim/cayley.hpp"
#include "semiprim/special_groups.hpp"

using namespace semiprim;

namespace {

using Rows = std::vector<std::vector<std::uint32_t>>;

bool is_table_isomorphism(const CayleyTable &t1, const CayleyTable &t2,
                          const Perm &phi) {
  if (phi.degree() != t1.order() || t1.order() != t2.order())
    return false;
  std::vector<bool> hit(t1.order(), false);
  for (std::uint32_t x = 0; x < t1.order(); ++x) {
    if (hit[phi[x]])
      return false;
    hit[phi[x]] = true;
  }
  for (std::uint32_t a = 0; a < t1.order(); ++a)
    for (std::uint32_t b = 0; b < t1.order(); ++b)
      if (phi[t1.mul(a, b)] != t2.mul(phi[a], phi[b]))
        return false;
  return true;
}

/// Automorphism count by unpruned enumeration: every image tuple for the
/// generating sequence is tried and the induced map verified from scratch.
std::uint64_t brute_automorphism_count(const CayleyTable &t) {
  std::uint32_t n = t.order();
  std::vector<std::uint32_t> gens = t.small_generating_set();
  std::size_t k = gens.size();
  std::uint64_t count = 0;

  std::vector<std::uint32_t> images(k, 0);
  while (true) {
    // Attempt to extend gens -> images to a full map by product closure.
    std::vector<std::uint32_t> pmap(n, n);
    std::vector<std::uint32_t> assigned{0};
    pmap[0] = 0;
    bool ok = true;
    for (std::size_t l = 0; l < k && ok; ++l) {
      if (pmap[gens[l]] == n) {
        pmap[gens[l]] = images[l];
        assigned.push_back(gens[l]);
      } else {
        ok = pmap[gens[l]] == images[l];
      }
    }
    for (std::size_t i = 0; i < assigned.size() && ok; ++i)
      for (std::size_t j = 0; j < assigned.size() && ok; ++j) {
        std::uint32_t p = t.mul(assigned[i], assigned[j]);
        std::uint32_t q = t.mul(pmap[assigned[i]], pmap[assigned[j]]);
        if (pmap[p] == n) {
          pmap[p] = q;
          assigned.push_back(p);
        } else {
          ok = pmap[p] == q;
        }
      }
    if (ok && assigned.size() == n) {
      std::vector<bool> hit(n, false);
      bool bijective = true;
      for (std::uint32_t x = 0; x < n && bijective; ++x) {
        if (hit[pmap[x]])
          bijective = false;
        hit[pmap[x]] = true;
      }
      for (std::uint32_t a = 0; a < n && bijective; ++a)
        for (std::uint32_t b = 0; b < n && bijective; ++b)
          if (pmap[t.mul(a, b)] != t.mul(pmap[a], pmap[b]))
            bijective = false;
      if (bijective)
        ++count;
    }
    // Next image tuple.
    std::size_t pos = 0;
    while (pos < k && ++images[pos] == n) {
      images[pos] = 0;
      ++pos;
    }
    if (pos == k)
      break;
  }
  return count;
}

std::vector<std::uint32_t> element_order_multiset(const CayleyTable &t) {
  std::vector<std::uint32_t> orders;
  for (std::uint32_t a = 0; a < t.order(); ++a)
    orders.push_back(t.element_order(a));
  std::sort(orders.begin(), orders.end());
  return orders;
}

} // namespace

TEST_CASE("table validation rejects non-groups") {
  CHECK_THROWS_AS(CayleyTable(Rows{}), std::invalid_argument);
  CHECK_THROWS_AS(CayleyTable(Rows{{0, 1}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(CayleyTable(Rows{{0, 1}, {1, 2}}), std::invalid_argument);
  // Latin square without identity first.
  CHECK_THROWS_AS(CayleyTable(Rows{{1, 0}, {0, 1}}), std::invalid_argument);
  // Identity fine, row 1 not a permutation.
  CHECK_THROWS_AS(CayleyTable(Rows{{0, 1, 2}, {1, 0, 0}, {2, 0, 1}}),
                  std::invalid_argument);
  // A genuine Latin square with two-sided identity that is not associative:
  // (1*1)*1 = 2*1 = 0 but 1*(1*1) = 1*2 = 3.
  CHECK_THROWS_AS(CayleyTable(Rows{{0, 1, 2, 3, 4},
                                   {1, 2, 3, 4, 0},
                                   {2, 0, 4, 1, 3},
                                   {3, 4, 0, 2, 1},
                                   {4, 3, 1, 0, 2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(cyclic_table(513), std::invalid_argument);
}

TEST_CASE("table file parsing") {
  auto parse = [](const std::string &text) {
    std::istringstream in(text);
    return read_table_stream(in, "mem");
  };

  CayleyTable t = parse("# cyclic of order 3\n\norder 3\n0 1 2\n# middle\n"
                        "1 2 0\n2 0 1\n");
  CHECK(t.order() == 3);
  CHECK(t.mul(1, 2) == 0);

  auto line_of = [&](const std::string &text) {
    try {
      parse(text);
    } catch (const ParseError &e) {
      return e.line();
    }
    return std::size_t(9999);
  };
  CHECK(line_of("0 1\n1 0\n") == 1);
  CHECK(line_of("order 0\n") == 1);
  CHECK(line_of("order 2 junk\n") == 1);
  CHECK(line_of("order 2\n0 1\n1 2\n") == 3);
  CHECK(line_of("order 2\n0 1\n1 x\n") == 3);
  CHECK(line_of("order 2\n0 1 1\n") == 2);
  CHECK(line_of("order 2\n0 1\n1 0\n0 1\n") == 4);
  CHECK(line_of("order 2\n0 1\n") == 2);
  CHECK(line_of("") == 0);
  CHECK(line_of("# only a comment\n") == 0);

  // Round-trip is byte-identical.
  std::ostringstream out1, out2;
  write_table_stream(out1, q8_table());
  std::istringstream back(out1.str());
  CayleyTable again = read_table_stream(back, "mem");
  CHECK(again.rows() == q8_table().rows());
  write_table_stream(out2, again);
  CHECK(out1.str() == out2.str());
}

TEST_CASE("generic table builders") {
  CayleyTable c6 = cyclic_table(6);
  CHECK(c6.is_abelian());
  CHECK(c6.element_order(1) == 6);
  CHECK(c6.element_order(2) == 3);
  CHECK(c6.inv(1) == 5);

  CayleyTable c2xc3 = direct_product_table(cyclic_table(2), cyclic_table(3));
  auto iso = find_isomorphism(c2xc3, c6);
  REQUIRE(iso.has_value());
  CHECK(is_table_isomorphism(c2xc3, c6, *iso));

  CayleyTable d4 = dihedral_table(4);
  CHECK(d4.order() == 8);
  CHECK_FALSE(d4.is_abelian());
  CHECK(d4.center() == std::vector<std::uint32_t>{0, 2});
  CHECK(d4.element_order(1) == 4);
  CHECK(d4.element_order(4) == 2);
  CHECK(d4.commutator_subgroup() == std::vector<std::uint32_t>{0, 2});

  // The table of the regular representation of C5 is C5's table again.
  CayleyTable c5 = cyclic_table(5);
  CHECK(table_from_perm_group(c5.regular_representation()).rows() ==
        c5.rows());
}

TEST_CASE("quaternion group table") {
  CayleyTable q8 = q8_table();
  CHECK(q8.order() == 8);
  CHECK_FALSE(q8.is_abelian());
  CHECK(element_order_multiset(q8) ==
        std::vector<std::uint32_t>{1, 2, 4, 4, 4, 4, 4, 4});
  CHECK(q8.center() == std::vector<std::uint32_t>{0, 1});
  CHECK(q8.commutator_subgroup() == std::vector<std::uint32_t>{0, 1});
  CHECK(q8.frattini_subgroup() == std::vector<std::uint32_t>{0, 1});
  CHECK(q8.small_generating_set() == std::vector<std::uint32_t>{1, 2, 4});
  CHECK(q8.inv(2) == 3);
  CHECK(q8.mul(2, 4) == 6);  // i * j = k
  CHECK(q8.mul(4, 2) == 7);  // j * i = -k
  CHECK(q8.conjugacy_class_sizes() ==
        std::vector<std::uint32_t>{1, 1, 2, 2, 2, 2, 2, 2});

  // Regular representation: right translations by i and j.
  PermGroup reg = q8.regular_representation();
  CHECK(reg.order() == 8);
  Perm ti({2, 3, 1, 0, 7, 6, 4, 5});
  Perm tj({4, 5, 6, 7, 1, 0, 3, 2});
  CHECK(reg.same_group_as(PermGroup(8, {ti, tj})));
  CHECK(reg.transitivity_profile().is_semiregular);
}

TEST_CASE("unitary Sylow subgroups") {
  CayleyTable s2 = su3_sylow(2);
  CHECK(s2.order() == 8);
  auto iso = find_isomorphism(s2, q8_table());
  REQUIRE(iso.has_value());
  CHECK(is_table_isomorphism(s2, q8_table(), *iso));

  CayleyTable s3 = su3_sylow(3);
  CHECK(s3.order() == 27);
  CHECK(s3.center().size() == 3);
  CHECK(s3.commutator_subgroup() == s3.center());
  for (std::uint32_t a = 1; a < 27; ++a)
    CHECK(s3.element_order(a) == 3); // exponent 3
  auto iso27 = find_isomorphism(s3, extraspecial_plus(3, 1));
  REQUIRE(iso27.has_value());
  CHECK(is_table_isomorphism(s3, extraspecial_plus(3, 1), *iso27));

  CayleyTable s4 = su3_sylow(4);
  CHECK(s4.order() == 64);
  CHECK(s4.center().size() == 4);
  CHECK(s4.commutator_subgroup() == s4.center());
  CHECK(s4.frattini_subgroup() == s4.center());
  std::uint32_t order4 = 0;
  for (std::uint32_t a = 0; a < 64; ++a) {
    CHECK(s4.element_order(a) <= 4);
    if (s4.element_order(a) == 4)
      ++order4;
    // Squares land in the center: the quotient is elementary abelian.
    CHECK(std::binary_search(s4.center().begin(), s4.center().end(),
                             s4.power(a, 2)));
  }
  // Every involution is central, so exactly the 60 non-central elements
  // have order 4.
  CHECK(order4 == 60);

  CHECK_THROWS_AS(su3_sylow(6), std::invalid_argument);
  CHECK_THROWS_AS(su3_sylow(9), std::invalid_argument); // 729 > cap
  CHECK_THROWS_AS(su3_sylow(1), std::invalid_argument);
}

TEST_CASE("extraspecial plus-type groups") {
  CayleyTable e27 = extraspecial_plus(3, 1);
  CHECK(e27.order() == 27);
  CHECK(e27.center().size() == 3);
  CHECK(e27.commutator_subgroup() == e27.center());
  CHECK(e27.frattini_subgroup() == e27.center());
  for (std::uint32_t a = 1; a < 27; ++a)
    CHECK(e27.element_order(a) == 3);

  CayleyTable e243 = extraspecial_plus(3, 2);
  CHECK(e243.order() == 243);
  CHECK(e243.center().size() == 3);
  CHECK(e243.commutator_subgroup() == e243.center());
  CHECK(e243.frattini_subgroup() == e243.center());
  for (std::uint32_t a = 1; a < 243; ++a)
    CHECK(e243.element_order(a) == 3);

  CHECK_THROWS_AS(extraspecial_plus(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(extraspecial_plus(9, 1), std::invalid_argument);
  CHECK_THROWS_AS(extraspecial_plus(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(extraspecial_plus(3, 0), std::invalid_argument);
}

TEST_CASE("automorphism groups of small tables") {
  CHECK(automorphism_group(cyclic_table(1)).order() == 1);
  CHECK(automorphism_group(cyclic_table(4)).order() == 2);
  CHECK(automorphism_group(cyclic_table(5)).order() == 4);
  CHECK(automorphism_group(cyclic_table(6)).order() == 2);
  CayleyTable v4 = direct_product_table(cyclic_table(2), cyclic_table(2));
  CHECK(automorphism_group(v4).order() == 6);
  CHECK(automorphism_group(dihedral_table(3)).order() == 6);
  CHECK(automorphism_group(dihedral_table(4)).order() == 8);
  CHECK(automorphism_group(q8_table()).order() == 24);
  CHECK(automorphism_group(su3_sylow(3)).order() == 432);

  // Every automorphism returned is one, and they act on the element set.
  PermGroup aut = automorphism_group(q8_table());
  for (const Perm &a : aut.generators()) {
    CHECK(is_table_isomorphism(q8_table(), q8_table(), a));
    CHECK(a[0] == 0);
  }
}

TEST_CASE("automorphism counts match unpruned enumeration") {
  std::vector<CayleyTable> corpus;
  for (std::uint32_t n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 16})
    corpus.push_back(cyclic_table(n));
  CayleyTable c2 = cyclic_table(2);
  CayleyTable v4 = direct_product_table(c2, c2);
  corpus.push_back(v4);
  corpus.push_back(direct_product_table(c2, cyclic_table(4)));
  corpus.push_back(direct_product_table(c2, v4));
  corpus.push_back(direct_product_table(v4, v4));
  corpus.push_back(direct_product_table(cyclic_table(4), cyclic_table(4)));
  corpus.push_back(direct_product_table(cyclic_table(3), cyclic_table(3)));
  corpus.push_back(direct_product_table(c2, q8_table()));
  corpus.push_back(dihedral_table(3));
  corpus.push_back(dihedral_table(4));
  corpus.push_back(dihedral_table(6));
  corpus.push_back(dihedral_table(8));
  corpus.push_back(q8_table());
  // A4 from its natural action on four points.
  corpus.push_back(table_from_perm_group(
      PermGroup(4, {Perm({1, 2, 0, 3}), Perm({0, 2, 3, 1})})));

  for (const CayleyTable &t : corpus) {
    REQUIRE(t.order() <= 16);
    CHECK(automorphism_group(t).order() == brute_automorphism_count(t));
  }
}

TEST_CASE("isomorphism search distinguishes groups") {
  CHECK_FALSE(find_isomorphism(q8_table(), dihedral_table(4)).has_value());
  CHECK_FALSE(find_isomorphism(
                  cyclic_table(4),
                  direct_product_table(cyclic_table(2), cyclic_table(2)))
                  .has_value());
  CHECK_FALSE(find_isomorphism(cyclic_table(4), cyclic_table(5)).has_value());

  // The table of the regular representation of Q8 is isomorphic to Q8.
  auto iso = find_isomorphism(
      table_from_perm_group(q8_table().regular_representation()), q8_table());
  REQUIRE(iso.has_value());
}

TEST_CASE("holomorphs") {
  // Hol(C3) is S3 in its natural action.
  PermGroup h3 = holomorph(cyclic_table(3));
  CHECK(h3.order() == 6);
  CHECK(h3.same_group_as(PermGroup(3, {Perm({1, 2, 0}), Perm({0, 2, 1})})));

  // Hol(Q8) has order 192, acts transitively of rank 3 with subdegrees
  // (1, 1, 6), and the stabilizer of the identity is Aut(Q8).
  CayleyTable q8 = q8_table();
  PermGroup aut = automorphism_group(q8);
  PermGroup hol = holomorph_with_aut(q8, aut);
  CHECK(hol.order() == 192);
  auto [rank, sub] = hol.rank_and_subdegrees();
  CHECK(rank == 3);
  CHECK(sub == std::vector<std::uint64_t>{1, 1, 6});
  CHECK(hol.point_stabilizer(0).same_group_as(aut));

  // Hol of the order-27 group of exponent 3: order 27 * 432, rank 3.
  PermGroup h27 = holomorph(su3_sylow(3));
  CHECK(h27.order() == 27 * 432);
  auto [rank27, sub27] = h27.rank_and_subdegrees();
  CHECK(rank27 == 3);
  CHECK(sub27 == std::vector<std::uint64_t>{1, 2, 24});
}
