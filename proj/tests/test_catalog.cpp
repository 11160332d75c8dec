#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "semiprim/catalog.hpp"
#include "semiprim/certificates.hpp"
#include "semiprim/special_groups.hpp"
#include "semiprim/structure.hpp"

using namespace semiprim;

namespace {

const std::string kDataDir = std::string(SEMIPRIM_SOURCE_DIR) + "/data";

const CatalogEntry &entry_named(const std::vector<CatalogEntry> &entries,
                                const std::string &name) {
  for (const CatalogEntry &e : entries)
    if (e.name == name)
      return e;
  FAIL("no entry named " + name);
  throw std::logic_error("unreachable");
}

std::string check_actual(const std::vector<CheckResult> &checks,
                         const std::string &name) {
  for (const CheckResult &c : checks)
    if (c.name == name)
      return c.actual;
  return "<missing check: " + name + ">";
}

bool check_failed(const std::vector<CheckResult> &checks,
                  const std::string &name) {
  for (const CheckResult &c : checks)
    if (c.name == name)
      return !c.pass;
  return false;
}

} // namespace

TEST_CASE("primitive prime divisor sets") {
  CHECK(ppd_set(2, 6) == std::set<std::uint64_t>{});
  CHECK(ppd_set(2, 4) == std::set<std::uint64_t>{5});
  CHECK(ppd_set(3, 1) == std::set<std::uint64_t>{2});
  CHECK(ppd_set(2, 1) == std::set<std::uint64_t>{});
  CHECK(ppd_set(2, 2) == std::set<std::uint64_t>{3});
  CHECK(ppd_set(5, 1) == std::set<std::uint64_t>{2});
  CHECK(ppd_set(7, 2) == std::set<std::uint64_t>{});
  CHECK(ppd_set(2, 10) == std::set<std::uint64_t>{11});
  CHECK_THROWS_AS(ppd_set(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(ppd_set(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(ppd_set(1000003, 7), std::overflow_error);
}

TEST_CASE("covering family accepts the linear anchor cases") {
  CoveringReport gl23 =
      verify_covering_family({2, 3, 1, 2, SubgroupSpec::GL});
  INFO(gl23.rejection);
  CHECK(gl23.accepted);
  CHECK(gl23.degree == 8);
  CHECK(gl23.group_order == 48);
  CHECK(gl23.stabilizer_order == 6);
  CHECK(gl23.rank == 3);
  CHECK(gl23.subdegrees == std::vector<std::uint64_t>{1, 1, 6});
  CHECK(check_actual(gl23.checks, "scalar extension non-split") == "true");

  CoveringReport gl33 =
      verify_covering_family({3, 3, 1, 2, SubgroupSpec::GL});
  INFO(gl33.rejection);
  CHECK(gl33.accepted);
  CHECK(gl33.degree == 26);
  CHECK(gl33.subdegrees == std::vector<std::uint64_t>{1, 1, 24});
  CHECK(gl33.group_order == 11232);
}

TEST_CASE("covering family accepts the semilinear anchor case") {
  CoveringReport gamma =
      verify_covering_family({2, 2, 2, 3, SubgroupSpec::GammaL});
  INFO(gamma.rejection);
  CHECK(gamma.accepted);
  CHECK(gamma.degree == 15);
  CHECK(gamma.rank == 3);
  CHECK(gamma.subdegrees == std::vector<std::uint64_t>{1, 2, 12});
  CHECK(check_actual(gamma.checks, "outer action on scalars") == "2");
}

TEST_CASE("covering family rejects the confined semilinear case") {
  CoveringReport sigma =
      verify_covering_family({2, 3, 2, 2, SubgroupSpec::SigmaL});
  CHECK_FALSE(sigma.accepted);
  CHECK(sigma.rejection == "rank ≠ 3");
  CHECK(check_failed(sigma.checks, "rank"));
}

TEST_CASE("covering family arithmetic preconditions throw") {
  // r does not divide q - 1
  CHECK_THROWS_AS(verify_covering_family({2, 3, 1, 3, SubgroupSpec::GL}),
                  std::invalid_argument);
  // q - 1 = 1 has no prime divisor at all
  CHECK_THROWS_AS(verify_covering_family({2, 2, 1, 2, SubgroupSpec::GL}),
                  std::invalid_argument);
  // r - 1 = 2 does not divide f = 1
  CHECK_THROWS_AS(verify_covering_family({2, 7, 1, 3, SubgroupSpec::GL}),
                  std::invalid_argument);
  // composite r
  CHECK_THROWS_AS(verify_covering_family({2, 5, 1, 4, SubgroupSpec::GL}),
                  std::invalid_argument);
  // d too small
  CHECK_THROWS_AS(verify_covering_family({1, 3, 1, 2, SubgroupSpec::GL}),
                  std::invalid_argument);
}

TEST_CASE("covering family reports are deterministic") {
  CoveringReport a = verify_covering_family({2, 2, 2, 3, SubgroupSpec::GammaL});
  CoveringReport b = verify_covering_family({2, 2, 2, 3, SubgroupSpec::GammaL});
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].name == b.checks[i].name);
    CHECK(a.checks[i].expected == b.checks[i].expected);
    CHECK(a.checks[i].actual == b.checks[i].actual);
  }
}

TEST_CASE("shipped entries carry the classified invariants") {
  std::vector<CatalogEntry> entries = shipped_entries();
  REQUIRE(entries.size() == 5);

  // (degree, stabilizer order, |N|) per entry.
  std::vector<std::tuple<std::string, Point, std::uint64_t, std::uint64_t>>
      expected = {{"3.S6", 18, 120, 3},
                  {"2.M12", 24, 7920, 2},
                  {"GL2(3)", 8, 6, 2},
                  {"2^{2+4}:GL1(16)", 64, 60, 4},
                  {"2^4:GL3(2)", 16, 168, 2}};
  for (const auto &[name, degree, stab, n_order] : expected) {
    const CatalogEntry &e = entry_named(entries, name);
    CHECK(e.degree == degree);
    CHECK(e.stabilizer_order == stab);
    CHECK(e.n_order == n_order);
    CHECK(e.rank == 3);
    CHECK(e.order == std::uint64_t(degree) * stab);
  }
}

TEST_CASE("table builders produce the documented groups") {
  PermGroup a = build_table1_group("3.S6-a", kDataDir);
  CHECK(a.degree() == 18);
  CHECK(a.order() == 2160);

  PermGroup b = build_table1_group("3.S6-b", kDataDir);
  CHECK(b.degree() == 18);
  CHECK(b.order() == 2160);

  PermGroup gl_b = build_table1_group("GL2(3)-b", kDataDir);
  CHECK(gl_b.degree() == 8);
  CHECK(gl_b.order() == 48);

  PermGroup affine = build_table1_group("2^4:GL3(2)", kDataDir);
  CHECK(affine.degree() == 16);
  CHECK(affine.order() == 2688);
  CHECK(affine.rank_and_subdegrees() ==
        std::make_pair(std::uint64_t(3), std::vector<std::uint64_t>{1, 1, 14}));

  CHECK_THROWS_AS(build_table1_group("nonsense", kDataDir),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_table1_group("3.S6-a", kDataDir + "/missing"),
                  std::exception);
}

TEST_CASE("every shipped entry verifies") {
  for (const CatalogEntry &entry : shipped_entries()) {
    EntryReport rep = verify_entry(entry, kDataDir);
    INFO("entry " << entry.name);
    for (const CheckResult &c : rep.checks) {
      INFO(c.name << ": expected " << c.expected << ", actual " << c.actual);
      CHECK(c.pass);
    }
    CHECK(rep.passed);
  }
}

TEST_CASE("the affine entry has exactly four normal subgroups") {
  PermGroup x = build_table1_group("2^4:GL3(2)", kDataDir);
  SemiprimitivityCertificate cert = semiprimitivity_certificate(x);
  REQUIRE(cert.lattice.nodes.size() == 4);
  std::vector<std::uint64_t> orders;
  for (const LatticeNode &node : cert.lattice.nodes)
    orders.push_back(node.order.get_ui());
  CHECK(orders == std::vector<std::uint64_t>{1, 2, 16, 2688});
}

TEST_CASE("representation counts match the classification") {
  PermGroup gl23 = build_table1_group("GL2(3)-a", kDataDir);
  CHECK(count_rank3_reps(gl23, 8) == 2);

  PermGroup affine = build_table1_group("2^4:GL3(2)", kDataDir);
  CHECK(count_rank3_reps(affine, 16) == 1);

  PermGroup hol64 = build_table1_group("2^{2+4}:GL1(16)", kDataDir);
  CHECK(count_rank3_reps(hol64, 64) == 1);

  CHECK_THROWS_AS(count_rank3_reps(gl23, 7), std::invalid_argument);
}

TEST_CASE("holomorph point group identities") {
  {
    CayleyTable t = q8_table();
    SearchResult res = search_semiprimitive_rank3(t, SearchConfig{});
    REQUIRE(res.hits.size() == 1);
    PermGroup g(8, res.hits[0].group_generators);
    HolomorphPointChecks checks = holomorph_point_group_checks(t, g);
    CHECK(checks.point_group_order == 6);
    CHECK(checks.center_order == 2);
    CHECK(checks.centralizer_index_identity);
    CHECK(checks.faithful_on_central_quotient);
    CHECK(checks.transitive_on_center);
    CHECK(checks.transitive_on_quotient);
  }
  {
    CayleyTable t = su3_sylow(4);
    PermGroup x = build_table1_group("2^{2+4}:GL1(16)", kDataDir);
    PermGroup g = x.point_stabilizer(0);
    HolomorphPointChecks checks = holomorph_point_group_checks(t, g);
    CHECK(checks.point_group_order == 60);
    CHECK(checks.center_order == 4);
    CHECK(checks.centralizer_index_identity);
    CHECK(checks.faithful_on_central_quotient);
    CHECK(checks.transitive_on_center);
    CHECK(checks.transitive_on_quotient);
  }
}

TEST_CASE("the product control is rejected with named mismatches") {
  ProductControl control = product_control_3xS6();
  CHECK(control.group.order() == 2160);
  CHECK(control.group.degree() == 18);
  auto [rank, subdegrees] = control.group.rank_and_subdegrees();
  CHECK(rank == 6);
  CHECK(subdegrees == std::vector<std::uint64_t>{1, 1, 1, 5, 5, 5});

  SplitnessReport split =
      complement_exists(control.group, control.normal_c3);
  CHECK(split.splits);

  std::vector<CatalogEntry> entries = shipped_entries();
  const CatalogEntry &entry = entry_named(entries, "3.S6");
  EntryReport rep = verify_entry_against(entry, control.group);
  CHECK_FALSE(rep.passed);
  CHECK(check_failed(rep.checks, "rank"));
  CHECK(check_failed(rep.checks, "semiprimitive"));
  CHECK(check_failed(rep.checks,
                     "splits over the order-3 normal subgroup"));
}

TEST_CASE("serialized reports are canonical and stable") {
  CoveringReport report =
      verify_covering_family({2, 3, 1, 2, SubgroupSpec::GL});
  std::string once = canonical_json(json_of(report));
  std::string twice = canonical_json(
      json_of(verify_covering_family({2, 3, 1, 2, SubgroupSpec::GL})));
  CHECK(once == twice);
  CHECK(once.back() == '\n');
  CHECK(digest_of(json_of(report)).size() == 16);

  ordered_json doc = ordered_json::parse(once);
  CHECK(doc["accepted"] == true);
  CHECK(doc["degree"] == 8);
  CHECK(doc["params"]["subgroup"] == "GL");
  CHECK(doc["subdegrees"] == ordered_json::array({1, 1, 6}));

  CayleyTable t = q8_table();
  SearchResult res = search_semiprimitive_rank3(t, SearchConfig{});
  ordered_json search_doc = json_of(res);
  CHECK(search_doc["table_order"] == 8);
  CHECK(search_doc["classes_examined"] == 3);
  CHECK(search_doc["exhaustive"] == true);
  REQUIRE(search_doc["hits"].size() == 1);
  CHECK(search_doc["hits"][0]["group_order"] == "6");
  CHECK(search_doc["hits"][0]["extension_order"] == "48");
  CHECK(search_doc["hits"][0]["certificate"]["verdict"] == true);
  CHECK(search_doc["hits"][0]["certificate"]["witness_index"].is_null());

  PermGroup x = build_table1_group("GL2(3)-a", kDataDir);
  ordered_json cert_doc = json_of(semiprimitivity_certificate(x));
  REQUIRE(cert_doc["lattice"]["nodes"].size() == 5);
  CHECK(cert_doc["lattice"]["nodes"][0]["order"] == "1");
  CHECK(cert_doc["lattice"]["nodes"][1]["order"] == "2");
  CHECK(cert_doc["lattice"]["nodes"][1]["flag"] == "semiregular");
  CHECK(cert_doc["lattice"]["nodes"][4]["order"] == "48");
}

TEST_CASE("non-split extensions of the ingested covers") {
  PermGroup x = build_table1_group("3.S6-a", kDataDir);
  SemiprimitivityCertificate cert = semiprimitivity_certificate(x);
  std::optional<PermGroup> c3;
  for (const LatticeNode &node : cert.lattice.nodes)
    if (node.order == 3)
      c3 = node.subgroup;
  REQUIRE(c3.has_value());
  CHECK_FALSE(complement_exists(x, *c3).splits);
}
