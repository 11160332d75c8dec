#pragma once

// JSON serialization of the verification reports. Every serializer is
// deterministic: key order is fixed at construction, containers are emitted
// in their stored (already canonical) order, and multiprecision integers are
// rendered as decimal strings. `canonical_json` is the single rendering
// used for digests and files, so reruns are byte-identical.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "semiprim/catalog.hpp"
#include "semiprim/digest.hpp"
#include "semiprim/holsearch.hpp"
#include "semiprim/structure.hpp"

namespace semiprim {

using ordered_json = nlohmann::ordered_json;

/// The one rendering used everywhere: two-space indent, trailing newline.
inline std::string canonical_json(const ordered_json &doc) {
  return doc.dump(2) + "\n";
}

inline std::string digest_of(const ordered_json &doc) {
  return fnv1a64_hex(canonical_json(doc));
}

inline ordered_json json_of(const CheckResult &check) {
  return ordered_json{{"name", check.name},
                      {"expected", check.expected},
                      {"actual", check.actual},
                      {"pass", check.pass}};
}

inline ordered_json json_of(const EntryReport &report) {
  ordered_json checks = ordered_json::array();
  for (const CheckResult &c : report.checks)
    checks.push_back(json_of(c));
  return ordered_json{
      {"entry", report.name}, {"passed", report.passed}, {"checks", checks}};
}

inline ordered_json json_of(const CoveringParams &params) {
  return ordered_json{{"d", params.d},
                      {"p", params.p},
                      {"f", params.f},
                      {"r", params.r},
                      {"subgroup", subgroup_spec_name(params.omega)}};
}

inline ordered_json json_of(const CoveringReport &report) {
  ordered_json checks = ordered_json::array();
  for (const CheckResult &c : report.checks)
    checks.push_back(json_of(c));
  ordered_json doc{{"params", json_of(report.params)},
                   {"accepted", report.accepted}};
  if (!report.accepted)
    doc["rejection"] = report.rejection;
  doc["degree"] = report.degree;
  doc["group_order"] = report.group_order;
  doc["stabilizer_order"] = report.stabilizer_order;
  doc["rank"] = report.rank;
  doc["subdegrees"] = report.subdegrees;
  doc["checks"] = checks;
  return doc;
}

inline ordered_json json_of(const NormalSubgroupLattice &lattice) {
  ordered_json nodes = ordered_json::array();
  for (const LatticeNode &node : lattice.nodes)
    nodes.push_back(ordered_json{{"order", node.order.get_str()},
                                 {"flag", node_flag_name(node.flag)}});
  ordered_json edges = ordered_json::array();
  for (auto [a, b] : lattice.edges)
    edges.push_back(ordered_json::array({a, b}));
  return ordered_json{{"nodes", nodes}, {"edges", edges}};
}

inline ordered_json json_of(const SemiprimitivityCertificate &cert) {
  ordered_json doc{{"verdict", cert.verdict},
                   {"is_regular", cert.is_regular},
                   {"lattice", json_of(cert.lattice)}};
  if (cert.witness_index)
    doc["witness_index"] = *cert.witness_index;
  else
    doc["witness_index"] = nullptr;
  return doc;
}

inline ordered_json json_of(const SplitnessReport &report) {
  ordered_json doc{{"splits", report.splits},
                   {"tuples_examined", report.tuples_examined},
                   {"quotient_generators", report.quotient_generators}};
  doc["complement_order"] =
      report.complement ? ordered_json(report.complement->order().get_str())
                        : ordered_json(nullptr);
  return doc;
}

inline ordered_json json_of(const Perm &p) {
  ordered_json images = ordered_json::array();
  for (Point x = 0; x < p.degree(); ++x)
    images.push_back(p[x]);
  return images;
}

inline ordered_json json_of(const SearchHit &hit) {
  ordered_json gens = ordered_json::array();
  for (const Perm &p : hit.group_generators)
    gens.push_back(json_of(p));
  return ordered_json{{"group_order", hit.group_order.get_str()},
                      {"extension_order", hit.extension_order.get_str()},
                      {"rank", hit.rank},
                      {"subdegrees", hit.subdegrees},
                      {"certificate", json_of(hit.certificate)},
                      {"group_generators", gens}};
}

inline ordered_json json_of(const SearchResult &result) {
  ordered_json hits = ordered_json::array();
  for (const SearchHit &hit : result.hits)
    hits.push_back(json_of(hit));
  return ordered_json{{"table_order", result.table_order},
                      {"table_hash", result.table_hash},
                      {"classes_examined", result.classes_examined},
                      {"exhaustive", result.exhaustive},
                      {"hits", hits}};
}

inline ordered_json json_of(const HolomorphPointChecks &checks) {
  return ordered_json{
      {"point_group_order", checks.point_group_order},
      {"center_order", checks.center_order},
      {"centralizer_index_identity", checks.centralizer_index_identity},
      {"faithful_on_central_quotient", checks.faithful_on_central_quotient},
      {"transitive_on_center", checks.transitive_on_center},
      {"transitive_on_quotient", checks.transitive_on_quotient},
      {"all_pass", checks.all_pass()}};
}

} // namespace semiprim
