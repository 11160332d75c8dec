#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "semiprim/perm.hpp"
#include "semiprim/perm_group.hpp"

/**
 * @file structure.hpp
 * @brief Structural analysis of permutation groups: derived series,
 *        conjugacy classes, the complete normal-subgroup lattice with
 *        transitive/semiregular flags, semiprimitivity certificates,
 *        centralizers of normal subgroups, and complement existence.
 */

namespace semiprim {

// ---------------------------------------------------------------------------
// Derived series and solvability.
// ---------------------------------------------------------------------------

/// Normal closure of <seed> in g: close the seed under conjugation by the
/// generators of g, adding a conjugate whenever it is not yet a member.
inline PermGroup normal_closure(const PermGroup &g,
                                const std::vector<Perm> &seed) {
  std::vector<Perm> gens;
  for (const Perm &s : seed)
    if (!s.is_identity())
      gens.push_back(s);
  if (gens.empty())
    return PermGroup(g.degree());

  PermGroup current(g.degree(), gens);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const Perm &x : g.generators()) {
      Perm c = gens[i].conjugated_by(x);
      if (!current.contains(c)) {
        gens.push_back(std::move(c));
        current = PermGroup(g.degree(), gens);
      }
    }
  }
  return current;
}

/// Derived subgroup: normal closure of the generator commutators.
inline PermGroup derived_subgroup(const PermGroup &g) {
  std::vector<Perm> commutators;
  const auto &gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Perm c = gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j];
      if (!c.is_identity())
        commutators.push_back(std::move(c));
    }
  return normal_closure(g, commutators);
}

/// G, G', G'', ... down to the first repetition (trivial iff solvable).
inline std::vector<PermGroup> derived_series(const PermGroup &g) {
  std::vector<PermGroup> series{g};
  while (true) {
    PermGroup next = derived_subgroup(series.back());
    if (next.order() == series.back().order())
      break;
    series.push_back(std::move(next));
    if (series.back().is_trivial())
      break;
  }
  return series;
}

inline bool is_solvable(const PermGroup &g) {
  return derived_series(g).back().is_trivial();
}

// ---------------------------------------------------------------------------
// Conjugacy classes.
// ---------------------------------------------------------------------------

struct ConjugacyClass {
  Perm representative; // least element of the class
  std::uint64_t size;
};

/// All conjugacy classes by full element enumeration; representatives are the
/// least class members and classes are listed by ascending representative.
inline std::vector<ConjugacyClass>
conjugacy_classes(const PermGroup &g, std::uint64_t cap = 1000000) {
  std::vector<Perm> elems = g.elements(cap);
  std::sort(elems.begin(), elems.end());

  std::unordered_set<Perm, PermHash> visited;
  visited.reserve(elems.size());
  std::vector<ConjugacyClass> classes;
  for (const Perm &e : elems) {
    if (visited.count(e))
      continue;
    std::vector<Perm> queue{e};
    visited.insert(e);
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const Perm &x : g.generators()) {
        Perm c = queue[i].conjugated_by(x);
        if (visited.insert(c).second)
          queue.push_back(std::move(c));
      }
    classes.push_back({e, queue.size()});
  }
  return classes;
}

// ---------------------------------------------------------------------------
// Normal-subgroup lattice and semiprimitivity.
// ---------------------------------------------------------------------------

enum class NodeFlag { trivial, semiregular, transitive, both, violating };

inline const char *node_flag_name(NodeFlag f) {
  switch (f) {
  case NodeFlag::trivial:
    return "trivial";
  case NodeFlag::semiregular:
    return "semiregular";
  case NodeFlag::transitive:
    return "transitive";
  case NodeFlag::both:
    return "both";
  case NodeFlag::violating:
    return "violating";
  }
  return "?";
}

struct LatticeNode {
  PermGroup subgroup{1};
  mpz_class order;
  NodeFlag flag = NodeFlag::trivial;
};

struct NormalSubgroupLattice {
  std::vector<LatticeNode> nodes; // ascending order; includes 1 and the group
  std::vector<std::pair<std::size_t, std::size_t>> edges; // proper containment
};

namespace detail {

/// Deterministic tie-break key for nodes of equal order: the sorted list of
/// generator image sequences.
inline std::vector<std::vector<Point>> node_key(const PermGroup &h) {
  std::vector<std::vector<Point>> key;
  for (const Perm &p : h.generators())
    key.push_back(p.images());
  std::sort(key.begin(), key.end());
  return key;
}

/// Flag assignment. With `prune` set, monotone shortcuts are taken:
/// a node containing a transitive node is transitive without an orbit scan,
/// and a node inside a semiregular node is semiregular without one.
inline void assign_flags(std::vector<LatticeNode> &nodes,
                         const std::vector<std::pair<std::size_t, std::size_t>>
                             &edges,
                         bool prune) {
  const std::size_t n = nodes.size();
  std::vector<std::vector<bool>> contains(n, std::vector<bool>(n, false));
  for (auto [a, b] : edges)
    contains[b][a] = true; // b properly contains a

  std::vector<std::optional<bool>> transitive(n), semiregular(n);

  // Ascending pass: transitivity, propagated upward from smaller nodes.
  for (std::size_t i = 0; i < n; ++i) {
    if (prune)
      for (std::size_t a = 0; a < i && !transitive[i].has_value(); ++a)
        if (contains[i][a] && transitive[a] == true)
          transitive[i] = true;
    if (!transitive[i].has_value()) {
      std::size_t first_orbit = nodes[i].subgroup.orbit_of(0).size();
      transitive[i] = first_orbit == nodes[i].subgroup.degree();
    }
  }

  // Descending pass: semiregularity, propagated downward from larger nodes.
  for (std::size_t ii = n; ii-- > 0;) {
    if (prune)
      for (std::size_t b = ii + 1; b < n && !semiregular[ii].has_value(); ++b)
        if (contains[b][ii] && semiregular[b] == true)
          semiregular[ii] = true;
    if (!semiregular[ii].has_value()) {
      bool sr = true;
      for (const auto &orb : nodes[ii].subgroup.orbits())
        if (mpz_class(static_cast<unsigned long>(orb.size())) !=
            nodes[ii].order) {
          sr = false;
          break;
        }
      semiregular[ii] = sr;
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (nodes[i].order == 1)
      nodes[i].flag = NodeFlag::trivial;
    else if (*transitive[i] && *semiregular[i])
      nodes[i].flag = NodeFlag::both;
    else if (*transitive[i])
      nodes[i].flag = NodeFlag::transitive;
    else if (*semiregular[i])
      nodes[i].flag = NodeFlag::semiregular;
    else
      nodes[i].flag = NodeFlag::violating;
  }
}

} // namespace detail

/// Complete normal-subgroup lattice: normal closures of single
/// conjugacy-class representatives, closed under pairwise join, each node
/// re-verified normal by generator conjugation. Node flags are computed
/// without pruning shortcuts here.
inline NormalSubgroupLattice normal_subgroups(const PermGroup &g,
                                              std::uint64_t cap = 1000000) {
  std::vector<PermGroup> found;
  auto already_known = [&](const PermGroup &h) {
    for (const PermGroup &k : found)
      if (k.order() == h.order() && k.contains_subgroup(h))
        return true;
    return false;
  };
  auto add_if_new = [&](PermGroup h) {
    if (!already_known(h))
      found.push_back(std::move(h));
  };

  add_if_new(PermGroup(g.degree()));
  for (const ConjugacyClass &cls : conjugacy_classes(g, cap))
    add_if_new(normal_closure(g, {cls.representative}));

  bool grew = true;
  while (grew) {
    grew = false;
    std::size_t count = found.size();
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = i + 1; j < count; ++j) {
        std::vector<Perm> both = found[i].generators();
        const auto &more = found[j].generators();
        both.insert(both.end(), more.begin(), more.end());
        PermGroup join(g.degree(), std::move(both));
        if (!already_known(join)) {
          found.push_back(std::move(join));
          grew = true;
        }
      }
  }

  // Verify normality of every node directly.
  for (const PermGroup &h : found)
    for (const Perm &hg : h.generators())
      for (const Perm &x : g.generators())
        if (!h.contains(hg.conjugated_by(x)))
          throw std::logic_error("normal_subgroups: node failed normality check");

  std::sort(found.begin(), found.end(),
            [](const PermGroup &a, const PermGroup &b) {
              if (a.order() != b.order())
                return a.order() < b.order();
              return detail::node_key(a) < detail::node_key(b);
            });

  NormalSubgroupLattice lattice;
  for (PermGroup &h : found) {
    LatticeNode node;
    node.order = h.order();
    node.subgroup = std::move(h);
    lattice.nodes.push_back(std::move(node));
  }
  for (std::size_t i = 0; i < lattice.nodes.size(); ++i)
    for (std::size_t j = 0; j < lattice.nodes.size(); ++j)
      if (i != j && lattice.nodes[i].order < lattice.nodes[j].order &&
          lattice.nodes[j].subgroup.contains_subgroup(lattice.nodes[i].subgroup))
        lattice.edges.emplace_back(i, j);

  detail::assign_flags(lattice.nodes, lattice.edges, /*prune=*/false);
  return lattice;
}

struct SemiprimitivityCertificate {
  bool is_regular = false;
  NormalSubgroupLattice lattice;
  bool verdict = false;
  std::optional<std::size_t> witness_index; // violating node, if verdict false
};

/// Semiprimitivity: transitive, non-regular, and every normal subgroup
/// transitive or semiregular. Node flags here use the monotone pruning
/// shortcuts; `normal_subgroups` provides the unpruned reference.
inline SemiprimitivityCertificate
semiprimitivity_certificate(const PermGroup &g, std::uint64_t cap = 1000000) {
  SubdegreeProfile prof = g.transitivity_profile();
  if (!prof.is_transitive)
    throw std::invalid_argument(
        "semiprimitivity_certificate: group is intransitive");

  SemiprimitivityCertificate cert;
  cert.is_regular = prof.is_semiregular;
  cert.lattice = normal_subgroups(g, cap);
  detail::assign_flags(cert.lattice.nodes, cert.lattice.edges, /*prune=*/true);

  cert.verdict = !cert.is_regular;
  for (std::size_t i = 0; i < cert.lattice.nodes.size(); ++i)
    if (cert.lattice.nodes[i].flag == NodeFlag::violating) {
      cert.verdict = false;
      if (!cert.witness_index)
        cert.witness_index = i;
    }
  return cert;
}

// ---------------------------------------------------------------------------
// Centralizer of a normal subgroup via the conjugation action.
// ---------------------------------------------------------------------------

namespace detail {

inline void verify_normal(const PermGroup &g, const PermGroup &n,
                          const char *who) {
  if (!g.contains_subgroup(n))
    throw std::invalid_argument(std::string(who) + ": n is not a subgroup");
  for (const Perm &h : n.generators())
    for (const Perm &x : g.generators())
      if (!n.contains(h.conjugated_by(x)))
        throw std::invalid_argument(std::string(who) + ": n is not normal");
}

} // namespace detail

struct CentralizerResult {
  PermGroup centralizer;
  mpz_class outer_image_order; // |G| / |C_G(N)|
};

/// C_g(n) as the kernel of the conjugation action of g on the element list
/// of n. The n must be normal and small (its elements are materialized).
inline CentralizerResult centralizer_of_normal(const PermGroup &g,
                                               const PermGroup &n,
                                               std::uint64_t n_cap = 1000) {
  detail::verify_normal(g, n, "centralizer_of_normal");
  std::vector<Perm> n_elems = n.elements(n_cap);
  std::sort(n_elems.begin(), n_elems.end());

  Point m = static_cast<Point>(n_elems.size());
  std::vector<Perm> action;
  for (const Perm &x : g.generators()) {
    std::vector<Point> images(m);
    for (Point i = 0; i < m; ++i) {
      Perm c = n_elems[i].conjugated_by(x);
      auto it = std::lower_bound(n_elems.begin(), n_elems.end(), c);
      assert(it != n_elems.end() && *it == c);
      images[i] = static_cast<Point>(it - n_elems.begin());
    }
    action.emplace_back(std::move(images));
  }

  CentralizerResult res{action_kernel(g, action), 0};
  res.outer_image_order = g.order() / res.centralizer.order();
  mpz_class image_order = PermGroup(std::max<Point>(m, 1), action).order();
  if (res.outer_image_order != image_order)
    throw std::logic_error(
        "centralizer_of_normal: kernel/image order mismatch");
  return res;
}

// ---------------------------------------------------------------------------
// Complement existence (splitness) by exhaustive lift backtracking.
// ---------------------------------------------------------------------------

struct SplitnessReport {
  bool splits = false;
  std::optional<PermGroup> complement;
  std::uint64_t tuples_examined = 0;
  std::size_t quotient_generators = 0;
};

/// Does n ⊴ g admit a complement? Pick the fewest members (k ≤ 4) of the
/// reduced generating sequence of g whose images generate g/n, then try every
/// of the |N|^k ways to adjust them by elements of n; a complement exists iff
/// some adjusted tuple generates a subgroup of order |g|/|n| meeting n
/// trivially. When no complement exists every tuple has been examined.
inline SplitnessReport complement_exists(const PermGroup &g,
                                         const PermGroup &n,
                                         std::uint64_t n_cap = 16,
                                         std::size_t max_quotient_gens = 4) {
  detail::verify_normal(g, n, "complement_exists");
  mpz_class q_order = g.order() / n.order();

  SplitnessReport report;
  if (q_order == 1) {
    report.splits = true;
    report.complement = PermGroup(g.degree());
    report.tuples_examined = 1;
    return report;
  }

  if (n.order() > n_cap)
    throw std::runtime_error("complement_exists: |N| exceeds cap");
  std::vector<Perm> n_elems = n.elements(n_cap);
  std::sort(n_elems.begin(), n_elems.end()); // identity first

  // Deterministic generating sequence; smallest subset whose images generate
  // the quotient, i.e. which together with n generates g.
  std::vector<Perm> seq = reduced_generators(g);
  std::vector<Perm> chosen;
  {
    std::vector<std::size_t> pick;
    auto subset_works = [&](const std::vector<std::size_t> &idx) {
      std::vector<Perm> test = n.generators();
      for (std::size_t i : idx)
        test.push_back(seq[i]);
      return PermGroup(g.degree(), test).order() == g.order();
    };
    bool done = false;
    for (std::size_t k = 1; k <= std::min(max_quotient_gens, seq.size()) && !done;
         ++k) {
      std::vector<std::size_t> idx(k);
      std::function<bool(std::size_t, std::size_t)> rec =
          [&](std::size_t pos, std::size_t from) {
            if (pos == k)
              return subset_works(idx);
            for (std::size_t i = from; i < seq.size(); ++i) {
              idx[pos] = i;
              if (rec(pos + 1, i + 1))
                return true;
            }
            return false;
          };
      if (rec(0, 0)) {
        for (std::size_t i : idx)
          chosen.push_back(seq[i]);
        done = true;
      }
    }
    if (!done)
      throw std::runtime_error(
          "complement_exists: quotient generator cap exceeded");
  }
  report.quotient_generators = chosen.size();

  // Odometer over all |N|^k lift tuples.
  const std::size_t k = chosen.size();
  std::vector<std::size_t> odo(k, 0);
  while (true) {
    ++report.tuples_examined;
    std::vector<Perm> lifts;
    lifts.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
      lifts.push_back(chosen[i] * n_elems[odo[i]]);
    PermGroup candidate(g.degree(), lifts);
    if (candidate.order() == q_order) {
      bool meets_n = false;
      for (const Perm &e : n_elems)
        if (!e.is_identity() && candidate.contains(e)) {
          meets_n = true;
          break;
        }
      if (!meets_n) {
        report.splits = true;
        report.complement = std::move(candidate);
        return report;
      }
    }
    std::size_t pos = 0;
    while (pos < k && ++odo[pos] == n_elems.size()) {
      odo[pos] = 0;
      ++pos;
    }
    if (pos == k)
      break;
  }
  report.splits = false;
  return report;
}

} // namespace semiprim
