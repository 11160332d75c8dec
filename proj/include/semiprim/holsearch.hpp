#pragma once

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "semiprim/automorphisms.hpp"
#include "semiprim/cayley.hpp"
#include "semiprim/digest.hpp"
#include "semiprim/perm.hpp"
#include "semiprim/perm_group.hpp"
#include "semiprim/special_groups.hpp"
#include "semiprim/structure.hpp"
#include "semiprim/subgroups.hpp"

/**
 * @file holsearch.hpp
 * @brief Exhaustive search for semiprimitive rank-3 subgroups P:G of the
 *        holomorph of a finite group P with nontrivial proper center.
 *
 * A subgroup G ≤ Aut(P) extends the right regular representation of P to a
 * transitive group X = P:G on the element set of P, with the stabilizer of
 * the identity equal to G. Since automorphisms preserve the center Z, the
 * orbits of G refine {1} ∪ (Z \ {1}) ∪ (P \ Z); X has rank 3 exactly when G
 * realizes that three-part pattern. The search enumerates candidate classes
 * G up to Aut(P)-conjugacy, keeps those with the pattern, and decides
 * semiprimitivity of each X.
 *
 * Two facts drive the pruning. A hit is transitive on both Z \ {1} and
 * P \ Z, so |G| is divisible by L = lcm(|P| - |Z|, |Z| - 1). And for any
 * prime r | L with r² ∤ |Aut(P)| the Sylow r-subgroups are cyclic of order
 * r, so up to conjugacy every candidate contains one fixed copy; the full
 * interval of overgroups of that copy therefore covers every candidate
 * class. Three engines implement this at different scales:
 *
 *  - a cyclic-extension enumeration of all subgroup classes, for small
 *    solvable automorphism groups;
 *  - a breadth-first enumeration of the interval above a fixed Sylow
 *    r-subgroup, for automorphism groups whose elements can be listed;
 *  - a quotient-and-lift engine for extraspecial groups p^{1+2m} of
 *    exponent p, whose automorphism group p^{2m} : CSp_{2m}(p) is too large
 *    to list: candidates are assembled from an interval inside an explicit
 *    complement C ≅ CSp_{2m}(p) together with cocycle lifts over the inner
 *    automorphism layer.
 */

namespace semiprim {

struct SearchConfig {
  double budget_seconds = 1800.0;      // wall-clock budget for the whole run
  std::size_t element_budget = 100000; // cap on subgroup-enumeration lists
  bool extended = false;               // enable the large extraspecial engine
};

struct SearchHit {
  std::vector<Perm> group_generators; // G ≤ Aut(P), on the element set of P
  mpz_class group_order;              // |G|
  mpz_class extension_order;          // |P:G|
  std::uint64_t rank = 0;
  std::vector<std::uint64_t> subdegrees;
  SemiprimitivityCertificate certificate; // for X = P:G
};

struct SearchResult {
  std::uint32_t table_order = 0;
  std::string table_hash; // digest of the canonical table serialization
  std::uint64_t classes_examined = 0; // candidates surviving the order filter
  std::vector<SearchHit> hits;
  bool exhaustive = false;
};

/// True iff the orbits of g on the element set of t are exactly {1},
/// Z(t) \ {1}, and the set of non-central elements.
inline bool orbit_pattern_filter(const CayleyTable &t, const PermGroup &g) {
  if (g.degree() != t.order())
    throw std::invalid_argument(
        "orbit_pattern_filter: degree does not match table order");
  std::vector<std::uint32_t> center = t.center();
  if (center.size() < 2 || center.size() == t.order())
    return false; // one of the three required orbits would be empty
  std::vector<bool> central(t.order(), false);
  for (std::uint32_t z : center)
    central[z] = true;
  auto orbits = g.orbits();
  if (orbits.size() != 3)
    return false;
  // With exactly three orbits and three nonempty strata, the orbits match
  // the strata iff each orbit stays inside a single stratum.
  for (const auto &orbit : orbits) {
    int kinds = 0;
    bool has_id = false, has_central = false, has_outer = false;
    for (Point x : orbit) {
      if (x == 0)
        has_id = true;
      else if (central[x])
        has_central = true;
      else
        has_outer = true;
    }
    kinds = (has_id ? 1 : 0) + (has_central ? 1 : 0) + (has_outer ? 1 : 0);
    if (kinds != 1)
      return false;
  }
  return true;
}

namespace detail {

using SearchClock = std::chrono::steady_clock;

constexpr std::uint64_t kSolvableEngineCap = 1000;
constexpr std::uint64_t kIntervalElementCap = 2000000;
constexpr std::uint64_t kGenericCertificateCap = 100000;
constexpr std::uint64_t kAutBacktrackBudget = 200000;

/// lcm(|P| - |Z|, |Z| - 1): both orbit sizes divide a hit's order.
inline std::uint64_t forced_divisor(std::uint32_t n, std::uint32_t z) {
  return std::lcm<std::uint64_t>(n - z, z - 1);
}

/// X = P:G on the element set: right translations joined with G.
inline PermGroup build_extension(const CayleyTable &t, const PermGroup &g) {
  std::vector<Perm> gens;
  for (std::uint32_t a : t.small_generating_set())
    gens.push_back(t.right_translation(a));
  for (const Perm &s : g.generators())
    gens.push_back(s);
  PermGroup x(t.order(), gens);
  if (x.order() != g.order() * mpz_class(t.order()))
    throw std::logic_error("build_extension: unexpected extension order");
  return x;
}

/// Conjugation by a as a permutation of the element set: x ↦ a⁻¹xa.
inline Perm inner_automorphism(const CayleyTable &t, std::uint32_t a) {
  std::vector<Point> img(t.order());
  std::uint32_t ia = t.inv(a);
  for (std::uint32_t x = 0; x < t.order(); ++x)
    img[x] = t.mul(t.mul(ia, x), a);
  return Perm(std::move(img));
}

/// φ ∈ Sym(P) is an automorphism of t iff it fixes 0 and is multiplicative.
inline bool is_table_automorphism(const CayleyTable &t, const Perm &phi) {
  if (phi.degree() != t.order() || phi[0] != 0)
    return false;
  for (std::uint32_t a = 0; a < t.order(); ++a)
    for (std::uint32_t b = 0; b < t.order(); ++b)
      if (phi[t.mul(a, b)] != t.mul(phi[a], phi[b]))
        return false;
  return true;
}

/// Generators of G ∩ K where K is the kernel of the G-action on P/Z:
/// automorphisms φ ∈ G with φ(x) ∈ xZ for every x. Requires |G| small
/// enough to list.
inline std::vector<Perm> kernel_part_by_enumeration(const CayleyTable &t,
                                                    const PermGroup &g,
                                                    std::uint64_t cap) {
  std::vector<std::uint32_t> center = t.center();
  std::vector<bool> central(t.order(), false);
  for (std::uint32_t z : center)
    central[z] = true;
  std::vector<Perm> part;
  for (const Perm &e : g.elements(cap)) {
    bool in_kernel = true;
    for (std::uint32_t a = 0; a < t.order() && in_kernel; ++a)
      in_kernel = central[t.mul(t.inv(a), e[a])];
    if (in_kernel)
      part.push_back(e);
  }
  return part;
}

/// Decides semiprimitivity of X = P:G when [P, P] ≤ Z(P) and G has the
/// three-orbit pattern, inspecting only the X-invariant subgroups of
/// M = P · (G ∩ K), where K is the kernel of the action on P/Z.
///
/// Why M suffices: let N ⊴ X. The intersection N ∩ P (taken inside the
/// translation copy of P) is G-invariant, and under the orbit pattern the
/// only G-invariant subgroups of P are 1, Z, and P — a non-central element
/// drags in the whole orbit P \ Z, which generates a subgroup of index < 2,
/// and a central one drags in Z \ {1}. If N ∩ P = P then N is transitive.
/// Otherwise N ∩ P ≤ Z, and since N and P normalize each other,
/// [N, P] ≤ N ∩ P ≤ Z. Writing n = t_p·φ with φ ∈ G, the commutator of n
/// with the translation t_x is the translation by x⁻¹·(xᵖ)^φ, so
/// (xᵖ)^φ ≡ x (mod Z) for all x; because [P, P] ≤ Z this gives
/// φ(x) ≡ x (mod Z), that is φ ∈ G ∩ K and N ≤ M. Hence X is
/// semiprimitive iff every X-invariant subgroup of M is transitive or
/// semiregular.
///
/// The returned certificate lists those decisive subgroups (plus X itself)
/// as its lattice; every normal subgroup of X outside the list contains P
/// and is transitive.
inline SemiprimitivityCertificate
reduced_extension_certificate(const CayleyTable &t, const PermGroup &x,
                              const std::vector<Perm> &kernel_part_gens) {
  std::vector<std::uint32_t> center = t.center();
  std::vector<std::uint32_t> comm = t.commutator_subgroup();
  std::sort(center.begin(), center.end());
  std::sort(comm.begin(), comm.end());
  for (std::uint32_t c : comm)
    if (!std::binary_search(center.begin(), center.end(), c))
      throw std::invalid_argument(
          "reduced_extension_certificate: commutators are not central");

  // M = P · (G ∩ K).
  std::vector<Perm> mgens;
  for (std::uint32_t a : t.small_generating_set())
    mgens.push_back(t.right_translation(a));
  for (const Perm &p : kernel_part_gens)
    mgens.push_back(p);
  PermGroup m(t.order(), mgens);

  std::vector<Perm> melems = m.elements(kIntervalElementCap);
  std::sort(melems.begin(), melems.end());
  auto mindex = [&](const Perm &p) -> std::size_t {
    auto it = std::lower_bound(melems.begin(), melems.end(), p);
    if (it == melems.end() || !(*it == p))
      throw std::logic_error(
          "reduced_extension_certificate: M is not X-invariant");
    return static_cast<std::size_t>(it - melems.begin());
  };

  // X-conjugacy classes on the elements of M.
  std::vector<Perm> xgens = x.generators();
  std::vector<std::size_t> class_of(melems.size(), SIZE_MAX);
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < melems.size(); ++i) {
    if (class_of[i] != SIZE_MAX)
      continue;
    std::size_t cls = reps.size();
    reps.push_back(i);
    std::vector<std::size_t> queue{i};
    class_of[i] = cls;
    while (!queue.empty()) {
      std::size_t cur = queue.back();
      queue.pop_back();
      for (const Perm &s : xgens) {
        std::size_t img = mindex(melems[cur].conjugated_by(s));
        if (class_of[img] == SIZE_MAX) {
          class_of[img] = cls;
          queue.push_back(img);
        }
      }
    }
  }

  // Every X-invariant subgroup of M is the join of the normal closures of
  // the classes of its elements, so closing the class closures under
  // pairwise join reaches them all.
  std::vector<PermGroup> nodes;
  auto known = [&](const PermGroup &h) {
    for (const PermGroup &k : nodes)
      if (k.order() == h.order() && k.contains_subgroup(h))
        return true;
    return false;
  };
  auto add_node = [&](PermGroup h) {
    if (!known(h))
      nodes.push_back(std::move(h));
  };
  add_node(PermGroup(t.order()));
  for (std::size_t r : reps)
    add_node(normal_closure(x, {melems[r]}));
  bool grew = true;
  while (grew) {
    grew = false;
    std::size_t count = nodes.size();
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = i + 1; j < count; ++j) {
        std::vector<Perm> both = nodes[i].generators();
        const auto &more = nodes[j].generators();
        both.insert(both.end(), more.begin(), more.end());
        PermGroup join(t.order(), std::move(both));
        if (!known(join)) {
          nodes.push_back(std::move(join));
          grew = true;
        }
      }
  }
  nodes.push_back(x);

  std::sort(nodes.begin(), nodes.end(),
            [](const PermGroup &a, const PermGroup &b) {
              if (a.order() != b.order())
                return a.order() < b.order();
              return node_key(a) < node_key(b);
            });

  SemiprimitivityCertificate cert;
  SubdegreeProfile prof = x.transitivity_profile();
  if (!prof.is_transitive)
    throw std::invalid_argument(
        "reduced_extension_certificate: extension is intransitive");
  cert.is_regular = prof.is_semiregular;
  for (PermGroup &h : nodes) {
    LatticeNode node;
    node.order = h.order();
    node.subgroup = std::move(h);
    cert.lattice.nodes.push_back(std::move(node));
  }
  auto &ln = cert.lattice.nodes;
  for (std::size_t i = 0; i < ln.size(); ++i)
    for (std::size_t j = 0; j < ln.size(); ++j)
      if (i != j && ln[i].order < ln[j].order &&
          ln[j].subgroup.contains_subgroup(ln[i].subgroup))
        cert.lattice.edges.emplace_back(i, j);
  assign_flags(cert.lattice.nodes, cert.lattice.edges, /*prune=*/false);

  cert.verdict = !cert.is_regular;
  for (std::size_t i = 0; i < ln.size(); ++i)
    if (ln[i].flag == NodeFlag::violating) {
      cert.verdict = false;
      if (!cert.witness_index)
        cert.witness_index = i;
    }
  return cert;
}

struct SearchContext {
  const CayleyTable &t;
  SearchClock::time_point deadline;
  SearchResult &result;
  std::uint64_t divisor;
  const PermGroup *conjugacy_parent = nullptr; // hit dedup, may be null
};

inline bool deadline_passed(const SearchContext &ctx) {
  return SearchClock::now() >= ctx.deadline;
}

/// Examine one candidate G ≤ Aut(P) that already passed the order filter.
/// `kernel_part` optionally supplies generators of G ∩ K when the caller
/// knows them; otherwise they are recovered by enumerating G.
inline void
process_candidate(SearchContext &ctx, const PermGroup &cand,
                  const std::optional<std::vector<Perm>> &kernel_part =
                      std::nullopt) {
  ++ctx.result.classes_examined;
  if (!orbit_pattern_filter(ctx.t, cand))
    return;

  PermGroup x = build_extension(ctx.t, cand);
  auto [rank, subdegrees] = x.rank_and_subdegrees();
  if (rank != 3)
    throw std::logic_error(
        "process_candidate: orbit pattern without rank 3");

  SemiprimitivityCertificate cert;
  if (x.order() <= static_cast<unsigned long>(kGenericCertificateCap)) {
    cert = semiprimitivity_certificate(x);
  } else {
    std::vector<Perm> kpart =
        kernel_part ? *kernel_part
                    : kernel_part_by_enumeration(ctx.t, cand,
                                                 kIntervalElementCap);
    cert = reduced_extension_certificate(ctx.t, x, kpart);
  }
  if (!cert.verdict)
    return;

  PermGroup grp(ctx.t.order(), reduced_generators(cand));
  for (const SearchHit &h : ctx.result.hits) {
    if (h.group_order != grp.order())
      continue;
    if (!ctx.conjugacy_parent)
      continue;
    PermGroup other(ctx.t.order(), h.group_generators);
    bool same = false;
    try {
      same = are_conjugate_subgroups(*ctx.conjugacy_parent, grp, other);
    } catch (const std::runtime_error &) {
      same = false; // over-reporting is preferable to dropping a hit
    }
    if (same)
      return;
  }

  SearchHit hit;
  hit.group_generators = grp.generators();
  hit.group_order = grp.order();
  hit.extension_order = x.order();
  hit.rank = rank;
  hit.subdegrees = std::move(subdegrees);
  hit.certificate = std::move(cert);
  ctx.result.hits.push_back(std::move(hit));
}

// ---------------------------------------------------------------------------
// Engine 1: all subgroup classes of a small solvable automorphism group.
// ---------------------------------------------------------------------------

inline void solvable_engine(SearchContext &ctx, const PermGroup &aut,
                            std::size_t element_budget) {
  const std::uint64_t divisor = ctx.divisor;
  std::vector<SubgroupClass> classes = solvable_subgroup_classes(
      aut, [divisor](std::uint64_t o) { return o % divisor == 0; },
      element_budget);
  bool complete = true;
  for (const SubgroupClass &cls : classes) {
    if (deadline_passed(ctx)) {
      complete = false;
      break;
    }
    std::vector<Perm> gens = cls.generators;
    if (gens.empty())
      gens.emplace_back(ctx.t.order());
    process_candidate(ctx, PermGroup(ctx.t.order(), gens));
  }
  ctx.result.exhaustive = complete;
}

// ---------------------------------------------------------------------------
// Engine 2: the interval of overgroups of a fixed cyclic Sylow subgroup.
// ---------------------------------------------------------------------------

/// Largest prime r dividing `divisor` with r² ∤ parent_order, so that the
/// Sylow r-subgroups of the parent are cyclic of prime order. Returns 0 if
/// none exists.
inline std::uint32_t cyclic_sylow_prime(std::uint64_t divisor,
                                        const mpz_class &parent_order) {
  std::vector<std::uint32_t> primes;
  std::uint64_t d = divisor;
  for (std::uint64_t f = 2; f * f <= d; ++f)
    if (d % f == 0) {
      primes.push_back(static_cast<std::uint32_t>(f));
      while (d % f == 0)
        d /= f;
    }
  if (d > 1)
    primes.push_back(static_cast<std::uint32_t>(d));
  for (auto it = primes.rbegin(); it != primes.rend(); ++it) {
    mpz_class r2 = mpz_class(*it) * *it;
    if (parent_order % *it == 0 && parent_order % r2 != 0)
      return *it;
  }
  return 0;
}

/// All subgroups H with ⟨seed⟩ ≤ H ≤ the group generated by `all`,
/// by breadth-first single-element joins. Every overgroup is reachable by a
/// chain of single-element joins, and ⟨H, g⟩ depends only on the double
/// coset HgH, so sweeping one representative per double coset per level
/// finds the whole interval. Returns the interval together with a flag
/// telling whether it was completed before the deadline.
inline std::pair<std::vector<PermGroup>, bool>
interval_overgroups(Point degree, const std::vector<Perm> &all,
                    const Perm &seed, SearchClock::time_point deadline) {
  // `all` is sorted, so products can be located by binary search; this
  // avoids keeping a second copy of every element in a hash table.
  auto index_of = [&all](const Perm &p) -> std::uint32_t {
    auto it = std::lower_bound(all.begin(), all.end(), p);
    if (it == all.end() || !(*it == p))
      throw std::logic_error("interval_overgroups: product left the parent");
    return static_cast<std::uint32_t>(it - all.begin());
  };

  std::vector<PermGroup> found;
  auto already_known = [&](const PermGroup &h,
                           const std::vector<Perm> &hgens) {
    for (const PermGroup &k : found) {
      if (k.order() != h.order())
        continue;
      bool inside = true;
      for (const Perm &p : hgens)
        if (!k.contains(p)) {
          inside = false;
          break;
        }
      if (inside)
        return true;
    }
    return false;
  };

  found.emplace_back(degree, std::vector<Perm>{seed});
  bool complete = true;
  for (std::size_t qi = 0; qi < found.size() && complete; ++qi) {
    if (found[qi].order() == mpz_class(static_cast<unsigned long>(all.size())))
      continue; // the whole parent has no proper overgroup to sweep for
    PermGroup h = found[qi];
    std::vector<Perm> hgens = reduced_generators(h);

    std::vector<bool> seen(all.size(), false);
    std::vector<std::uint32_t> stack;
    for (std::uint32_t i = 0; i < all.size(); ++i) {
      if (seen[i])
        continue;
      if (SearchClock::now() >= deadline) {
        complete = false;
        break;
      }
      // Mark the (H, H)-double coset of all[i].
      seen[i] = true;
      stack.assign(1, i);
      while (!stack.empty()) {
        std::uint32_t cur = stack.back();
        stack.pop_back();
        for (const Perm &s : hgens) {
          std::uint32_t left = index_of(s * all[cur]);
          if (!seen[left]) {
            seen[left] = true;
            stack.push_back(left);
          }
          std::uint32_t right = index_of(all[cur] * s);
          if (!seen[right]) {
            seen[right] = true;
            stack.push_back(right);
          }
        }
      }
      if (h.contains(all[i]))
        continue;
      std::vector<Perm> jgens = hgens;
      jgens.push_back(all[i]);
      PermGroup join(degree, jgens);
      if (!already_known(join, jgens))
        found.push_back(std::move(join));
    }
  }
  return {std::move(found), complete};
}

inline void interval_engine(SearchContext &ctx, const PermGroup &aut,
                            std::uint32_t seed_prime) {
  if (aut.order() > static_cast<unsigned long>(kIntervalElementCap))
    throw std::runtime_error(
        "interval_engine: automorphism group too large to list");
  std::vector<Perm> all = aut.elements(kIntervalElementCap);
  std::sort(all.begin(), all.end());

  const Perm *seed = nullptr;
  for (const Perm &p : all)
    if (p.order() == seed_prime) {
      seed = &p;
      break;
    }
  if (!seed)
    throw std::logic_error("interval_engine: no element of the seed order");

  auto [interval, complete] =
      interval_overgroups(ctx.t.order(), all, *seed, ctx.deadline);
  for (const PermGroup &h : interval) {
    if (deadline_passed(ctx)) {
      complete = false;
      break;
    }
    if (h.order() % ctx.divisor != 0)
      continue;
    process_candidate(ctx, h);
  }
  ctx.result.exhaustive = complete;
}

// ---------------------------------------------------------------------------
// Engine 3: extraspecial p^{1+2m} of exponent p via quotient and lift.
// ---------------------------------------------------------------------------

/// Coordinates for the group of tuples (v, z) ∈ F_p^{2m} × F_p with
/// (v, z)(v', z') = (v + v', z + z' + β(v, v')), where β((x,y),(x',y')) =
/// x·y'. Element encodings are z + p·v with v encoded base p in the digit
/// order [y_0..y_{m-1}, x_0..x_{m-1}], matching `extraspecial_plus`.
struct ExtraspecialFrame {
  std::uint32_t p, m, n, vdim, vsize, inv2;
  CayleyTable canon;

  explicit ExtraspecialFrame(std::uint32_t p_, std::uint32_t m_)
      : p(p_), m(m_), n(1), vdim(2 * m_), vsize(1),
        canon(extraspecial_plus(p_, m_)) {
    for (std::uint32_t i = 0; i < vdim; ++i)
      vsize *= p;
    n = vsize * p;
    inv2 = 1;
    while ((2 * inv2) % p != 1)
      ++inv2;
  }

  std::vector<std::uint32_t> vdigits(std::uint32_t v) const {
    std::vector<std::uint32_t> d(vdim);
    for (std::uint32_t i = 0; i < vdim; ++i) {
      d[i] = v % p;
      v /= p;
    }
    return d;
  }

  std::uint32_t vencode(const std::vector<std::uint32_t> &d) const {
    std::uint32_t v = 0;
    for (std::uint32_t i = vdim; i-- > 0;)
      v = v * p + (d[i] % p);
    return v;
  }

  std::uint32_t vadd(std::uint32_t a, std::uint32_t b) const {
    auto da = vdigits(a), db = vdigits(b);
    for (std::uint32_t i = 0; i < vdim; ++i)
      da[i] = (da[i] + db[i]) % p;
    return vencode(da);
  }

  std::uint32_t vsub(std::uint32_t a, std::uint32_t b) const {
    auto da = vdigits(a), db = vdigits(b);
    for (std::uint32_t i = 0; i < vdim; ++i)
      da[i] = (da[i] + p - db[i]) % p;
    return vencode(da);
  }

  /// β(a, b) = x_a · y_b; the commutator form is ω(a,b) = β(a,b) − β(b,a).
  std::uint32_t beta(std::uint32_t a, std::uint32_t b) const {
    auto da = vdigits(a), db = vdigits(b);
    std::uint32_t s = 0;
    for (std::uint32_t i = 0; i < m; ++i)
      s = (s + da[m + i] * db[i]) % p;
    return s;
  }

  std::uint32_t omega(std::uint32_t a, std::uint32_t b) const {
    return (beta(a, b) + p - beta(b, a)) % p;
  }

  std::uint32_t element_of(std::uint32_t v, std::uint32_t z) const {
    return z + p * v;
  }
  std::uint32_t v_of(std::uint32_t e) const { return e / p; }
  std::uint32_t z_of(std::uint32_t e) const { return e % p; }

  /// v ↦ vS for a row-major vdim × vdim matrix over F_p (row vectors).
  std::uint32_t apply_matrix(std::uint32_t v,
                             const std::vector<std::uint32_t> &s) const {
    auto d = vdigits(v);
    std::vector<std::uint32_t> out(vdim, 0);
    for (std::uint32_t i = 0; i < vdim; ++i) {
      if (d[i] == 0)
        continue;
      for (std::uint32_t j = 0; j < vdim; ++j)
        out[j] = (out[j] + d[i] * s[i * vdim + j]) % p;
    }
    return vencode(out);
  }

  /// The automorphism (v, z) ↦ (vS, μz + q(v)) with the canonical quadratic
  /// correction q(v) = (β(vS, vS) − μβ(v, v)) / 2. It is an automorphism
  /// precisely when S is a symplectic similitude with factor μ, and
  /// composition is exact: α_{S,μ}·α_{T,ν} = α_{ST,μν}, so the image is a
  /// complement to the inner automorphisms.
  Perm similitude_perm(const std::vector<std::uint32_t> &s,
                       std::uint32_t mu) const {
    std::vector<Point> img(n);
    for (std::uint32_t v = 0; v < vsize; ++v) {
      std::uint32_t vs = apply_matrix(v, s);
      std::uint32_t q =
          ((beta(vs, vs) + p * p - (mu % p) * beta(v, v)) % p) * inv2 % p;
      for (std::uint32_t z = 0; z < p; ++z)
        img[element_of(v, z)] = element_of(vs, (mu * z + q) % p);
    }
    return Perm(img);
  }

  /// Symplectic transvection for a nonzero u: v ↦ v + ω(v, u)·u.
  std::vector<std::uint32_t> transvection_matrix(std::uint32_t u) const {
    std::vector<std::uint32_t> s(vdim * vdim, 0);
    auto du = vdigits(u);
    for (std::uint32_t i = 0; i < vdim; ++i) {
      std::uint32_t basis = 1;
      for (std::uint32_t k = 0; k < i; ++k)
        basis *= p;
      std::uint32_t w = omega(basis, u);
      for (std::uint32_t j = 0; j < vdim; ++j)
        s[i * vdim + j] = ((i == j ? 1 : 0) + w * du[j]) % p;
    }
    return s;
  }
};

/// |Sp_{2m}(p)| = p^{m²} · Π_{i=1..m} (p^{2i} − 1).
inline mpz_class symplectic_order(std::uint32_t p, std::uint32_t m) {
  mpz_class o = 1;
  for (std::uint32_t i = 0; i < m * m; ++i)
    o *= p;
  mpz_class q2i = 1;
  for (std::uint32_t i = 1; i <= m; ++i) {
    q2i = 1;
    for (std::uint32_t k = 0; k < 2 * i; ++k)
      q2i *= p;
    o *= q2i - 1;
  }
  return o;
}

inline std::uint32_t primitive_root(std::uint32_t p) {
  for (std::uint32_t g = 2; g < p; ++g) {
    std::uint32_t x = g % p, ord = 1;
    while (x != 1) {
      x = (x * g) % p;
      ++ord;
    }
    if (ord == p - 1)
      return g;
  }
  return 1; // p == 2
}

struct ExtraspecialEngineData {
  ExtraspecialFrame frame;
  PermGroup complement; // C ≅ CSp_{2m}(p), trivial on no fiber unless S = 1
  PermGroup inner;      // the inner automorphisms, ≅ F_p^{2m}
  PermGroup full;       // ⟨complement, inner⟩ = Aut of the canonical table
};

/// Builds Aut(p^{1+2m}_+) = Inn : CSp_{2m}(p) from explicit generators,
/// verifying every generator is a table automorphism and that the group
/// orders match p^{2m}·|Sp_{2m}(p)|·(p − 1). A mismatch throws: the search
/// must not run against a partially constructed automorphism group.
inline ExtraspecialEngineData build_extraspecial_data(std::uint32_t p,
                                                      std::uint32_t m) {
  ExtraspecialEngineData data{ExtraspecialFrame(p, m), PermGroup(1),
                              PermGroup(1), PermGroup(1)};
  ExtraspecialFrame &f = data.frame;

  std::vector<Perm> cgens;
  for (std::uint32_t u = 1; u < f.vsize; ++u)
    cgens.push_back(f.similitude_perm(f.transvection_matrix(u), 1));
  std::vector<std::uint32_t> sim(f.vdim * f.vdim, 0);
  std::uint32_t mu = primitive_root(p);
  for (std::uint32_t i = 0; i < f.vdim; ++i)
    sim[i * f.vdim + i] = i < f.m ? 1 : mu; // y-part fixed, x-part scaled
  cgens.push_back(f.similitude_perm(sim, mu));

  std::vector<Perm> igens;
  for (std::uint32_t j = 0; j < f.vdim; ++j) {
    std::uint32_t basis = 1;
    for (std::uint32_t k = 0; k < j; ++k)
      basis *= p;
    igens.push_back(inner_automorphism(f.canon, f.element_of(basis, 0)));
  }

  for (const Perm &g : cgens)
    if (!is_table_automorphism(f.canon, g))
      throw std::logic_error(
          "build_extraspecial_data: complement generator is not an "
          "automorphism");
  for (const Perm &g : igens)
    if (!is_table_automorphism(f.canon, g))
      throw std::logic_error(
          "build_extraspecial_data: inner generator is not an automorphism");

  mpz_class sp = symplectic_order(p, m);
  mpz_class csp = sp * (p - 1);
  data.complement = PermGroup(f.n, cgens);
  if (data.complement.order() != csp)
    throw std::logic_error(
        "build_extraspecial_data: complement order mismatch");

  data.inner = PermGroup(f.n, igens);
  mpz_class inn_order = 1;
  for (std::uint32_t i = 0; i < f.vdim; ++i)
    inn_order *= p;
  if (data.inner.order() != inn_order)
    throw std::logic_error("build_extraspecial_data: inner order mismatch");

  std::vector<Perm> agens = cgens;
  agens.insert(agens.end(), igens.begin(), igens.end());
  data.full = PermGroup(f.n, agens);
  if (data.full.order() != inn_order * csp)
    throw std::logic_error(
        "build_extraspecial_data: automorphism group order mismatch");
  for (const Perm &ig : data.inner.generators())
    for (const Perm &cg : data.complement.generators())
      if (!data.inner.contains(ig.conjugated_by(cg)))
        throw std::logic_error(
            "build_extraspecial_data: inner layer is not normalized");
  return data;
}

/// All F_p-subspaces of F_p^{vdim}, each as a sorted encoding list.
inline std::vector<std::vector<std::uint32_t>>
all_subspaces(const ExtraspecialFrame &f) {
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<std::vector<std::uint32_t>> queue{{0}};
  seen.insert(queue.front());
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    std::vector<std::uint32_t> base = queue[qi];
    for (std::uint32_t v = 1; v < f.vsize; ++v) {
      if (std::binary_search(base.begin(), base.end(), v))
        continue;
      std::set<std::uint32_t> span;
      for (std::uint32_t c = 0, cv = 0; c < f.p; ++c, cv = f.vadd(cv, v))
        for (std::uint32_t u : base)
          span.insert(f.vadd(u, cv));
      std::vector<std::uint32_t> sub(span.begin(), span.end());
      if (seen.insert(sub).second)
        queue.push_back(std::move(sub));
    }
  }
  return {seen.begin(), seen.end()};
}

/// The candidate sweep for one (W, I): subgroups G ≤ Inn·W with image W and
/// G ∩ Inn = I correspond to complements of Inn/I in (Inn/I)·W, i.e. to
/// tuples (x_1..x_k) ∈ (V/I)^k of coset offsets on a generating tuple of W.
/// Offsets are swept up to the conjugation action of V (coboundaries),
/// staged generator by generator, and each surviving tuple is validated by
/// the order test |⟨I, x̂_iŵ_i⟩| = |I|·|W|.
struct LiftSweep {
  const ExtraspecialFrame &f;
  const PermGroup &w;
  std::vector<Perm> wgens;
  std::vector<std::uint32_t> isub; // sorted encodings of I ≤ V

  std::vector<std::uint32_t> rep; // v → least element of v + I

  LiftSweep(const ExtraspecialFrame &frame, const PermGroup &wgrp,
            std::vector<std::uint32_t> i_sub)
      : f(frame), w(wgrp), wgens(reduced_generators(wgrp)),
        isub(std::move(i_sub)) {
    rep.assign(f.vsize, 0);
    for (std::uint32_t v = 0; v < f.vsize; ++v) {
      std::uint32_t least = f.vadd(v, isub.front());
      for (std::uint32_t i : isub)
        least = std::min(least, f.vadd(v, i));
      rep[v] = least;
    }
  }

  /// Action of a 243-point automorphism on V (well defined on fibers).
  std::uint32_t vact(const Perm &a, std::uint32_t v) const {
    return f.v_of(a[f.element_of(v, 0)]);
  }

  bool in_isub(std::uint32_t v) const {
    return std::binary_search(isub.begin(), isub.end(), v);
  }

  /// Norm along the inverse action: Σ_j v·S⁻ʲ. A lift x̂ŵ of order-o image
  /// w satisfies (x̂ŵ)^o = inner by the norm of x̂, which must land in I.
  std::uint32_t inverse_norm(const Perm &winv, std::uint32_t v,
                             std::uint64_t order) const {
    std::uint32_t total = 0, cur = v;
    for (std::uint64_t j = 0; j < order; ++j) {
      total = f.vadd(total, cur);
      cur = vact(winv, cur);
    }
    return total;
  }

  /// All complements up to V-conjugacy; calls sink(tuple) for each tuple of
  /// coset representatives surviving the norm filter and stage reduction.
  void sweep(const std::function<bool(const std::vector<std::uint32_t> &)>
                 &sink) const {
    std::size_t k = wgens.size();
    std::vector<std::vector<std::uint32_t>> solutions(k);
    std::vector<Perm> winv;
    for (const Perm &g : wgens)
      winv.push_back(g.inverse());
    for (std::size_t i = 0; i < k; ++i) {
      std::uint64_t order = wgens[i].order();
      for (std::uint32_t v = 0; v < f.vsize; ++v) {
        if (rep[v] != v)
          continue; // one representative per I-coset
        if (in_isub(inverse_norm(winv[i], v, order)))
          solutions[i].push_back(v);
      }
    }

    // Stage the V-conjugation: conjugating by inner(s) shifts the offset at
    // generator i by s·S_i⁻¹ − s, and the stabilizer of the offsets fixed so
    // far acts on the next coordinate.
    std::vector<std::uint32_t> stab;
    for (std::uint32_t v = 0; v < f.vsize; ++v)
      stab.push_back(v);
    std::vector<std::uint32_t> tuple(k, 0);

    std::function<bool(std::size_t, const std::vector<std::uint32_t> &)>
        descend = [&](std::size_t i,
                      const std::vector<std::uint32_t> &level_stab) -> bool {
      if (i == k)
        return sink(tuple);
      // Shift subgroup {s·S⁻¹ − s} at this stage, reduced into I-cosets.
      std::set<std::uint32_t> shifts;
      std::vector<std::uint32_t> next_stab;
      for (std::uint32_t s : level_stab) {
        std::uint32_t sh = rep[f.vsub(vact(winv[i], s), s)];
        shifts.insert(sh);
        if (sh == rep[0])
          next_stab.push_back(s);
      }
      std::set<std::uint32_t> taken; // least representative per shift-coset
      for (std::uint32_t x : solutions[i]) {
        std::uint32_t least = x;
        for (std::uint32_t sh : shifts)
          least = std::min(least, rep[f.vadd(x, sh)]);
        if (!taken.insert(least).second)
          continue;
        tuple[i] = least;
        if (!descend(i + 1, next_stab))
          return false;
      }
      return true;
    };
    descend(0, stab);
  }
};

/// Runs the quotient-and-lift search for the canonical extraspecial table.
/// `to_search_domain` conjugates canonical-coordinate automorphisms into
/// the searched table's coordinates (identity when the tables agree).
inline void extraspecial_engine(SearchContext &ctx,
                                const ExtraspecialEngineData &data,
                                const std::optional<Perm> &to_canonical) {
  const ExtraspecialFrame &f = data.frame;
  const std::uint64_t divisor = ctx.divisor;

  std::uint32_t seed_prime = cyclic_sylow_prime(divisor, data.full.order());
  if (seed_prime == 0)
    throw std::runtime_error(
        "extraspecial_engine: no cyclic Sylow seed prime available");

  std::vector<Perm> all = data.complement.elements(kIntervalElementCap);
  std::sort(all.begin(), all.end());
  const Perm *seed = nullptr;
  for (const Perm &x : all)
    if (x.order() == seed_prime) {
      seed = &x;
      break;
    }
  if (!seed)
    throw std::logic_error(
        "extraspecial_engine: seed order missing from the complement");

  auto [interval, complete] =
      interval_overgroups(f.n, all, *seed, ctx.deadline);

  // The non-p part of the divisor must divide |W| (the p-part may come from
  // the inner layer I).
  std::uint64_t nonp = divisor;
  while (nonp % f.p == 0)
    nonp /= f.p;
  std::uint64_t ppart = divisor / nonp;

  std::vector<std::vector<std::uint32_t>> subspaces = all_subspaces(f);

  Perm phi = to_canonical ? *to_canonical : Perm(f.n);
  Perm phi_inv = phi.inverse();
  auto transport = [&](const Perm &a) { return a.conjugated_by(phi_inv); };

  bool sweep_complete = complete;
  for (const PermGroup &w : interval) {
    if (deadline_passed(ctx)) {
      sweep_complete = false;
      break;
    }
    std::uint64_t worder = w.order().get_ui();
    if (worder % nonp != 0)
      continue;
    // W must move Z \ {1} transitively (the inner layer cannot help there)
    // and act transitively on the nonzero fibers of P/Z.
    if (w.orbit_of(f.element_of(0, 1)).size() != f.p - 1)
      continue;
    {
      std::set<std::uint32_t> fibers;
      for (Point e : w.orbit_of(f.element_of(1, 0)))
        fibers.insert(f.v_of(static_cast<std::uint32_t>(e)));
      if (fibers.size() != f.vsize - 1)
        continue;
    }

    std::uint64_t w_ppart = 1;
    while (worder % (w_ppart * f.p) == 0)
      w_ppart *= f.p;

    for (const auto &sub : subspaces) {
      if (deadline_passed(ctx)) {
        sweep_complete = false;
        break;
      }
      if ((static_cast<std::uint64_t>(sub.size()) * w_ppart) % ppart != 0)
        continue;
      bool invariant = true;
      for (const Perm &g : w.generators()) {
        for (std::uint32_t v : sub)
          if (!std::binary_search(sub.begin(), sub.end(),
                                  f.v_of(g[f.element_of(v, 0)]))) {
            invariant = false;
            break;
          }
        if (!invariant)
          break;
      }
      if (!invariant)
        continue;

      // Generators of I as inner automorphisms.
      std::vector<Perm> igens_canon;
      {
        std::set<std::uint32_t> spanned{0};
        for (std::uint32_t v : sub) {
          if (spanned.count(v))
            continue;
          igens_canon.push_back(
              inner_automorphism(f.canon, f.element_of(v, 0)));
          std::set<std::uint32_t> grown = spanned;
          for (std::uint32_t c = 0, cv = 0; c < f.p;
               ++c, cv = f.vadd(cv, v))
            for (std::uint32_t u : spanned)
              grown.insert(f.vadd(u, cv));
          spanned = std::move(grown);
        }
      }

      LiftSweep sweep(f, w, sub);
      mpz_class target = mpz_class(static_cast<unsigned long>(sub.size())) *
                         mpz_class(static_cast<unsigned long>(worder));
      bool keep_going =
          true; // flipped when the deadline fires inside the sweep
      sweep.sweep([&](const std::vector<std::uint32_t> &tuple) {
        if (deadline_passed(ctx)) {
          keep_going = false;
          return false;
        }
        std::vector<Perm> ggens_canon = igens_canon;
        for (std::size_t i = 0; i < tuple.size(); ++i) {
          Perm inner =
              inner_automorphism(f.canon, f.element_of(tuple[i], 0));
          ggens_canon.push_back(inner * sweep.wgens[i]);
        }
        PermGroup gcanon(f.n, ggens_canon);
        if (gcanon.order() != target)
          return true; // not a complement; keep sweeping
        assert(gcanon.order() % divisor == 0);

        std::vector<Perm> ggens, kgens;
        for (const Perm &a : ggens_canon)
          ggens.push_back(transport(a));
        for (const Perm &a : igens_canon)
          kgens.push_back(transport(a));
        process_candidate(ctx, PermGroup(ctx.t.order(), ggens), kgens);
        return true;
      });
      if (!keep_going) {
        sweep_complete = false;
        break;
      }
    }
    if (!sweep_complete)
      break;
  }
  ctx.result.exhaustive = sweep_complete;
}

/// Recognizes tables isomorphic to extraspecial_plus(p, m): |P| = p^{1+2m}
/// for an odd prime p, |Z| = p, and exponent p. For odd p these invariants
/// pin the group type, so the isomorphism search must succeed.
struct ExtraspecialMatch {
  std::uint32_t p = 0, m = 0;
  std::optional<Perm> to_canonical; // nullopt when rows already agree
};

inline std::optional<ExtraspecialMatch>
match_extraspecial(const CayleyTable &t) {
  std::uint32_t n = t.order();
  if (n < 27)
    return std::nullopt;
  std::uint32_t p = 0;
  for (std::uint32_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) {
      p = d;
      break;
    }
  if (p == 0)
    return std::nullopt; // prime or a power of 2
  std::uint32_t e = 0, rest = n;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1 || e < 3 || e % 2 == 0)
    return std::nullopt;
  std::uint32_t m = (e - 1) / 2;
  if (t.center().size() != p)
    return std::nullopt;
  for (std::uint32_t a = 0; a < n; ++a)
    if (t.element_order(a) > p)
      return std::nullopt;

  ExtraspecialMatch match;
  match.p = p;
  match.m = m;
  CayleyTable canon = extraspecial_plus(p, m);
  if (t.rows() == canon.rows())
    return match;
  std::optional<Perm> iso = find_isomorphism(t, canon, 4000000);
  if (!iso)
    return std::nullopt;
  match.to_canonical = iso;
  return match;
}

} // namespace detail

/// Search Aut(P) for subgroups G whose extension P:G in the holomorph is
/// semiprimitive of rank 3. Every hit's order is divisible by
/// lcm(|P| - |Z|, |Z| - 1); `classes_examined` counts the candidates that
/// survived that order filter and were orbit-tested. `exhaustive` is set
/// only when the enumeration provably covered every candidate class and the
/// time budget never expired. Throws when no engine can cover the
/// automorphism group exhaustively: the search never silently skips
/// classes.
inline SearchResult search_semiprimitive_rank3(const CayleyTable &t,
                                               const SearchConfig &cfg = {}) {
  SearchResult result;
  result.table_order = t.order();
  {
    std::ostringstream ss;
    write_table_stream(ss, t);
    result.table_hash = fnv1a64_hex(ss.str());
  }

  std::uint32_t z = static_cast<std::uint32_t>(t.center().size());
  if (z < 2 || z == t.order()) {
    // One of the required orbits is empty; no subgroup can qualify.
    result.exhaustive = true;
    return result;
  }

  auto deadline =
      detail::SearchClock::now() +
      std::chrono::duration_cast<detail::SearchClock::duration>(
          std::chrono::duration<double>(cfg.budget_seconds));
  detail::SearchContext ctx{t, deadline, result,
                            detail::forced_divisor(t.order(), z), nullptr};

  if (cfg.extended) {
    if (auto match = detail::match_extraspecial(t)) {
      // |Aut| = p^{2m} · |Sp_{2m}(p)| · (p − 1) is known structurally; the
      // quotient-and-lift engine is only worth its setup when the generic
      // engines below cannot list the automorphism group.
      mpz_class aut_order =
          detail::symplectic_order(match->p, match->m) * (match->p - 1);
      for (std::uint32_t i = 0; i < 2 * match->m; ++i)
        aut_order *= match->p;
      if (aut_order > static_cast<unsigned long>(
                          detail::kIntervalElementCap)) {
        detail::ExtraspecialEngineData data =
            detail::build_extraspecial_data(match->p, match->m);
        ctx.conjugacy_parent = nullptr; // too large to list for conjugacy
        detail::extraspecial_engine(ctx, data, match->to_canonical);
        return result;
      }
    }
  }

  PermGroup aut = automorphism_group(t, detail::kAutBacktrackBudget);
  if (is_solvable(aut) &&
      aut.order() <= static_cast<unsigned long>(detail::kSolvableEngineCap)) {
    ctx.conjugacy_parent = &aut;
    detail::solvable_engine(ctx, aut, cfg.element_budget);
    return result;
  }

  std::uint32_t seed = detail::cyclic_sylow_prime(ctx.divisor, aut.order());
  if (seed != 0 &&
      aut.order() <= static_cast<unsigned long>(detail::kIntervalElementCap)) {
    ctx.conjugacy_parent = &aut;
    detail::interval_engine(ctx, aut, seed);
    return result;
  }

  if (is_solvable(aut) &&
      aut.order() <= static_cast<unsigned long>(cfg.element_budget)) {
    ctx.conjugacy_parent = &aut;
    detail::solvable_engine(ctx, aut, cfg.element_budget);
    return result;
  }

  throw std::runtime_error(
      "search_semiprimitive_rank3: no exhaustive engine applies to this "
      "automorphism group");
}

} // namespace semiprim
