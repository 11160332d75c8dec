#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "semiprim/perm.hpp"

/**
 * @file perm_group.hpp
 * @brief Permutation groups with deterministic Schreier--Sims stabilizer
 *        chains: order, membership, orbits, stabilizers, coset actions,
 *        subgroup conjugacy, and kernels of induced actions.
 *
 * The chain is built without randomization (base = successive smallest moved
 * points, breadth-first orbits in generator order), so identical generator
 * sequences always produce identical bases, orders and certificates.
 */

namespace semiprim {

class StabChain {
public:
  /// Build a chain for the group generated by `gens` on `degree` points.
  /// `forced_prefix` points are installed as the first base points even when
  /// their orbits are trivial; the strong generators fixing that prefix then
  /// generate the pointwise stabilizer of the prefix.
  ///
  /// When `abort_above` is nonzero, construction stops as soon as the product
  /// of the current fundamental orbit lengths (a lower bound on the order)
  /// exceeds it; `aborted()` reports this and no other accessor may be used.
  StabChain(Point degree, const std::vector<Perm> &gens,
            std::vector<Point> forced_prefix = {},
            std::uint64_t abort_above = 0)
      : degree_(degree), abort_above_(abort_above) {
    assert(degree_ > 0);
    for (Point b : forced_prefix) {
      assert(b < degree_);
      add_level(b);
    }
    for (const Perm &g : gens) {
      assert(g.degree() == degree_);
      if (g.is_identity())
        continue;
      if (std::find(sgs_.begin(), sgs_.end(), g) != sgs_.end())
        continue;
      ensure_moved_base_point(g);
      sgs_.push_back(g);
    }
    complete();
  }

  /// True when construction hit the `abort_above` bound: the group order
  /// provably exceeds the bound and the chain is otherwise unusable.
  bool aborted() const { return aborted_; }

  Point degree() const { return degree_; }

  const std::vector<Point> &base() const { return base_; }

  const mpz_class &order() const { return order_; }

  std::uint64_t order_u64() const {
    std::uint64_t res = 1;
    for (const Level &lvl : levels_) {
      std::uint64_t n = lvl.orbit.size();
      if (res > UINT64_MAX / n)
        throw std::overflow_error("StabChain::order_u64: order exceeds 64 bits");
      res *= n;
    }
    return res;
  }

  /// Sift `g` through levels `from`..end. Returns the residue and the level
  /// at which sifting stopped (= number of levels if all were passed).
  std::pair<Perm, std::size_t> sift(Perm g, std::size_t from = 0) const {
    for (std::size_t l = from; l < levels_.size(); ++l) {
      Point t = g[levels_[l].b];
      std::int32_t s = levels_[l].slot[t];
      if (s < 0)
        return {std::move(g), l};
      g = g * levels_[l].trans_inv[static_cast<std::size_t>(s)];
    }
    return {std::move(g), levels_.size()};
  }

  bool contains(const Perm &g) const {
    if (g.degree() != degree_)
      return false;
    return sift(g).first.is_identity();
  }

  /// Strong generators fixing the first `m` base points pointwise.
  std::vector<Perm> prefix_stabilizer_gens(std::size_t m) const {
    assert(m <= base_.size() || sgs_.empty());
    std::vector<Perm> out;
    for (const Perm &g : sgs_) {
      bool fixes = true;
      for (std::size_t i = 0; i < m && i < base_.size(); ++i)
        if (g[base_[i]] != base_[i]) {
          fixes = false;
          break;
        }
      if (fixes)
        out.push_back(g);
    }
    return out;
  }

  const std::vector<Perm> &strong_generators() const { return sgs_; }

  std::size_t num_levels() const { return levels_.size(); }

  const std::vector<Point> &level_orbit(std::size_t l) const {
    return levels_[l].orbit;
  }

  /// Transversal element u with base(l)^u = p; p must lie in the orbit.
  const Perm &transversal_to(std::size_t l, Point p) const {
    std::int32_t s = levels_[l].slot[p];
    assert(s >= 0);
    return levels_[l].trans[static_cast<std::size_t>(s)];
  }

  /// All group elements in deterministic transversal-product order.
  /// Throws when the order exceeds `cap`.
  std::vector<Perm> elements(std::uint64_t cap) const {
    std::uint64_t n = order_u64();
    if (n > cap)
      throw std::runtime_error("StabChain::elements: order exceeds cap");
    std::vector<Perm> out;
    out.reserve(n);
    for_each_element([&out](const Perm &p) {
      out.push_back(p);
      return true;
    });
    return out;
  }

  /// Stream every element in deterministic transversal-product order without
  /// materializing the set; the visitor returns false to stop early.
  template <typename Visitor> bool for_each_element(Visitor &&visit) const {
    return enumerate_visit(levels_.size(), Perm(degree_), visit);
  }

private:
  struct Level {
    Point b = 0;
    std::vector<std::uint32_t> gen_idx; // indices into sgs_
    std::vector<Point> orbit;           // BFS order; orbit[0] == b
    std::vector<std::int32_t> slot;     // point -> orbit position, -1 if absent
    std::vector<Perm> trans, trans_inv; // base^trans[i] = orbit[i]
  };

  Point degree_;
  std::uint64_t abort_above_ = 0;
  bool aborted_ = false;
  std::vector<Perm> sgs_;
  std::vector<Point> base_;
  std::vector<Level> levels_;
  mpz_class order_ = 1;

  void add_level(Point b) {
    base_.push_back(b);
    Level lvl;
    lvl.b = b;
    lvl.slot.assign(degree_, -1);
    levels_.push_back(std::move(lvl));
  }

  /// Append a base point (the smallest point moved by g) if g fixes the
  /// whole current base.
  void ensure_moved_base_point(const Perm &g) {
    for (Point b : base_)
      if (g[b] != b)
        return;
    for (Point x = 0; x < degree_; ++x)
      if (g[x] != x) {
        add_level(x);
        return;
      }
  }

  /// Recompute the generator list and fundamental orbit of level l.
  void refresh_level(std::size_t l) {
    Level &lvl = levels_[l];
    lvl.gen_idx.clear();
    for (std::uint32_t i = 0; i < sgs_.size(); ++i) {
      bool fixes_prefix = true;
      for (std::size_t j = 0; j < l; ++j)
        if (sgs_[i][base_[j]] != base_[j]) {
          fixes_prefix = false;
          break;
        }
      if (fixes_prefix)
        lvl.gen_idx.push_back(i);
    }
    std::fill(lvl.slot.begin(), lvl.slot.end(), -1);
    lvl.orbit.assign(1, lvl.b);
    lvl.slot[lvl.b] = 0;
    lvl.trans.assign(1, Perm(degree_));
    lvl.trans_inv.assign(1, Perm(degree_));
    for (std::size_t idx = 0; idx < lvl.orbit.size(); ++idx) {
      Point p = lvl.orbit[idx];
      for (std::uint32_t gi : lvl.gen_idx) {
        Point q = sgs_[gi][p];
        if (lvl.slot[q] < 0) {
          lvl.slot[q] = static_cast<std::int32_t>(lvl.orbit.size());
          lvl.orbit.push_back(q);
          lvl.trans.push_back(lvl.trans[idx] * sgs_[gi]);
          lvl.trans_inv.push_back(lvl.trans.back().inverse());
        }
      }
    }
  }

  /// Deterministic Schreier--Sims: process levels deepest-first; a new strong
  /// generator discovered at level i lands at some deeper level j and the
  /// scan resumes there. A level is complete when every Schreier generator
  /// sifts to the identity through the levels below it.
  void complete() {
    if (levels_.empty() && !sgs_.empty()) {
      // all generators identity-free yet base empty cannot happen: every
      // non-identity generator forced a base point
      assert(false);
    }
    for (std::size_t l = 0; l < levels_.size(); ++l)
      refresh_level(l);
    if (past_abort_bound()) {
      aborted_ = true;
      return;
    }

    std::size_t i = levels_.size();
    while (i > 0) {
      std::size_t lvl_idx = i - 1;
      refresh_level(lvl_idx);
      if (past_abort_bound()) {
        aborted_ = true;
        return;
      }
      std::optional<std::size_t> jump = scan_level(lvl_idx);
      if (jump)
        i = *jump + 1;
      else
        --i;
    }

    order_ = 1;
    for (const Level &lvl : levels_)
      order_ *= static_cast<unsigned long>(lvl.orbit.size());
  }

  /// Product of current fundamental orbit lengths (a lower bound on the
  /// eventual order) compared against the abort bound.
  bool past_abort_bound() const {
    if (abort_above_ == 0)
      return false;
    std::uint64_t prod = 1;
    for (const Level &lvl : levels_) {
      std::uint64_t n = lvl.orbit.size();
      if (prod > abort_above_ / n)
        return true;
      prod *= n;
    }
    return false;
  }

  /// Scan all Schreier generators of one level. On discovering a new strong
  /// generator, record it and return the deepest level whose generator list
  /// changed; return nullopt when the level verified complete.
  std::optional<std::size_t> scan_level(std::size_t l) {
    Level &lvl = levels_[l];
    for (std::size_t idx = 0; idx < lvl.orbit.size(); ++idx) {
      for (std::uint32_t gi : lvl.gen_idx) {
        const Perm &x = sgs_[gi];
        Point q = x[lvl.orbit[idx]];
        Perm w = lvl.trans[idx] * x;
        const Perm &uq = lvl.trans[static_cast<std::size_t>(lvl.slot[q])];
        if (w == uq)
          continue;
        auto [h, j] = sift(w * uq.inverse(), l + 1);
        if (h.is_identity())
          continue;
        if (j == levels_.size())
          ensure_moved_base_point(h);
        sgs_.push_back(std::move(h));
        return j;
      }
    }
    return std::nullopt;
  }

  template <typename Visitor>
  bool enumerate_visit(std::size_t level, Perm acc, Visitor &&visit) const {
    if (level == 0)
      return visit(static_cast<const Perm &>(acc));
    const Level &lvl = levels_[level - 1];
    for (const Perm &u : lvl.trans)
      if (!enumerate_visit(level - 1, acc * u, visit))
        return false;
    return true;
  }
};

struct SubdegreeProfile {
  std::uint64_t rank = 0;
  std::vector<std::uint64_t> subdegrees; // sorted ascending
  bool is_transitive = false;
  bool is_semiregular = false;
};

class PermGroup {
public:
  /// Trivial group on `degree` points.
  explicit PermGroup(Point degree)
      : PermGroup(degree, std::vector<Perm>{}) {}

  PermGroup(Point degree, std::vector<Perm> generators)
      : degree_(degree), gens_(std::move(generators)),
        chain_box_(std::make_shared<ChainBox>()) {
    assert(degree_ > 0);
    if (gens_.empty())
      gens_.emplace_back(degree_);
    for (const Perm &g : gens_)
      if (g.degree() != degree_)
        throw std::invalid_argument("PermGroup: generator degree mismatch");
  }

  Point degree() const { return degree_; }
  const std::vector<Perm> &generators() const { return gens_; }

  /// Construct a group that adopts an already-built chain for its generators.
  static PermGroup with_chain(Point degree, std::vector<Perm> generators,
                              StabChain chain) {
    PermGroup g(degree, std::move(generators));
    assert(!chain.aborted());
    std::lock_guard<std::mutex> lock(g.chain_box_->mutex);
    g.chain_box_->chain.emplace(std::move(chain));
    return g;
  }

  const StabChain &chain() const {
    std::lock_guard<std::mutex> lock(chain_box_->mutex);
    if (!chain_box_->chain)
      chain_box_->chain.emplace(degree_, gens_);
    return *chain_box_->chain;
  }

  mpz_class order() const { return chain().order(); }
  std::uint64_t order_u64() const { return chain().order_u64(); }
  bool is_trivial() const { return order() == 1; }

  bool contains(const Perm &p) const {
    if (p.degree() != degree_)
      throw std::invalid_argument("PermGroup::contains: degree mismatch");
    return chain().contains(p);
  }

  bool contains_subgroup(const PermGroup &h) const {
    for (const Perm &g : h.generators())
      if (!contains(g))
        return false;
    return true;
  }

  bool same_group_as(const PermGroup &h) const {
    return degree_ == h.degree_ && order() == h.order() &&
           contains_subgroup(h);
  }

  /// Orbit of a point, sorted ascending.
  std::vector<Point> orbit_of(Point x) const {
    if (x >= degree_)
      throw std::invalid_argument("PermGroup::orbit_of: point out of range");
    std::vector<Point> orb{x};
    std::vector<bool> seen(degree_, false);
    seen[x] = true;
    for (std::size_t i = 0; i < orb.size(); ++i)
      for (const Perm &g : gens_) {
        Point q = g[orb[i]];
        if (!seen[q]) {
          seen[q] = true;
          orb.push_back(q);
        }
      }
    std::sort(orb.begin(), orb.end());
    return orb;
  }

  /// Orbit partition: orbits sorted by least element, each sorted ascending.
  std::vector<std::vector<Point>> orbits() const {
    std::vector<std::vector<Point>> out;
    std::vector<bool> done(degree_, false);
    for (Point x = 0; x < degree_; ++x) {
      if (done[x])
        continue;
      auto orb = orbit_of(x);
      for (Point p : orb)
        done[p] = true;
      out.push_back(std::move(orb));
    }
    return out;
  }

  PermGroup point_stabilizer(Point x) const {
    if (x >= degree_)
      throw std::invalid_argument("PermGroup::point_stabilizer: out of range");
    StabChain ch(degree_, gens_, {x});
    return PermGroup(degree_, ch.prefix_stabilizer_gens(1));
  }

  PermGroup pointwise_stabilizer(const std::vector<Point> &pts) const {
    StabChain ch(degree_, gens_, pts);
    return PermGroup(degree_, ch.prefix_stabilizer_gens(pts.size()));
  }

  SubdegreeProfile transitivity_profile() const {
    SubdegreeProfile prof;
    auto orbs = orbits();
    prof.is_transitive = orbs.size() == 1;
    mpz_class n = order();
    prof.is_semiregular = true;
    for (const auto &o : orbs)
      if (mpz_class(static_cast<unsigned long>(o.size())) != n) {
        prof.is_semiregular = false;
        break;
      }
    if (prof.is_transitive) {
      auto sorbs = point_stabilizer(0).orbits();
      prof.rank = sorbs.size();
      for (const auto &o : sorbs)
        prof.subdegrees.push_back(o.size());
    } else {
      prof.rank = orbs.size();
      for (const auto &o : orbs)
        prof.subdegrees.push_back(o.size());
    }
    std::sort(prof.subdegrees.begin(), prof.subdegrees.end());
    return prof;
  }

  /// Rank and sorted subdegrees; requires transitivity.
  std::pair<std::uint64_t, std::vector<std::uint64_t>>
  rank_and_subdegrees() const {
    SubdegreeProfile prof = transitivity_profile();
    if (!prof.is_transitive)
      throw std::invalid_argument("rank_and_subdegrees: group is intransitive");
    return {prof.rank, prof.subdegrees};
  }

  std::vector<Perm> elements(std::uint64_t cap = 1000000) const {
    return chain().elements(cap);
  }

  PermGroup conjugated_by(const Perm &x) const {
    std::vector<Perm> gens;
    gens.reserve(gens_.size());
    for (const Perm &g : gens_)
      gens.push_back(g.conjugated_by(x));
    return PermGroup(degree_, std::move(gens));
  }

private:
  struct ChainBox {
    mutable std::mutex mutex;
    std::optional<StabChain> chain;
  };

  Point degree_;
  std::vector<Perm> gens_;
  mutable std::shared_ptr<ChainBox> chain_box_;
};

// ---------------------------------------------------------------------------
// Induced actions: stabilizers and kernels via an augmented domain.
// ---------------------------------------------------------------------------

/// Given per-generator images under an action of g on m external points,
/// return the subgroup of g fixing `prefix` of those external points
/// pointwise. A stabilizer chain is built on the disjoint union
/// (m action points) + (degree original points) with the prefix forced first,
/// so its prefix-stabilizing strong generators restrict to the answer.
inline PermGroup augmented_prefix_stabilizer(
    const PermGroup &g, const std::vector<Perm> &action_images,
    const std::vector<Point> &prefix) {
  assert(action_images.size() == g.generators().size());
  if (action_images.empty())
    return PermGroup(g.degree());
  Point m = action_images.front().degree();
  Point n = g.degree();
  std::vector<Perm> aug;
  aug.reserve(action_images.size());
  for (std::size_t i = 0; i < action_images.size(); ++i) {
    assert(action_images[i].degree() == m);
    std::vector<Point> images(m + n);
    for (Point x = 0; x < m; ++x)
      images[x] = action_images[i][x];
    for (Point x = 0; x < n; ++x)
      images[m + x] = m + g.generators()[i][x];
    aug.emplace_back(std::move(images));
  }
  StabChain ch(m + n, aug, prefix);
  std::vector<Perm> stab_gens;
  for (const Perm &s : ch.prefix_stabilizer_gens(prefix.size())) {
    std::vector<Point> images(n);
    for (Point x = 0; x < n; ++x) {
      assert(s[m + x] >= m);
      images[x] = s[m + x] - m;
    }
    stab_gens.emplace_back(std::move(images));
  }
  return PermGroup(n, std::move(stab_gens));
}

/// Kernel of the action of g described by per-generator images.
inline PermGroup action_kernel(const PermGroup &g,
                               const std::vector<Perm> &action_images) {
  if (action_images.empty())
    return PermGroup(g.degree());
  Point m = action_images.front().degree();
  std::vector<Point> prefix(m);
  std::iota(prefix.begin(), prefix.end(), Point{0});
  return augmented_prefix_stabilizer(g, action_images, prefix);
}

/// Subgroup of g stabilizing one external action point.
inline PermGroup augmented_point_stabilizer(
    const PermGroup &g, const std::vector<Perm> &action_images, Point point) {
  return augmented_prefix_stabilizer(g, action_images, {point});
}

// ---------------------------------------------------------------------------
// Orbit of an abstract value under the generators, with the induced action.
// ---------------------------------------------------------------------------

template <typename State> struct OrbitActionResult {
  std::vector<State> states;     // sorted ascending; index = point label
  std::vector<Perm> gen_images;  // induced permutation per generator
};

/// BFS orbit of `start` under `gens` where `act(state, perm)` applies one
/// generator. States are labeled in sorted order so the induced permutations
/// are independent of discovery order.
template <typename State, typename Act>
OrbitActionResult<State> orbit_action(const State &start,
                                      const std::vector<Perm> &gens,
                                      Act act, std::size_t cap = 1000000) {
  std::map<State, std::size_t> seen;
  std::vector<State> queue{start};
  seen.emplace(start, 0);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const Perm &g : gens) {
      State next = act(queue[i], g);
      if (seen.emplace(next, 0).second) {
        queue.push_back(std::move(next));
        if (queue.size() > cap)
          throw std::runtime_error("orbit_action: orbit exceeds cap");
      }
    }
  }

  OrbitActionResult<State> res;
  res.states.reserve(seen.size());
  for (auto &kv : seen)
    res.states.push_back(kv.first);
  std::size_t label = 0;
  for (auto &kv : seen)
    kv.second = label++;

  for (const Perm &g : gens) {
    std::vector<Point> images(res.states.size());
    for (std::size_t i = 0; i < res.states.size(); ++i) {
      State next = act(res.states[i], g);
      auto it = seen.find(next);
      assert(it != seen.end());
      images[i] = static_cast<Point>(it->second);
    }
    res.gen_images.emplace_back(std::move(images));
  }
  return res;
}

// ---------------------------------------------------------------------------
// Coset actions and subgroup conjugacy.
// ---------------------------------------------------------------------------

struct CosetActionResult {
  PermGroup image;
  bool faithful;
};

namespace detail {

/// Minimal element of the coset H*t, with H given by its sorted element list.
inline Perm coset_canonical_rep(const std::vector<Perm> &h_elements,
                                const Perm &t) {
  Perm best = h_elements.front() * t;
  for (std::size_t i = 1; i < h_elements.size(); ++i) {
    Perm cand = h_elements[i] * t;
    if (cand < best)
      best = std::move(cand);
  }
  return best;
}

} // namespace detail

/// Right-coset action of g on the cosets of h ≤ g. Cosets are labeled by the
/// sorted order of their minimal representatives, so the image is canonical.
/// Faithful iff the image has the same order as g.
inline CosetActionResult coset_action(const PermGroup &g, const PermGroup &h,
                                      std::uint64_t index_cap = 100000,
                                      std::uint64_t subgroup_cap = 10000) {
  if (!g.contains_subgroup(h))
    throw std::invalid_argument("coset_action: h is not a subgroup of g");
  mpz_class index_z = g.order() / h.order();
  if (index_z > mpz_class(static_cast<unsigned long>(index_cap)))
    throw std::runtime_error("coset_action: index exceeds cap");
  std::vector<Perm> h_elems = h.elements(subgroup_cap);
  std::sort(h_elems.begin(), h_elems.end());

  std::map<Perm, std::size_t> reps; // canonical rep -> label (assigned later)
  std::vector<Perm> queue{detail::coset_canonical_rep(h_elems, Perm(g.degree()))};
  reps.emplace(queue.front(), 0);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const Perm &s : g.generators()) {
      Perm next = detail::coset_canonical_rep(h_elems, queue[i] * s);
      if (reps.emplace(next, 0).second)
        queue.push_back(std::move(next));
    }
  }

  std::size_t label = 0;
  for (auto &kv : reps)
    kv.second = label++;

  std::vector<Perm> image_gens;
  for (const Perm &s : g.generators()) {
    std::vector<Point> images(reps.size());
    for (const auto &kv : reps) {
      Perm next = detail::coset_canonical_rep(h_elems, kv.first * s);
      auto it = reps.find(next);
      assert(it != reps.end());
      images[kv.second] = static_cast<Point>(it->second);
    }
    image_gens.emplace_back(std::move(images));
  }

  PermGroup image(static_cast<Point>(reps.size()), std::move(image_gens));
  bool faithful = image.order() == g.order();
  return {std::move(image), faithful};
}

namespace detail {

inline std::vector<Perm> sorted_elements(const PermGroup &h,
                                         std::uint64_t cap) {
  std::vector<Perm> e = h.elements(cap);
  std::sort(e.begin(), e.end());
  return e;
}

inline std::vector<Perm> conjugate_sorted_set(const std::vector<Perm> &elems,
                                              const Perm &x) {
  std::vector<Perm> out;
  out.reserve(elems.size());
  for (const Perm &e : elems)
    out.push_back(e.conjugated_by(x));
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace detail

/// True iff h1^x = h2 for some x in g. Breadth-first search over the
/// conjugates of h1 under the generators of g, comparing sorted element sets;
/// invariant pruning (order, orbit-size multiset) rejects cheaply first.
inline bool are_conjugate_subgroups(const PermGroup &g, const PermGroup &h1,
                                    const PermGroup &h2,
                                    std::uint64_t subgroup_cap = 10000,
                                    std::uint64_t work_cap = 10000000) {
  if (!g.contains_subgroup(h1) || !g.contains_subgroup(h2))
    throw std::invalid_argument(
        "are_conjugate_subgroups: inputs must be subgroups");
  if (h1.order() != h2.order())
    return false;
  auto orbit_sizes = [](const PermGroup &h) {
    std::vector<std::size_t> sizes;
    for (const auto &o : h.orbits())
      sizes.push_back(o.size());
    std::sort(sizes.begin(), sizes.end());
    return sizes;
  };
  if (orbit_sizes(h1) != orbit_sizes(h2))
    return false;

  std::vector<Perm> target = detail::sorted_elements(h2, subgroup_cap);
  std::vector<Perm> start = detail::sorted_elements(h1, subgroup_cap);
  if (start == target)
    return true;

  std::set<std::vector<Perm>> seen{start};
  std::vector<std::vector<Perm>> queue{std::move(start)};
  std::uint64_t work = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const Perm &s : g.generators()) {
      std::vector<Perm> next = detail::conjugate_sorted_set(queue[i], s);
      work += next.size();
      if (work > work_cap)
        throw std::runtime_error("are_conjugate_subgroups: work cap exceeded");
      if (next == target)
        return true;
      if (seen.insert(next).second)
        queue.push_back(std::move(next));
    }
  }
  return false;
}

/// Greedily pick a short generating subsequence (preserving order) of g's
/// generator list that still generates g.
inline std::vector<Perm> reduced_generators(const PermGroup &g) {
  mpz_class full = g.order();
  std::vector<Perm> chosen;
  mpz_class current = 1;
  for (const Perm &s : g.generators()) {
    if (current == full)
      break;
    std::vector<Perm> trial = chosen;
    trial.push_back(s);
    mpz_class t = PermGroup(g.degree(), trial).order();
    if (t > current) {
      chosen = std::move(trial);
      current = t;
    }
  }
  if (chosen.empty())
    chosen.emplace_back(g.degree());
  return chosen;
}

} // namespace semiprim
