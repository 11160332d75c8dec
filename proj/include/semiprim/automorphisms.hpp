#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "semiprim/cayley.hpp"
#include "semiprim/perm.hpp"
#include "semiprim/perm_group.hpp"

/**
 * @file automorphisms.hpp
 * @brief Exhaustive automorphism and isomorphism computation for small
 *        multiplication tables by backtracking over generator images with
 *        invariant pruning, and the holomorph acting on the element set.
 */

namespace semiprim {

namespace detail {

/// Backtrack over images of a generating sequence of `src` inside `dst`,
/// collecting every isomorphism src → dst (automorphisms when src == dst).
/// Candidate images are pruned by the invariant fingerprint
/// (element order, conjugacy class size, order modulo the center).
class IsomorphismBacktrack {
public:
  IsomorphismBacktrack(const CayleyTable &src, const CayleyTable &dst,
                       std::uint64_t budget, bool first_only)
      : src_(src), dst_(dst), n_(src.order()), budget_(budget),
        first_only_(first_only) {
    gens_ = src_.small_generating_set();
    auto src_fps = fingerprints(src_);
    auto dst_fps = fingerprints(dst_);
    candidates_.resize(gens_.size());
    for (std::size_t l = 0; l < gens_.size(); ++l)
      for (std::uint32_t e = 0; e < n_; ++e)
        if (dst_fps[e] == src_fps[gens_[l]])
          candidates_[l].push_back(e);
  }

  std::vector<Perm> run() {
    pmap_.assign(n_, n_);
    used_.assign(n_, false);
    std::vector<std::uint32_t> assigned;
    pmap_[0] = 0;
    used_[0] = true;
    assigned.push_back(0);
    descend(0, assigned);
    return std::move(found_);
  }

private:
  using Fingerprint = std::array<std::uint32_t, 3>;

  static std::vector<Fingerprint> fingerprints(const CayleyTable &t) {
    std::vector<std::uint32_t> class_sizes = t.conjugacy_class_sizes();
    std::vector<std::uint32_t> z = t.center();
    std::vector<Fingerprint> fps(t.order());
    for (std::uint32_t e = 0; e < t.order(); ++e)
      fps[e] = {t.element_order(e), class_sizes[e], t.order_modulo(e, z)};
    return fps;
  }

  /// Record pmap_[x] = y, or report the conflict.
  bool enforce(std::uint32_t x, std::uint32_t y,
               std::vector<std::uint32_t> &assigned,
               std::vector<std::uint32_t> &trail) {
    if (pmap_[x] != n_)
      return pmap_[x] == y;
    if (used_[y])
      return false;
    pmap_[x] = y;
    used_[y] = true;
    assigned.push_back(x);
    trail.push_back(x);
    return true;
  }

  /// Deduce images of all products of assigned elements; false on conflict.
  bool close(std::size_t from, std::vector<std::uint32_t> &assigned,
             std::vector<std::uint32_t> &trail) {
    for (std::size_t qi = from; qi < assigned.size(); ++qi) {
      std::uint32_t a = assigned[qi];
      for (std::size_t j = 0; j < assigned.size(); ++j) {
        std::uint32_t b = assigned[j];
        if (!enforce(src_.mul(a, b), dst_.mul(pmap_[a], pmap_[b]), assigned,
                     trail) ||
            !enforce(src_.mul(b, a), dst_.mul(pmap_[b], pmap_[a]), assigned,
                     trail))
          return false;
      }
    }
    return true;
  }

  void descend(std::size_t level, std::vector<std::uint32_t> &assigned) {
    if (done_)
      return;
    if (level == gens_.size()) {
      if (assigned.size() != n_)
        throw std::logic_error("isomorphism backtrack: closure incomplete");
      std::vector<Point> images(pmap_.begin(), pmap_.end());
      found_.emplace_back(std::move(images));
      if (found_.size() > budget_)
        throw std::runtime_error("isomorphism backtrack: budget exceeded");
      if (first_only_)
        done_ = true;
      return;
    }
    std::uint32_t g = gens_[level];
    if (pmap_[g] != n_) { // image already forced by closure
      descend(level + 1, assigned);
      return;
    }
    for (std::uint32_t cand : candidates_[level]) {
      if (done_)
        return;
      if (used_[cand])
        continue;
      std::vector<std::uint32_t> trail;
      std::size_t mark = assigned.size();
      if (enforce(g, cand, assigned, trail) && close(mark, assigned, trail))
        descend(level + 1, assigned);
      if (done_)
        return; // keep the successful assignment intact is unnecessary;
                // the found Perm was already copied out.
      for (std::uint32_t x : trail) {
        used_[pmap_[x]] = false;
        pmap_[x] = n_;
      }
      assigned.resize(mark);
    }
  }

  const CayleyTable &src_;
  const CayleyTable &dst_;
  std::uint32_t n_;
  std::uint64_t budget_;
  bool first_only_;
  bool done_ = false;
  std::vector<std::uint32_t> gens_;
  std::vector<std::vector<std::uint32_t>> candidates_;
  std::vector<std::uint32_t> pmap_;
  std::vector<bool> used_;
  std::vector<Perm> found_;
};

} // namespace detail

/// All automorphisms of t as permutations of its element set (0 fixed),
/// found by exhaustive backtrack. The returned group's order equals the
/// number of automorphisms.
inline PermGroup automorphism_group(const CayleyTable &t,
                                    std::uint64_t budget = 200000) {
  if (t.order() > 256)
    throw std::invalid_argument("automorphism_group: table too large");
  std::vector<Perm> autos =
      detail::IsomorphismBacktrack(t, t, budget, false).run();
  PermGroup g(t.order(), autos);
  if (g.order() != autos.size())
    throw std::logic_error("automorphism_group: enumeration inconsistent");
  return PermGroup(t.order(), reduced_generators(g));
}

/// An isomorphism t1 → t2 as a point map, if one exists.
inline std::optional<Perm> find_isomorphism(const CayleyTable &t1,
                                            const CayleyTable &t2,
                                            std::uint64_t budget = 200000) {
  if (t1.order() != t2.order())
    return std::nullopt;
  if (t1.order() > 256)
    throw std::invalid_argument("find_isomorphism: table too large");
  std::vector<Perm> maps =
      detail::IsomorphismBacktrack(t1, t2, budget, true).run();
  if (maps.empty())
    return std::nullopt;
  return maps.front();
}

/// The holomorph of t on its element set: right translations extended by
/// automorphisms. The stabilizer of the identity is exactly Aut(t).
inline PermGroup holomorph_with_aut(const CayleyTable &t,
                                    const PermGroup &aut) {
  std::vector<Perm> gens;
  for (std::uint32_t g : t.small_generating_set())
    gens.push_back(t.right_translation(g));
  for (const Perm &a : aut.generators())
    gens.push_back(a);
  if (gens.empty())
    return PermGroup(t.order());
  PermGroup hol(t.order(), gens);
  if (hol.order() != aut.order() * mpz_class(t.order()))
    throw std::logic_error("holomorph: order mismatch");
  return hol;
}

inline PermGroup holomorph(const CayleyTable &t,
                           std::uint64_t aut_budget = 200000) {
  return holomorph_with_aut(t, automorphism_group(t, aut_budget));
}

} // namespace semiprim
