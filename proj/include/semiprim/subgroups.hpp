#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "semiprim/perm.hpp"
#include "semiprim/perm_group.hpp"
#include "semiprim/structure.hpp"

/**
 * @file subgroups.hpp
 * @brief Exhaustive enumeration of subgroup conjugacy classes of a solvable
 *        group by cyclic extension: grow each known class by one coset
 *        representative at a time, deduplicating up to conjugacy.
 */

namespace semiprim {

using ElementSet = std::vector<Perm>; // sorted, duplicate-free

namespace detail {

/// Sorted element list of ⟨gens⟩ by breadth-first closure.
inline ElementSet closure_elements(Point degree, const std::vector<Perm> &gens,
                                   std::size_t cap) {
  std::vector<Perm> elems{Perm(degree)};
  std::set<Perm> seen(elems.begin(), elems.end());
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const Perm &gen : gens) {
      Perm next = elems[i] * gen;
      if (seen.insert(next).second) {
        if (elems.size() >= cap)
          throw std::runtime_error("subgroup closure exceeded element budget");
        elems.push_back(std::move(next));
      }
    }
  return ElementSet(seen.begin(), seen.end());
}

struct LeastConjugate {
  ElementSet set;
  Perm conjugator; // sub^conjugator == set
};

/// Lexicographically least element set in the conjugation orbit of `sub`
/// under `parent_gens`, with a conjugator reaching it.
inline LeastConjugate least_conjugate_set(const ElementSet &sub,
                                          const std::vector<Perm> &parent_gens,
                                          Point degree,
                                          std::size_t orbit_cap = 100000) {
  std::map<ElementSet, Perm> orbit; // set -> conjugator from sub
  orbit.emplace(sub, Perm(degree));
  std::vector<const ElementSet *> queue{&orbit.begin()->first};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    // Re-fetch the conjugator: map nodes are stable under insertion.
    Perm via = orbit.at(*queue[i]);
    for (const Perm &x : parent_gens) {
      ElementSet image;
      image.reserve(queue[i]->size());
      for (const Perm &s : *queue[i])
        image.push_back(s.conjugated_by(x));
      std::sort(image.begin(), image.end());
      auto [it, fresh] = orbit.emplace(std::move(image), via * x);
      if (fresh) {
        if (orbit.size() > orbit_cap)
          throw std::runtime_error(
              "least_conjugate_set exceeded orbit budget");
        queue.push_back(&it->first);
      }
    }
  }
  auto least = orbit.begin();
  return {least->first, least->second};
}

} // namespace detail

struct SubgroupClass {
  ElementSet elements;     // canonical class representative, sorted
  std::vector<Perm> generators; // generators of that representative
  std::uint64_t order() const { return elements.size(); }
};

/// All subgroup conjugacy classes of a solvable group g, filtered at output
/// time by `order_filter` (the search itself is exhaustive). Classes are
/// returned ascending by (order, element set). Throws on non-solvable input
/// or when |g| exceeds the element budget.
inline std::vector<SubgroupClass> solvable_subgroup_classes(
    const PermGroup &g,
    const std::function<bool(std::uint64_t)> &order_filter =
        [](std::uint64_t) { return true; },
    std::size_t element_budget = 100000) {
  if (!is_solvable(g))
    throw std::invalid_argument(
        "solvable_subgroup_classes: group is not solvable");
  if (g.order() > static_cast<unsigned long>(element_budget))
    throw std::runtime_error(
        "solvable_subgroup_classes: group order exceeds element budget");

  const Point degree = g.degree();
  std::vector<Perm> all = g.elements(element_budget);
  std::sort(all.begin(), all.end());

  struct Work {
    ElementSet elements;
    std::vector<Perm> generators;
  };

  std::set<ElementSet> seen_exact;     // any conjugate encountered verbatim
  std::map<ElementSet, Work> classes;  // canonical set -> representative
  std::vector<const Work *> queue;

  {
    ElementSet triv{Perm(degree)};
    seen_exact.insert(triv);
    auto [it, _] = classes.emplace(
        triv, Work{triv, {}});
    queue.push_back(&it->second);
  }

  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Work &h = *queue[qi];

    // Right-coset minima of h in g: walking the sorted element list, the
    // first uncovered element is the least member of its own coset.
    std::vector<bool> covered(all.size(), false);
    auto index_of = [&](const Perm &p) {
      return static_cast<std::size_t>(
          std::lower_bound(all.begin(), all.end(), p) - all.begin());
    };
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (covered[i])
        continue;
      for (const Perm &s : h.elements)
        covered[index_of(s * all[i])] = true;
      if (all[i].is_identity())
        continue; // extending by h's own coset is a no-op
      std::vector<Perm> ext_gens = h.generators;
      ext_gens.push_back(all[i]);
      ElementSet ext =
          detail::closure_elements(degree, ext_gens, element_budget);
      if (!seen_exact.insert(ext).second)
        continue;
      detail::LeastConjugate canon =
          detail::least_conjugate_set(ext, g.generators(), degree);
      seen_exact.insert(canon.set);
      if (classes.count(canon.set))
        continue;
      std::vector<Perm> canon_gens;
      canon_gens.reserve(ext_gens.size());
      for (const Perm &e : ext_gens)
        canon_gens.push_back(e.conjugated_by(canon.conjugator));
      auto [it, fresh] =
          classes.emplace(canon.set, Work{canon.set, std::move(canon_gens)});
      assert(fresh);
      queue.push_back(&it->second);
    }
  }

  std::vector<SubgroupClass> out;
  for (auto &[set, work] : classes)
    if (order_filter(set.size()))
      out.push_back({work.elements, work.generators});
  std::sort(out.begin(), out.end(),
            [](const SubgroupClass &a, const SubgroupClass &b) {
              if (a.elements.size() != b.elements.size())
                return a.elements.size() < b.elements.size();
              return a.elements < b.elements;
            });
  return out;
}

} // namespace semiprim
