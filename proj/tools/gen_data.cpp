#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "semiprim/field.hpp"
#include "semiprim/group_io.hpp"
#include "semiprim/holsearch.hpp"
#include "semiprim/perm.hpp"
#include "semiprim/perm_group.hpp"
#include "semiprim/structure.hpp"
#include "semiprim/subgroups.hpp"

/**
 * @file gen_data.cpp
 * @brief One-time generator for the permutation data shipped under data/.
 *
 * Three groups are built from first principles and written as .perm files
 * together with a .meta.json provenance note:
 *
 *   3s6      the triple cover of S6, acting on the 18 nonzero vectors over
 *            GF(4) that lie on the points of a hyperoval in PG(2,4), plus
 *            one representative of each of its two classes of S5 subgroups;
 *   2m12     the double cover of M12, acting monomially on the 24 signed
 *            coordinate positions of the extended ternary Golay code, plus
 *            one representative of each of its two classes of M11 subgroups;
 *   a7_gl42  an A7 subgroup of GL(4,2), written on the 16 points of the
 *            affine space AG(4,2) with the zero vector fixed.
 *
 * Every structural claim recorded in the meta files is checked here at
 * build time; the library nevertheless treats the files as untrusted input
 * and re-verifies each property it relies on.
 */

namespace {

using namespace semiprim;
using nlohmann::ordered_json;

void check(bool ok, const std::string &what) {
  if (!ok)
    throw std::runtime_error("consistency check failed: " + what);
}

double lap(std::chrono::steady_clock::time_point &t0) {
  auto now = std::chrono::steady_clock::now();
  double s = std::chrono::duration<double>(now - t0).count();
  t0 = now;
  return s;
}

void write_meta(const std::filesystem::path &path, const ordered_json &doc) {
  std::ofstream out(path);
  check(out.good(), "cannot open " + path.string());
  out << doc.dump(2) << "\n";
}

std::vector<std::uint64_t> subdegrees(const PermGroup &g) {
  return g.rank_and_subdegrees().second;
}

ElementSet sorted_elements_of(const PermGroup &g, std::uint64_t cap) {
  std::vector<Perm> els = g.elements(cap);
  std::sort(els.begin(), els.end());
  return els;
}

// ---------------------------------------------------------------------------
// 3s6: the hyperoval stabilizer inside GammaL(3,4).
//
// The six projective points (1:0:0), (0:1:0), (0:0:1), (1:1:1), (1:w:w2),
// (1:w2:w) over GF(4), with w a generator of GF(4)*, form a hyperoval in
// PG(2,4): no three are collinear. The 18 nonzero vectors covering them are
// permuted by every semilinear map that stabilizes the configuration, and
// the full stabilizer inside GammaL(3,4) acts faithfully with order 2160,
// which identifies it as the triple cover of S6 (the scalar subgroup of
// order 3 is normal and acts without fixed points). A pair search over
// (order 5, order 2) element pairs finds its S5 subgroups; exactly two
// conjugacy classes of them act faithfully with rank 3 on their cosets,
// and those are the two shipped stabilizer classes.
// ---------------------------------------------------------------------------
void build_3s6(const std::filesystem::path &dir) {
  auto t0 = std::chrono::steady_clock::now();
  const Field f(2, 2);
  const std::uint32_t w = f.generator();
  const std::uint32_t w2 = f.mul(w, w);
  const std::array<std::array<std::uint32_t, 3>, 6> frame = {{{1, 0, 0},
                                                              {0, 1, 0},
                                                              {0, 0, 1},
                                                              {1, 1, 1},
                                                              {1, w, w2},
                                                              {1, w2, w}}};

  auto det3 = [&](const std::array<std::uint32_t, 9> &m) {
    auto minor = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c,
                     std::uint32_t d) { return f.sub(f.mul(a, d), f.mul(b, c)); };
    std::uint32_t d0 = f.mul(m[0], minor(m[4], m[5], m[7], m[8]));
    std::uint32_t d1 = f.mul(m[1], minor(m[3], m[5], m[6], m[8]));
    std::uint32_t d2 = f.mul(m[2], minor(m[3], m[4], m[6], m[7]));
    return f.add(f.sub(d0, d1), d2);
  };

  // No three of the six frame points are collinear.
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j)
      for (std::size_t k = j + 1; k < 6; ++k) {
        std::array<std::uint32_t, 9> m{frame[i][0], frame[i][1], frame[i][2],
                                       frame[j][0], frame[j][1], frame[j][2],
                                       frame[k][0], frame[k][1], frame[k][2]};
        check(det3(m) != 0, "hyperoval has three collinear points");
      }

  // The 18 covering vectors, sorted by their base-4 encoding.
  auto encode = [](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    return (a << 4) | (b << 2) | c;
  };
  std::vector<std::uint32_t> vecs;
  for (const auto &pt : frame)
    for (std::uint32_t s : {1u, w, w2})
      vecs.push_back(encode(f.mul(s, pt[0]), f.mul(s, pt[1]), f.mul(s, pt[2])));
  std::sort(vecs.begin(), vecs.end());
  check(std::unique(vecs.begin(), vecs.end()) == vecs.end() &&
            vecs.size() == 18,
        "hyperoval cover must consist of 18 distinct vectors");
  std::array<int, 64> point_of{};
  point_of.fill(-1);
  for (std::size_t i = 0; i < vecs.size(); ++i)
    point_of[vecs[i]] = static_cast<int>(i);

  // Sweep all invertible 3x3 matrices over GF(4), with and without the
  // Frobenius twist, keeping the maps that permute the 18-vector set.
  std::set<Perm> stabilizing;
  for (std::uint32_t code = 0; code < (1u << 18); ++code) {
    std::array<std::uint32_t, 9> m;
    for (std::size_t k = 0; k < 9; ++k)
      m[k] = (code >> (2 * k)) & 3u;
    for (int frob = 0; frob < 2; ++frob) {
      std::vector<Point> images(18);
      std::uint32_t seen = 0;
      bool ok = true;
      for (std::size_t i = 0; i < 18 && ok; ++i) {
        std::uint32_t a = vecs[i] >> 4, b = (vecs[i] >> 2) & 3u,
                      c = vecs[i] & 3u;
        if (frob) {
          a = f.frobenius(a);
          b = f.frobenius(b);
          c = f.frobenius(c);
        }
        std::uint32_t ia = f.add(f.add(f.mul(a, m[0]), f.mul(b, m[3])),
                                 f.mul(c, m[6]));
        std::uint32_t ib = f.add(f.add(f.mul(a, m[1]), f.mul(b, m[4])),
                                 f.mul(c, m[7]));
        std::uint32_t ic = f.add(f.add(f.mul(a, m[2]), f.mul(b, m[5])),
                                 f.mul(c, m[8]));
        int p = point_of[encode(ia, ib, ic)];
        if (p < 0 || (seen >> p) & 1u)
          ok = false;
        else {
          seen |= 1u << p;
          images[i] = static_cast<Point>(p);
        }
        if (i == 0 && ok && det3(m) == 0)
          ok = false; // singular maps cannot lie in GammaL(3,4)
      }
      if (ok)
        stabilizing.insert(Perm(std::move(images)));
    }
  }
  check(stabilizing.size() == 2160,
        "hyperoval stabilizer must contain 2160 distinct permutations");

  PermGroup full(18, std::vector<Perm>(stabilizing.begin(), stabilizing.end()));
  check(full.order() == 2160, "hyperoval stabilizer must have order 2160");
  PermGroup x(18, reduced_generators(full));
  check(x.order() == 2160, "reduced generators must regenerate the group");
  auto profile = x.rank_and_subdegrees();
  check(profile.first == 3 &&
            profile.second == std::vector<std::uint64_t>({1, 2, 15}),
        "degree-18 action must have rank 3 with subdegrees 1, 2, 15");

  // The scalar subgroup of order 3 is normal and semiregular.
  {
    std::vector<Point> scalar(18);
    for (std::size_t i = 0; i < 18; ++i) {
      std::uint32_t a = vecs[i] >> 4, b = (vecs[i] >> 2) & 3u,
                    c = vecs[i] & 3u;
      scalar[i] = static_cast<Point>(
          point_of[encode(f.mul(w, a), f.mul(w, b), f.mul(w, c))]);
    }
    Perm z{std::move(scalar)};
    check(x.contains(z), "scalar map must lie in the stabilizer");
    PermGroup n(18, {z});
    check(n.order() == 3, "scalar subgroup must have order 3");
    for (const Perm &g : x.generators())
      check(n.contains(z.conjugated_by(g)), "scalar subgroup must be normal");
    check(n.transitivity_profile().is_semiregular,
          "scalar subgroup must be semiregular");
  }

  // Pair search for subgroups isomorphic to S5: every such subgroup is
  // generated by an element of order 5 together with an involution.
  std::vector<Perm> elems = x.elements(2161);
  std::vector<Perm> fives, twos;
  for (const Perm &p : elems) {
    if (p.order() == 5)
      fives.push_back(p);
    else if (p.order() == 2)
      twos.push_back(p);
  }
  std::set<ElementSet> order120;
  for (const Perm &a : fives)
    for (const Perm &b : twos) {
      PermGroup h(18, {a, b});
      if (h.order_u64() == 120)
        order120.insert(sorted_elements_of(h, 121));
    }
  check(!order120.empty(), "pair search must find order-120 subgroups");

  // Keep the classes whose coset action is faithful of rank 3; those are
  // exactly the point-stabilizer classes of degree-18 rank-3 actions.
  std::set<ElementSet> classes;
  for (const ElementSet &s : order120) {
    CosetActionResult act = coset_action(x, PermGroup(18, s));
    if (!act.faithful)
      continue;
    if (act.image.rank_and_subdegrees().first != 3)
      continue;
    classes.insert(detail::least_conjugate_set(s, x.generators(), 18).set);
  }
  check(classes.size() == 2,
        "exactly two classes of rank-3 point stabilizers expected");

  PermGroup stab0 = x.point_stabilizer(0);
  check(stab0.order() == 120, "point stabilizer must have order 120");
  ElementSet stab0_class =
      detail::least_conjugate_set(sorted_elements_of(stab0, 121),
                                  x.generators(), 18)
          .set;
  check(classes.count(stab0_class) == 1,
        "the natural point stabilizer must be one of the two classes");
  ElementSet other_class = *classes.begin() == stab0_class
                               ? *std::next(classes.begin())
                               : *classes.begin();

  PermGroup stab2(18, reduced_generators(PermGroup(18, other_class)));
  check(stab2.order() == 120, "companion stabilizer must have order 120");
  check(!are_conjugate_subgroups(x, stab0, stab2),
        "the two stabilizer classes must not be conjugate");
  {
    CosetActionResult act2 = coset_action(x, stab2);
    check(act2.faithful && act2.image.rank_and_subdegrees() == profile,
          "companion coset action must be faithful of rank 3");
  }

  PermGroup stab1(18, reduced_generators(stab0));
  write_perm_file((dir / "3s6.perm").string(), 18, x.generators());
  write_perm_file((dir / "3s6.stab1.perm").string(), 18, stab1.generators());
  write_perm_file((dir / "3s6.stab2.perm").string(), 18, stab2.generators());

  ordered_json meta;
  meta["name"] = "3s6";
  meta["description"] =
      "Triple cover of the symmetric group of degree 6, acting on the 18 "
      "nonzero vectors of GF(4)^3 that lie on the points of a hyperoval in "
      "the projective plane of order 4.";
  meta["construction"] =
      "Generated by `gen_data <dir>` (tools/gen_data.cpp): enumerate all "
      "semilinear maps of GF(4)^3 (invertible matrix, optional Frobenius "
      "twist) and keep those permuting the 18 vectors that cover the "
      "hyperoval {(1:0:0),(0:1:0),(0:0:1),(1:1:1),(1:w:w^2),(1:w^2:w)}; the "
      "2160 surviving maps act faithfully. Stabilizer representatives come "
      "from a pair search over (order 5, order 2) element pairs, classified "
      "up to conjugacy.";
  meta["degree"] = 18;
  meta["order"] = 2160;
  meta["rank"] = 3;
  meta["subdegrees"] = profile.second;
  meta["point_labeling"] =
      "Point i is the i-th covering vector in ascending order of the "
      "encoding 16*a + 4*b + c of (a, b, c) in GF(4)^3, where field elements "
      "are numbered 0, 1, w, w^2 = 0, 1, 2, 3.";
  meta["files"] = {{"group", "3s6.perm"},
                   {"stab1", "3s6.stab1.perm"},
                   {"stab2", "3s6.stab2.perm"}};
  meta["stabilizers"] = {
      {"order", 120},
      {"classes", 2},
      {"note",
       "stab1 is the stabilizer of point 0; stab2 represents the other "
       "conjugacy class of rank-3 point stabilizers. The two classes are "
       "not conjugate, and each coset action is faithful of rank 3."}};
  meta["checks"] = {
      "no three hyperoval points are collinear",
      "the 18 covering vectors are distinct",
      "exactly 2160 semilinear maps stabilize the vector set",
      "the 2160 induced permutations are distinct (faithful action)",
      "rank 3 with subdegrees 1, 2, 15",
      "the scalar subgroup of order 3 is normal and semiregular",
      "exactly two conjugacy classes of rank-3 point stabilizers, "
      "mutually non-conjugate, each with a faithful rank-3 coset action"};
  write_meta(dir / "3s6.meta.json", meta);

  auto t1 = t0;
  std::cout << "3s6: order 2160, two stabilizer classes written ("
            << order120.size() << " subgroups classified, " << lap(t1)
            << " s)\n";
}

// ---------------------------------------------------------------------------
// 2m12: the monomial automorphism group of the extended ternary Golay code.
//
// The code is the row space of [I6 | B] over GF(3) with B the standard
// bordered circulant. Its 132 weight-6 supports form the Steiner system
// S(5,6,12), whose automorphism group is M12; a monomial map (permutation
// with signs) preserving the code projects onto an automorphism of the
// Steiner system, and the kernel of that projection is generated by global
// negation. Since M12 is sharply 5-transitive, each injective image tuple
// of the first five positions extends to at most one Steiner automorphism,
// which is recovered by propagating block closures; a 2^12 sweep then finds
// the two sign vectors lifting it into the code's monomial group. Closing
// a few such lifts reaches the full group of order 190080 on the 24 signed
// positions. The two M11 classes are the order-7920 members of the
// overgroup interval above a Sylow 11-subgroup.
// ---------------------------------------------------------------------------
void build_2m12(const std::filesystem::path &dir) {
  auto t0 = std::chrono::steady_clock::now();
  using Word = std::array<std::uint8_t, 12>;
  const int B[6][6] = {{0, 1, 1, 1, 1, 1}, {1, 0, 1, 2, 2, 1},
                       {1, 1, 0, 1, 2, 2}, {1, 2, 1, 0, 1, 2},
                       {1, 2, 2, 1, 0, 1}, {1, 1, 2, 2, 1, 0}};
  std::array<Word, 6> rows{};
  for (int r = 0; r < 6; ++r) {
    rows[r][r] = 1;
    for (int c = 0; c < 6; ++c)
      rows[r][6 + c] = static_cast<std::uint8_t>(B[r][c]);
  }

  auto dot = [](const Word &u, const Word &v) {
    int s = 0;
    for (int i = 0; i < 12; ++i)
      s += u[i] * v[i];
    return s % 3;
  };
  // Pairwise orthogonality makes the code self-dual (dimension 6 on both
  // sides), so membership reduces to orthogonality against the six rows.
  for (int r = 0; r < 6; ++r)
    for (int s = r; s < 6; ++s)
      check(dot(rows[r], rows[s]) == 0, "generator rows must be orthogonal");
  auto in_code = [&](const Word &v) {
    for (int r = 0; r < 6; ++r)
      if (dot(v, rows[r]) != 0)
        return false;
    return true;
  };

  // Weight distribution and the 132 hexad supports.
  std::map<int, int> weight_count;
  std::set<std::uint16_t> hexads;
  std::set<Word> codewords;
  for (int c = 0; c < 729; ++c) {
    Word v{};
    int cc = c;
    for (int r = 0; r < 6; ++r, cc /= 3) {
      int coef = cc % 3;
      for (int i = 0; i < 12; ++i)
        v[i] = static_cast<std::uint8_t>((v[i] + coef * rows[r][i]) % 3);
    }
    codewords.insert(v);
    int wt = 0;
    std::uint16_t supp = 0;
    for (int i = 0; i < 12; ++i)
      if (v[i]) {
        ++wt;
        supp |= static_cast<std::uint16_t>(1u << i);
      }
    ++weight_count[wt];
    if (wt == 6)
      hexads.insert(supp);
  }
  check(codewords.size() == 729, "code must have dimension 6");
  check(weight_count == std::map<int, int>({{0, 1}, {6, 264}, {9, 440},
                                            {12, 24}}),
        "weight distribution must be 0^1 6^264 9^440 12^24");
  check(hexads.size() == 132, "there must be 132 hexad supports");

  // Steiner property: every 5-subset of positions lies in exactly one hexad.
  std::map<std::uint16_t, std::uint16_t> block_of;
  for (std::uint16_t h : hexads)
    for (int drop = 0; drop < 12; ++drop)
      if ((h >> drop) & 1u) {
        auto sub = static_cast<std::uint16_t>(h & ~(1u << drop));
        check(block_of.emplace(sub, h).second,
              "a 5-subset lies in two hexads");
      }
  check(block_of.size() == 792, "all 792 5-subsets must be covered");

  // Forced closure: whenever a hexad has five mapped points, the block
  // through their images pins the image of the sixth. Returns false on a
  // contradiction. Closure alone cannot leave the starting block (two
  // distinct hexads share at most four points), so the extension search
  // below additionally branches on the image of one point at a time; full
  // hexad verification then leaves exactly one branch alive per tuple,
  // because automorphisms of this Steiner system are determined by five
  // images.
  auto close = [&](std::array<int, 12> &m, std::uint16_t &used,
                   int &mapped) -> bool {
    bool progress = true;
    while (mapped < 12 && progress) {
      progress = false;
      for (std::uint16_t h : hexads) {
        int unknown = -1, known = 0;
        std::uint16_t image5 = 0;
        for (int i = 0; i < 12; ++i)
          if ((h >> i) & 1u) {
            if (m[i] >= 0) {
              ++known;
              image5 |= static_cast<std::uint16_t>(1u << m[i]);
            } else
              unknown = i;
          }
        if (known != 5 || unknown < 0)
          continue;
        auto it = block_of.find(image5);
        if (it == block_of.end())
          return false;
        auto rest = static_cast<std::uint16_t>(it->second & ~image5);
        int target = std::countr_zero(static_cast<unsigned>(rest));
        if ((used >> target) & 1u)
          return false;
        m[unknown] = target;
        used |= static_cast<std::uint16_t>(1u << target);
        ++mapped;
        progress = true;
      }
    }
    return true;
  };
  auto maps_hexads = [&](const std::array<int, 12> &m) {
    for (std::uint16_t h : hexads) {
      std::uint16_t img = 0;
      for (int i = 0; i < 12; ++i)
        if ((h >> i) & 1u)
          img |= static_cast<std::uint16_t>(1u << m[i]);
      if (hexads.count(img) == 0)
        return false;
    }
    return true;
  };
  std::function<void(std::array<int, 12>, std::uint16_t, int,
                     std::vector<std::array<int, 12>> &)>
      extend = [&](std::array<int, 12> m, std::uint16_t used, int mapped,
                   std::vector<std::array<int, 12>> &solutions) {
        if (solutions.size() > 1)
          return;
        if (!close(m, used, mapped))
          return;
        if (mapped == 12) {
          if (maps_hexads(m))
            solutions.push_back(m);
          return;
        }
        int u = 0;
        while (m[u] >= 0)
          ++u;
        for (int c = 0; c < 12; ++c) {
          if ((used >> c) & 1u)
            continue;
          std::array<int, 12> m2 = m;
          m2[u] = c;
          extend(m2, static_cast<std::uint16_t>(used | (1u << c)), mapped + 1,
                 solutions);
        }
      };
  auto propagate = [&](const std::array<int, 5> &t)
      -> std::optional<std::array<int, 12>> {
    std::array<int, 12> m;
    m.fill(-1);
    std::uint16_t used = 0;
    for (int k = 0; k < 5; ++k) {
      m[k] = t[k];
      used |= static_cast<std::uint16_t>(1u << t[k]);
    }
    std::vector<std::array<int, 12>> solutions;
    extend(m, used, 5, solutions);
    check(solutions.size() <= 1,
          "five images must determine at most one automorphism");
    if (solutions.empty())
      return std::nullopt;
    return solutions.front();
  };

  // The two sign vectors lifting a Steiner automorphism into the monomial
  // group of the code (they differ by global negation).
  auto sign_lifts = [&](const std::array<int, 12> &m)
      -> std::vector<std::uint16_t> {
    std::vector<std::uint16_t> out;
    for (std::uint32_t mask = 0; mask < 4096; ++mask) {
      bool ok = true;
      for (int r = 0; r < 6 && ok; ++r) {
        Word v{};
        for (int i = 0; i < 12; ++i) {
          int sign = ((mask >> i) & 1u) ? 2 : 1;
          v[m[i]] = static_cast<std::uint8_t>((sign * rows[r][i]) % 3);
        }
        ok = in_code(v);
      }
      if (ok)
        out.push_back(static_cast<std::uint16_t>(mask));
    }
    return out;
  };

  // Points 0..11 are the positive positions +e_i and points 12..23 the
  // negated positions -e_i.
  auto monomial_perm = [](const std::array<int, 12> &m, std::uint16_t mask) {
    std::vector<Point> img(24);
    for (int i = 0; i < 12; ++i) {
      bool neg = (mask >> i) & 1u;
      img[i] = static_cast<Point>(neg ? 12 + m[i] : m[i]);
      img[12 + i] = static_cast<Point>(neg ? m[i] : 12 + m[i]);
    }
    return Perm(std::move(img));
  };

  // Draw image tuples from a fixed linear congruential sequence; sharp
  // 5-transitivity guarantees each injective tuple extends, and a handful
  // of the resulting automorphisms already generate the whole group.
  std::vector<Perm> gens;
  std::uint64_t order = 0;
  int tuples_tried = 0;
  std::uint64_t lcg = 1;
  auto draw = [&lcg]() {
    lcg = lcg * 48271 % 2147483647;
    return static_cast<int>(lcg % 12);
  };
  while (order != 190080) {
    std::array<int, 5> t{};
    std::uint16_t taken = 0;
    for (int k = 0; k < 5; ++k) {
      int v = draw();
      while ((taken >> v) & 1u)
        v = draw();
      t[k] = v;
      taken |= static_cast<std::uint16_t>(1u << v);
    }
    check(++tuples_tried <= 64, "generation should close within a few tuples");
    auto m = propagate(t);
    check(m.has_value(), "every injective tuple must extend");
    auto lifts = sign_lifts(*m);
    check(lifts.size() == 2 && (lifts[0] ^ lifts[1]) == 0xFFF,
          "each Steiner automorphism must have exactly two sign lifts, "
          "opposite to each other");
    for (std::uint16_t mask : lifts)
      gens.push_back(monomial_perm(*m, mask));
    order = PermGroup(24, gens).order_u64();
  }
  check(order == 190080, "monomial group must reach order 190080");

  PermGroup x(24, reduced_generators(PermGroup(24, gens)));
  check(x.order() == 190080, "reduced generators must regenerate the group");
  auto profile = x.rank_and_subdegrees();
  check(profile.first == 3 &&
            profile.second == std::vector<std::uint64_t>({1, 1, 22}),
        "degree-24 action must have rank 3 with subdegrees 1, 1, 22");

  // Global negation generates the semiregular centre of order 2.
  {
    std::vector<Point> swap(24);
    for (Point i = 0; i < 12; ++i) {
      swap[i] = 12 + i;
      swap[12 + i] = i;
    }
    Perm z{std::move(swap)};
    check(x.contains(z), "global negation must lie in the group");
    for (const Perm &g : x.generators())
      check(z.conjugated_by(g) == z, "global negation must be central");
  }

  PermGroup stab0 = x.point_stabilizer(0);
  check(stab0.order() == 7920, "point stabilizer must have order 7920");

  std::cout << "2m12: order 190080 reached from " << tuples_tried
            << " tuples (" << lap(t0) << " s); sweeping the overgroup "
            << "interval above a Sylow 11-subgroup...\n";

  // Both M11 classes: order-7920 members of the interval above a fixed
  // Sylow 11-subgroup (every subgroup of order 7920 contains one, and all
  // Sylow 11-subgroups are conjugate, so the interval meets both classes).
  std::vector<Perm> all = x.elements(190081);
  std::sort(all.begin(), all.end());
  const Perm *seed = nullptr;
  for (const Perm &p : all)
    if (p.order() == 11) {
      seed = &p;
      break;
    }
  check(seed != nullptr, "an element of order 11 must exist");
  auto deadline = detail::SearchClock::now() + std::chrono::hours(24);
  auto [over, complete] = detail::interval_overgroups(24, all, *seed, deadline);
  check(complete, "interval sweep must run to completion");

  std::set<ElementSet> classes;
  for (const PermGroup &h : over)
    if (h.order_u64() == 7920)
      classes.insert(detail::least_conjugate_set(sorted_elements_of(h, 7921),
                                                 x.generators(), 24)
                         .set);
  check(classes.size() == 2,
        "exactly two classes of order-7920 subgroups expected");
  ElementSet stab0_class =
      detail::least_conjugate_set(sorted_elements_of(stab0, 7921),
                                  x.generators(), 24)
          .set;
  check(classes.count(stab0_class) == 1,
        "the natural point stabilizer must be one of the two classes");
  ElementSet other_class = *classes.begin() == stab0_class
                               ? *std::next(classes.begin())
                               : *classes.begin();

  PermGroup stab2(24, reduced_generators(PermGroup(24, other_class)));
  check(stab2.order() == 7920, "companion stabilizer must have order 7920");
  check(!are_conjugate_subgroups(x, stab0, stab2, 10000, 100000000),
        "the two stabilizer classes must not be conjugate");
  {
    CosetActionResult act2 = coset_action(x, stab2);
    check(act2.faithful && act2.image.rank_and_subdegrees() == profile,
          "companion coset action must be faithful of rank 3");
  }

  PermGroup stab1(24, reduced_generators(stab0));
  write_perm_file((dir / "2m12.perm").string(), 24, x.generators());
  write_perm_file((dir / "2m12.stab1.perm").string(), 24, stab1.generators());
  write_perm_file((dir / "2m12.stab2.perm").string(), 24, stab2.generators());

  ordered_json meta;
  meta["name"] = "2m12";
  meta["description"] =
      "Double cover of the Mathieu group M12, acting monomially on the 24 "
      "signed coordinate positions of the extended ternary Golay code.";
  meta["construction"] =
      "Generated by `gen_data <dir>` (tools/gen_data.cpp): the code is the "
      "row space of [I6 | B] over GF(3) with B the bordered circulant of "
      "(0 1 1 1 1 1; 1 0 1 2 2 1; ...). Steiner-system automorphisms are "
      "recovered by propagating hexad closures of 5-point image tuples and "
      "lifted to signed monomial maps by a sign sweep; the lifts close to "
      "the full monomial group of order 190080. Stabilizer representatives "
      "are the order-7920 members of the subgroup interval above a Sylow "
      "11-subgroup, classified up to conjugacy.";
  meta["degree"] = 24;
  meta["order"] = 190080;
  meta["rank"] = 3;
  meta["subdegrees"] = profile.second;
  meta["point_labeling"] =
      "Point i (0..11) is the positive coordinate position +e_i of the "
      "code; point 12+i is its negation -e_i. On disk the points are "
      "written 1-based.";
  meta["files"] = {{"group", "2m12.perm"},
                   {"stab1", "2m12.stab1.perm"},
                   {"stab2", "2m12.stab2.perm"}};
  meta["stabilizers"] = {
      {"order", 7920},
      {"classes", 2},
      {"note",
       "stab1 is the stabilizer of point 0; stab2 represents the other "
       "conjugacy class of order-7920 subgroups. The two classes are not "
       "conjugate, and each coset action is faithful of rank 3."}};
  meta["checks"] = {
      "generator rows are pairwise orthogonal (the code is self-dual)",
      "weight distribution is 0^1 6^264 9^440 12^24",
      "the 132 hexads cover every 5-subset exactly once (S(5,6,12))",
      "every Steiner automorphism admits exactly two opposite sign lifts",
      "the monomial group has order 190080 and acts with rank 3 and "
      "subdegrees 1, 1, 22",
      "global negation is central and semiregular",
      "the overgroup interval above a Sylow 11-subgroup was swept to "
      "completion and contains exactly two classes of order-7920 "
      "subgroups, mutually non-conjugate, each with a faithful rank-3 "
      "coset action"};
  write_meta(dir / "2m12.meta.json", meta);

  std::cout << "2m12: interval classified, both stabilizer classes written ("
            << lap(t0) << " s)\n";
}

// ---------------------------------------------------------------------------
// a7_gl42: an alternating group of degree 7 inside GL(4,2).
//
// GL(4,2) is generated by the twelve elementary transvections; a pair
// search over (order 7, order 3) element pairs finds a subgroup of order
// 2520 that is perfect and 2-transitive on the 15 nonzero vectors, which
// pins it as A7 in its exceptional 2-transitive degree-15 action. The file
// ships the action extended to the 16 vectors of AG(4,2), zero included,
// so that affine constructions can add translations directly.
// ---------------------------------------------------------------------------
void build_a7(const std::filesystem::path &dir) {
  auto t0 = std::chrono::steady_clock::now();
  // Row r of a matrix is a 4-bit mask; v * M xors the rows selected by v.
  auto apply = [](const std::array<std::uint32_t, 4> &m, std::uint32_t v) {
    std::uint32_t out = 0;
    for (int r = 0; r < 4; ++r)
      if ((v >> r) & 1u)
        out ^= m[r];
    return out;
  };
  std::vector<Perm> transvections;
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s) {
      if (r == s)
        continue;
      std::array<std::uint32_t, 4> m{1u, 2u, 4u, 8u};
      m[r] ^= 1u << s;
      std::vector<Point> img(15);
      for (std::uint32_t v = 1; v < 16; ++v)
        img[v - 1] = static_cast<Point>(apply(m, v) - 1);
      transvections.emplace_back(std::move(img));
    }
  PermGroup gl(15, transvections);
  check(gl.order() == 20160, "GL(4,2) must have order 20160");

  std::vector<Perm> elems = gl.elements(20161);
  std::sort(elems.begin(), elems.end());
  const Perm *a = nullptr;
  for (const Perm &p : elems)
    if (p.order() == 7) {
      a = &p;
      break;
    }
  check(a != nullptr, "an element of order 7 must exist");

  std::optional<PermGroup> found;
  for (const Perm &b : elems) {
    if (b.order() != 3)
      continue;
    PermGroup h(15, {*a, b});
    if (h.order_u64() != 2520)
      continue;
    auto profile = h.rank_and_subdegrees();
    check(profile.first == 2 &&
              profile.second == std::vector<std::uint64_t>({1, 14}),
          "an order-2520 subgroup must be 2-transitive on the 15 vectors");
    check(derived_subgroup(h).order() == h.order(),
          "the order-2520 subgroup must be perfect");
    found = PermGroup(15, reduced_generators(h));
    break;
  }
  check(found.has_value(), "pair search must find an order-2520 subgroup");

  // Extend to the 16 affine points: point 0 is the zero vector, point v
  // (1..15) is the vector with binary encoding v = b0 + 2 b1 + 4 b2 + 8 b3.
  std::vector<Perm> ext_perms;
  for (const Perm &g : found->generators()) {
    std::vector<Point> img(16);
    img[0] = 0;
    for (Point v = 1; v < 16; ++v)
      img[v] = g[v - 1] + 1;
    ext_perms.emplace_back(std::move(img));
  }
  PermGroup a7(16, ext_perms);
  check(a7.order() == 2520, "extended action must preserve the order");
  check(a7.orbit_of(0).size() == 1 && a7.orbit_of(1).size() == 15,
        "the zero vector must be the unique fixed point");
  check(a7.point_stabilizer(1).order() == 168,
        "a vector stabilizer must have order 168");

  write_perm_file((dir / "a7_gl42.perm").string(), 16, ext_perms);

  ordered_json meta;
  meta["name"] = "a7_gl42";
  meta["description"] =
      "Alternating group of degree 7 inside GL(4,2), written on the 16 "
      "points of AG(4,2) with the zero vector fixed; it acts 2-transitively "
      "on the 15 nonzero vectors.";
  meta["construction"] =
      "Generated by `gen_data <dir>` (tools/gen_data.cpp): GL(4,2) is "
      "generated by the twelve elementary transvections; a pair search over "
      "(order 7, order 3) element pairs finds a perfect, 2-transitive "
      "subgroup of order 2520, which identifies A7 in its degree-15 "
      "2-transitive action.";
  meta["degree"] = 16;
  meta["order"] = 2520;
  meta["point_labeling"] =
      "Point 0 is the zero vector; point v (1..15) is the vector of GF(2)^4 "
      "with binary encoding v = b0 + 2 b1 + 4 b2 + 8 b3. On disk the points "
      "are written 1-based.";
  meta["files"] = {{"group", "a7_gl42.perm"}};
  meta["checks"] = {
      "the twelve elementary transvections generate a group of order 20160",
      "the pair search subgroup has order 2520, is perfect, and is "
      "2-transitive on the 15 nonzero vectors",
      "the extension to 16 points fixes only the zero vector",
      "the stabilizer of a nonzero vector has order 168"};
  write_meta(dir / "a7_gl42.meta.json", meta);

  std::cout << "a7_gl42: order 2520 written (" << lap(t0) << " s)\n";
}

} // namespace

int main(int argc, char **argv) {
  try {
    std::filesystem::path dir = argc > 1 ? argv[1] : "data";
    std::filesystem::create_directories(dir);
    build_3s6(dir);
    build_a7(dir);
    build_2m12(dir);
    std::cout << "all data files written to " << dir.string() << "\n";
    return 0;
  } catch (const std::exception &e) {
    std::cerr << "gen_data: " << e.what() << "\n";
    return 1;
  }
}
