#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

/**
 * @file perm.hpp
 * @brief Permutation value type: full image sequence, right-action composition.
 *
 * Points are 0-based internally; every external surface (files, JSON, CLI)
 * converts to the 1-based convention. Composition is left-to-right:
 * (p * q) maps x to q(p(x)), so x^{pq} = (x^p)^q.
 */

namespace semiprim {

using Point = std::uint32_t;

class Perm {
public:
  /// Identity on `degree` points.
  explicit Perm(Point degree = 0) : images_(degree) {
    std::iota(images_.begin(), images_.end(), Point{0});
  }

  /// From an explicit image sequence (must be a bijection of {0..n-1}).
  explicit Perm(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Point x : images_) {
      if (x >= images_.size() || seen[x])
        throw std::invalid_argument("Perm: image sequence is not a bijection");
      seen[x] = true;
    }
  }

  Point degree() const { return static_cast<Point>(images_.size()); }

  Point operator[](Point x) const {
    assert(x < degree());
    return images_[x];
  }

  const std::vector<Point> &images() const { return images_; }

  bool is_identity() const {
    for (Point x = 0; x < degree(); ++x)
      if (images_[x] != x)
        return false;
    return true;
  }

  /// Right-action composition: (p * q)[x] = q[p[x]].
  friend Perm operator*(const Perm &p, const Perm &q) {
    if (p.degree() != q.degree())
      throw std::invalid_argument("Perm: degree mismatch in composition");
    std::vector<Point> res(p.degree());
    for (Point x = 0; x < p.degree(); ++x)
      res[x] = q.images_[p.images_[x]];
    return Perm(Raw{}, std::move(res));
  }

  Perm inverse() const {
    std::vector<Point> res(degree());
    for (Point x = 0; x < degree(); ++x)
      res[images_[x]] = x;
    return Perm(Raw{}, std::move(res));
  }

  /// Conjugate p^q = q^{-1} p q.
  Perm conjugated_by(const Perm &q) const {
    if (degree() != q.degree())
      throw std::invalid_argument("Perm: degree mismatch in conjugation");
    std::vector<Point> res(degree());
    for (Point x = 0; x < degree(); ++x)
      res[q.images_[x]] = q.images_[images_[x]];
    return Perm(Raw{}, std::move(res));
  }

  friend bool operator==(const Perm &a, const Perm &b) = default;
  friend std::strong_ordering operator<=>(const Perm &a, const Perm &b) {
    return a.images_ <=> b.images_;
  }

  /// Nontrivial cycles, each rotated to start at its least point,
  /// sorted by that least point.
  std::vector<std::vector<Point>> cycles() const {
    std::vector<std::vector<Point>> res;
    std::vector<bool> seen(degree(), false);
    for (Point x = 0; x < degree(); ++x) {
      if (seen[x] || images_[x] == x)
        continue;
      std::vector<Point> cyc;
      for (Point y = x; !seen[y]; y = images_[y]) {
        seen[y] = true;
        cyc.push_back(y);
      }
      res.push_back(std::move(cyc));
    }
    return res;
  }

  /// Multiplicative order (lcm of cycle lengths); throws on u64 overflow.
  std::uint64_t order() const {
    std::uint64_t ord = 1;
    std::vector<bool> seen(degree(), false);
    for (Point x = 0; x < degree(); ++x) {
      if (seen[x])
        continue;
      std::uint64_t len = 0;
      for (Point y = x; !seen[y]; y = images_[y]) {
        seen[y] = true;
        ++len;
      }
      std::uint64_t g = std::gcd(ord, len);
      if (ord / g > UINT64_MAX / len)
        throw std::overflow_error("Perm::order: lcm exceeds 64 bits");
      ord = ord / g * len;
    }
    return ord;
  }

  std::size_t hash() const {
    // FNV-1a over the image words.
    std::uint64_t h = 14695981039346656037ull;
    for (Point x : images_) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }

  /// Cycle notation with 1-based points, e.g. "(1 2 3)(4 5)"; "()" = identity.
  std::string to_cycle_string() const {
    auto cyc = cycles();
    if (cyc.empty())
      return "()";
    std::string s;
    for (const auto &c : cyc) {
      s += '(';
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i)
          s += ' ';
        s += std::to_string(c[i] + 1);
      }
      s += ')';
    }
    return s;
  }

private:
  struct Raw {};
  Perm(Raw, std::vector<Point> images) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Perm &p) const { return p.hash(); }
};

/// Build a permutation from disjoint cycles given with 1-based points.
inline Perm perm_from_cycles(Point degree,
                             const std::vector<std::vector<Point>> &cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (const auto &c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      Point from = c[i], to = c[(i + 1) % c.size()];
      if (from == 0 || from > degree || to == 0 || to > degree)
        throw std::invalid_argument("perm_from_cycles: point out of range");
      images[from - 1] = to - 1;
    }
  }
  return Perm(std::move(images));
}

} // namespace semiprim
