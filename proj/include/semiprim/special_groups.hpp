#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "semiprim/cayley.hpp"
#include "semiprim/field.hpp"
#include "semiprim/perm_group.hpp"

/**
 * @file special_groups.hpp
 * @brief Constructions of the concrete p-groups under study — the quaternion
 *        group, Sylow p-subgroups of SU3(q), extraspecial plus-type groups —
 *        plus generic table builders (cyclic, dihedral, direct products,
 *        tables of permutation groups) for the test corpus.
 */

namespace semiprim {

// ---------------------------------------------------------------------------
// Generic builders.
// ---------------------------------------------------------------------------

inline CayleyTable cyclic_table(std::uint32_t n) {
  std::vector<std::vector<std::uint32_t>> rows(
      n, std::vector<std::uint32_t>(n));
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      rows[i][j] = (i + j) % n;
  return CayleyTable(std::move(rows));
}

inline CayleyTable direct_product_table(const CayleyTable &a,
                                        const CayleyTable &b) {
  std::uint32_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<std::vector<std::uint32_t>> rows(
      n, std::vector<std::uint32_t>(n));
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      rows[i][j] =
          a.mul(i / nb, j / nb) * nb + b.mul(i % nb, j % nb);
  return CayleyTable(std::move(rows));
}

/// Dihedral group of order 2n; element e*n + i represents r^i s^e.
inline CayleyTable dihedral_table(std::uint32_t n) {
  std::uint32_t total = 2 * n;
  std::vector<std::vector<std::uint32_t>> rows(
      total, std::vector<std::uint32_t>(total));
  for (std::uint32_t x = 0; x < total; ++x)
    for (std::uint32_t y = 0; y < total; ++y) {
      std::uint32_t i = x % n, e = x / n, i2 = y % n, e2 = y / n;
      std::uint32_t rot = e == 0 ? (i + i2) % n : (i + n - i2) % n;
      rows[x][y] = ((e + e2) % 2) * n + rot;
    }
  return CayleyTable(std::move(rows));
}

/// Multiplication table of an abstract copy of g, elements sorted so the
/// identity is element 0.
inline CayleyTable table_from_perm_group(const PermGroup &g) {
  std::vector<Perm> elems = g.elements(CayleyTable::kMaxOrder);
  std::sort(elems.begin(), elems.end());
  std::map<Perm, std::uint32_t> index;
  for (std::uint32_t i = 0; i < elems.size(); ++i)
    index.emplace(elems[i], i);
  std::uint32_t n = static_cast<std::uint32_t>(elems.size());
  std::vector<std::vector<std::uint32_t>> rows(
      n, std::vector<std::uint32_t>(n));
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      rows[i][j] = index.at(elems[i] * elems[j]);
  return CayleyTable(std::move(rows));
}

// ---------------------------------------------------------------------------
// The quaternion group, elements ordered 1, -1, i, -i, j, -j, k, -k.
// ---------------------------------------------------------------------------

inline CayleyTable q8_table() {
  // Basis products: entry {sign, basis} for bases 1, i, j, k.
  struct SB {
    std::uint32_t sign, basis;
  };
  constexpr SB basis_mul[4][4] = {
      {{0, 0}, {0, 1}, {0, 2}, {0, 3}},
      {{0, 1}, {1, 0}, {0, 3}, {1, 2}},
      {{0, 2}, {1, 3}, {1, 0}, {0, 1}},
      {{0, 3}, {0, 2}, {1, 1}, {1, 0}},
  };
  std::vector<std::vector<std::uint32_t>> rows(8, std::vector<std::uint32_t>(8));
  for (std::uint32_t x = 0; x < 8; ++x)
    for (std::uint32_t y = 0; y < 8; ++y) {
      SB prod = basis_mul[x / 2][y / 2];
      std::uint32_t sign = (x % 2 + y % 2 + prod.sign) % 2;
      rows[x][y] = 2 * prod.basis + sign;
    }
  return CayleyTable(std::move(rows));
}

// ---------------------------------------------------------------------------
// Sylow p-subgroup of SU3(q), q = p^n: pairs (a, b) over GF(q²) with
// b + b̄ + a·ā = 0 (bar = q-power Frobenius), multiplied by
// (a, b)(a', b') = (a + a', b + b' - a·ā'), the composition law of the
// unitriangular isometries [[1,a,b],[0,1,-ā],[0,0,1]].
// ---------------------------------------------------------------------------

inline CayleyTable su3_sylow(std::uint32_t q) {
  std::uint32_t p = 0, n = 0;
  for (std::uint32_t d = 2; d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0)
    throw std::invalid_argument("su3_sylow: q must be a prime power >= 2");
  std::uint32_t m = q;
  while (m % p == 0) {
    m /= p;
    ++n;
  }
  if (m != 1)
    throw std::invalid_argument("su3_sylow: q must be a prime power");
  if (static_cast<std::uint64_t>(q) * q * q > CayleyTable::kMaxOrder)
    throw std::invalid_argument("su3_sylow: group order exceeds table cap");

  Field F(p, 2 * n);
  auto bar = [&](std::uint32_t x) { return F.frobenius(x, n); };

  // Field elements in the 0-first discrete-log order.
  std::vector<std::uint32_t> field_order;
  field_order.push_back(0);
  for (std::uint32_t k = 0; k + 1 < F.q(); ++k)
    field_order.push_back(F.exp(k));

  std::vector<std::pair<std::uint32_t, std::uint32_t>> elems;
  for (std::uint32_t a : field_order)
    for (std::uint32_t b : field_order)
      if (F.add(F.add(b, bar(b)), F.mul(a, bar(a))) == 0)
        elems.emplace_back(a, b);
  if (elems.size() != static_cast<std::size_t>(q) * q * q)
    throw std::logic_error("su3_sylow: element count mismatch");

  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> index;
  for (std::uint32_t i = 0; i < elems.size(); ++i)
    index.emplace(elems[i], i);

  std::uint32_t total = static_cast<std::uint32_t>(elems.size());
  std::vector<std::vector<std::uint32_t>> rows(
      total, std::vector<std::uint32_t>(total));
  for (std::uint32_t i = 0; i < total; ++i)
    for (std::uint32_t j = 0; j < total; ++j) {
      auto [a1, b1] = elems[i];
      auto [a2, b2] = elems[j];
      std::uint32_t a = F.add(a1, a2);
      std::uint32_t b = F.sub(F.add(b1, b2), F.mul(a1, bar(a2)));
      rows[i][j] = index.at({a, b});
    }
  return CayleyTable(std::move(rows));
}

// ---------------------------------------------------------------------------
// Extraspecial plus-type group p^{1+2m} of exponent p (p odd): tuples
// (x, y, z) ∈ F_p^m × F_p^m × F_p with
// (x, y, z)(x', y', z') = (x+x', y+y', z+z'+x·y').
// ---------------------------------------------------------------------------

namespace detail {

struct ExtraspecialCoords {
  std::uint32_t p, m, n; // n = p^{1+2m}

  std::vector<std::uint32_t> decode(std::uint32_t e) const {
    std::vector<std::uint32_t> digits(2 * m + 1);
    for (std::uint32_t i = 0; i < 2 * m + 1; ++i) {
      digits[i] = e % p;
      e /= p;
    }
    return digits; // layout [z, y_0..y_{m-1}, x_0..x_{m-1}]
  }

  std::uint32_t encode(const std::vector<std::uint32_t> &digits) const {
    std::uint32_t e = 0;
    for (std::uint32_t i = 2 * m + 1; i-- > 0;)
      e = e * p + digits[i];
    return e;
  }

  std::uint32_t mul(std::uint32_t ea, std::uint32_t eb) const {
    auto a = decode(ea), b = decode(eb);
    std::vector<std::uint32_t> c(2 * m + 1);
    std::uint32_t dot = 0;
    for (std::uint32_t i = 0; i < m; ++i)
      dot = (dot + a[1 + m + i] * b[1 + i]) % p; // x_a · y_b
    c[0] = (a[0] + b[0] + dot) % p;
    for (std::uint32_t i = 1; i < 2 * m + 1; ++i)
      c[i] = (a[i] + b[i]) % p;
    return encode(c);
  }
};

} // namespace detail

inline CayleyTable extraspecial_plus(std::uint32_t p, std::uint32_t m) {
  if (m == 0)
    throw std::invalid_argument("extraspecial_plus: m must be positive");
  if (p < 3 || p % 2 == 0)
    throw std::invalid_argument("extraspecial_plus: p must be an odd prime");
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0)
      throw std::invalid_argument("extraspecial_plus: p must be prime");
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < 2 * m + 1; ++i) {
    total *= p;
    if (total > CayleyTable::kMaxOrder)
      throw std::invalid_argument("extraspecial_plus: order exceeds cap");
  }
  detail::ExtraspecialCoords co{p, m, static_cast<std::uint32_t>(total)};
  std::vector<std::vector<std::uint32_t>> rows(
      co.n, std::vector<std::uint32_t>(co.n));
  for (std::uint32_t i = 0; i < co.n; ++i)
    for (std::uint32_t j = 0; j < co.n; ++j)
      rows[i][j] = co.mul(i, j);
  return CayleyTable(std::move(rows));
}

} // namespace semiprim
