#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "semiprim/field.hpp"
#include "semiprim/perm.hpp"
#include "semiprim/perm_group.hpp"

/**
 * @file linear.hpp
 * @brief Matrix and semilinear groups over GF(q) and their permutation
 *        actions on nonzero row vectors and on scalar-subgroup orbits.
 */

namespace semiprim {

// ---------------------------------------------------------------------------
// Matrices (row-major, entries are field encodings; vectors act on the left).
// ---------------------------------------------------------------------------

struct Matrix {
  std::uint32_t d = 0;
  std::vector<std::uint32_t> a; // d*d entries

  std::uint32_t &at(std::uint32_t i, std::uint32_t j) { return a[i * d + j]; }
  std::uint32_t at(std::uint32_t i, std::uint32_t j) const {
    return a[i * d + j];
  }
  bool operator==(const Matrix &) const = default;
};

inline Matrix identity_matrix(std::uint32_t d) {
  Matrix m{d, std::vector<std::uint32_t>(d * d, 0)};
  for (std::uint32_t i = 0; i < d; ++i)
    m.at(i, i) = 1;
  return m;
}

inline Matrix scalar_matrix(std::uint32_t d, std::uint32_t lambda) {
  Matrix m{d, std::vector<std::uint32_t>(d * d, 0)};
  for (std::uint32_t i = 0; i < d; ++i)
    m.at(i, i) = lambda;
  return m;
}

inline Matrix mat_mul(const Field &F, const Matrix &x, const Matrix &y) {
  Matrix out{x.d, std::vector<std::uint32_t>(x.d * x.d, 0)};
  for (std::uint32_t i = 0; i < x.d; ++i)
    for (std::uint32_t j = 0; j < x.d; ++j) {
      std::uint32_t s = 0;
      for (std::uint32_t k = 0; k < x.d; ++k)
        s = F.add(s, F.mul(x.at(i, k), y.at(k, j)));
      out.at(i, j) = s;
    }
  return out;
}

inline Matrix mat_frobenius(const Field &F, const Matrix &x, std::uint32_t e) {
  Matrix out = x;
  for (auto &v : out.a)
    v = F.frobenius(v, e);
  return out;
}

/// Determinant by Gaussian elimination with partial pivoting.
inline std::uint32_t determinant(const Field &F, Matrix m) {
  std::uint32_t det = 1;
  for (std::uint32_t col = 0; col < m.d; ++col) {
    std::uint32_t pivot = col;
    while (pivot < m.d && m.at(pivot, col) == 0)
      ++pivot;
    if (pivot == m.d)
      return 0;
    if (pivot != col) {
      for (std::uint32_t j = 0; j < m.d; ++j)
        std::swap(m.a[pivot * m.d + j], m.a[col * m.d + j]);
      det = F.neg(det);
    }
    det = F.mul(det, m.at(col, col));
    std::uint32_t inv = F.inv(m.at(col, col));
    for (std::uint32_t row = col + 1; row < m.d; ++row) {
      std::uint32_t factor = F.mul(m.at(row, col), inv);
      if (factor == 0)
        continue;
      for (std::uint32_t j = col; j < m.d; ++j)
        m.at(row, j) =
            F.sub(m.at(row, j), F.mul(factor, m.at(col, j)));
    }
  }
  return det;
}

// ---------------------------------------------------------------------------
// Semilinear maps: v ↦ (v^{φ^e})·A, composed left-to-right.
// ---------------------------------------------------------------------------

struct SemilinearMap {
  Matrix matrix;
  std::uint32_t field_power = 0; // exponent of Frobenius, applied first
};

inline SemilinearMap compose(const Field &F, const SemilinearMap &m1,
                             const SemilinearMap &m2) {
  return {mat_mul(F, mat_frobenius(F, m1.matrix, m2.field_power), m2.matrix),
          (m1.field_power + m2.field_power) % F.f()};
}

inline std::vector<std::uint32_t>
apply_semilinear(const Field &F, const SemilinearMap &m,
                 const std::vector<std::uint32_t> &v) {
  std::uint32_t d = m.matrix.d;
  std::vector<std::uint32_t> out(d, 0);
  for (std::uint32_t j = 0; j < d; ++j) {
    std::uint32_t s = 0;
    for (std::uint32_t i = 0; i < d; ++i)
      s = F.add(s, F.mul(F.frobenius(v[i], m.field_power), m.matrix.at(i, j)));
    out[j] = s;
  }
  return out;
}

/// A group between SL_d(q) and ΓL_d(q): transvection generators, an optional
/// diagonal generator diag(ω^u, 1, …) for the determinant subgroup ⟨ω^u⟩,
/// and optionally the Frobenius map.
struct LinearGroupSpec {
  std::uint32_t d;
  Field field;
  std::vector<SemilinearMap> generators;
};

inline LinearGroupSpec semilinear_group(std::uint32_t d, std::uint32_t p,
                                        std::uint32_t f,
                                        bool include_field_autos,
                                        std::uint32_t det_subgroup_index = 1) {
  if (d < 2)
    throw std::invalid_argument("semilinear_group: d must be at least 2");
  Field F(p, f);
  std::uint32_t units = F.q() - 1;
  if (det_subgroup_index == 0 || units % det_subgroup_index != 0)
    throw std::invalid_argument(
        "semilinear_group: determinant index must divide q-1");

  LinearGroupSpec spec{d, F, {}};
  // Transvections over an F_p-basis of F_q, so they generate all of SL_d(q)
  // and not merely the subgroup over the prime field.
  for (std::uint32_t i = 0; i < d; ++i)
    for (std::uint32_t j = 0; j < d; ++j) {
      if (i == j)
        continue;
      for (std::uint32_t e = 0; e < f; ++e) {
        Matrix t = identity_matrix(d);
        t.at(i, j) = F.pow(F.generator(), e);
        spec.generators.push_back({t, 0});
      }
    }
  if (det_subgroup_index < units) {
    Matrix diag = identity_matrix(d);
    diag.at(0, 0) = F.pow(F.generator(), det_subgroup_index);
    spec.generators.push_back({diag, 0});
  }
  if (include_field_autos && f > 1)
    spec.generators.push_back({identity_matrix(d), 1});
  return spec;
}

// ---------------------------------------------------------------------------
// Actions. Vectors are enumerated lexicographically by coordinate with the
// field ordered 0 first, then by discrete log; orbit blocks of the scalar
// subgroup C = ⟨ω^r⟩ are labeled by their least member.
// ---------------------------------------------------------------------------

class VectorAction {
public:
  VectorAction(const Field &F, std::uint32_t d) : F_(F), d_(d) {
    std::vector<std::vector<std::uint32_t>> vecs;
    std::vector<std::uint32_t> v(d, 0);
    while (true) {
      std::uint32_t pos = d;
      while (pos > 0) {
        --pos;
        v[pos] = next_element(v[pos]);
        if (v[pos] != 0)
          break;
      }
      if (pos == 0 && v[0] == 0)
        break;
      vecs.push_back(v);
    }
    std::sort(vecs.begin(), vecs.end(),
              [&](const auto &x, const auto &y) { return key(x) < key(y); });
    vectors_ = std::move(vecs);
    for (std::uint32_t i = 0; i < vectors_.size(); ++i)
      index_[vectors_[i]] = i;
  }

  std::uint32_t degree() const {
    return static_cast<std::uint32_t>(vectors_.size());
  }
  std::uint32_t dim() const { return d_; }
  const std::vector<std::uint32_t> &vector_at(std::uint32_t i) const {
    return vectors_[i];
  }
  std::uint32_t index_of(const std::vector<std::uint32_t> &v) const {
    return index_.at(v);
  }

  Perm perm_of(const SemilinearMap &m) const {
    std::vector<Point> images(vectors_.size());
    for (std::uint32_t i = 0; i < vectors_.size(); ++i)
      images[i] = index_.at(apply_semilinear(F_, m, vectors_[i]));
    return Perm(std::move(images));
  }

  PermGroup group(const std::vector<SemilinearMap> &gens) const {
    std::vector<Perm> perms;
    for (const auto &m : gens)
      perms.push_back(perm_of(m));
    return PermGroup(degree(), perms);
  }

private:
  /// Successor in the 0-first discrete-log order; wraps back to 0.
  std::uint32_t next_element(std::uint32_t a) const {
    if (a == 0)
      return 1; // ω^0
    std::uint32_t l = F_.log(a);
    return l + 2 == F_.q() ? 0 : F_.exp(l + 1);
  }

  std::vector<std::uint32_t> key(const std::vector<std::uint32_t> &v) const {
    std::vector<std::uint32_t> k(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      k[i] = F_.order_key(v[i]);
    return k;
  }

  Field F_;
  std::uint32_t d_;
  std::vector<std::vector<std::uint32_t>> vectors_;
  std::map<std::vector<std::uint32_t>, std::uint32_t> index_;
};

inline PermGroup action_on_nonzero_vectors(const LinearGroupSpec &spec) {
  return VectorAction(spec.field, spec.d).group(spec.generators);
}

class COrbitAction {
public:
  COrbitAction(const Field &F, std::uint32_t d, std::uint32_t r)
      : F_(F), vectors_(F, d) {
    if (r == 0 || (F.q() - 1) % r != 0)
      throw std::invalid_argument("COrbitAction: r must divide q-1");
    std::uint32_t n = vectors_.degree();
    block_of_.assign(n, n);
    std::uint32_t scalar = F_.pow(F_.generator(), r); // generates C
    std::uint32_t c_order = (F_.q() - 1) / r;

    // Collect orbits of v ↦ scalar·v; the least member labels the block.
    std::vector<std::vector<std::uint32_t>> labels;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (block_of_[i] != n)
        continue;
      std::uint32_t label = static_cast<std::uint32_t>(labels.size());
      std::uint32_t cur = i, count = 0;
      while (block_of_[cur] == n) {
        block_of_[cur] = label;
        cur = vectors_.index_of(scale(vectors_.vector_at(cur), scalar));
        ++count;
      }
      if (count != c_order)
        throw std::logic_error("COrbitAction: unexpected orbit length");
      labels.push_back(vectors_.vector_at(i)); // i is least: scan order
    }
    block_labels_ = std::move(labels);
  }

  std::uint32_t degree() const {
    return static_cast<std::uint32_t>(block_labels_.size());
  }
  const std::vector<std::uint32_t> &label_at(std::uint32_t b) const {
    return block_labels_[b];
  }

  /// Induced permutation on blocks; verifies the map permutes blocks.
  Perm perm_of(const SemilinearMap &m) const {
    Perm vec_perm = vectors_.perm_of(m);
    std::uint32_t nb = degree();
    std::vector<Point> images(nb, nb);
    for (std::uint32_t v = 0; v < vectors_.degree(); ++v) {
      std::uint32_t from = block_of_[v];
      std::uint32_t to = block_of_[vec_perm[v]];
      if (images[from] == nb)
        images[from] = to;
      else if (images[from] != to)
        throw std::logic_error("COrbitAction: map does not permute blocks");
    }
    return Perm(std::move(images));
  }

  PermGroup group(const std::vector<SemilinearMap> &gens) const {
    std::vector<Perm> perms;
    for (const auto &m : gens)
      perms.push_back(perm_of(m));
    return PermGroup(degree(), perms);
  }

  /// The permutation induced by the scalar ω (generates the image of all
  /// scalars, a cyclic group of order r).
  Perm scalar_image() const {
    return perm_of({scalar_matrix(vectors_.dim(), F_.generator()), 0});
  }

private:
  std::vector<std::uint32_t> scale(const std::vector<std::uint32_t> &v,
                                   std::uint32_t s) const {
    std::vector<std::uint32_t> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      out[i] = F_.mul(v[i], s);
    return out;
  }

  Field F_;
  VectorAction vectors_;
  std::vector<std::uint32_t> block_of_;
  std::vector<std::vector<std::uint32_t>> block_labels_;
};

inline PermGroup action_on_c_orbits(const LinearGroupSpec &spec,
                                    std::uint32_t r) {
  return COrbitAction(spec.field, spec.d, r).group(spec.generators);
}

} // namespace semiprim
