#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "semiprim/group_io.hpp"
#include "semiprim/perm.hpp"
#include "semiprim/perm_group.hpp"

/**
 * @file cayley.hpp
 * @brief Finite groups as explicit multiplication tables over {0..n-1} with
 *        0 the identity: exhaustive axiom validation, structural queries
 *        (orders, center, classes, commutator/Frattini subgroups), the
 *        regular permutation representation, and `.tbl` file IO.
 */

namespace semiprim {

class CayleyTable {
public:
  static constexpr std::uint32_t kMaxOrder = 512;

  explicit CayleyTable(std::vector<std::vector<std::uint32_t>> table)
      : table_(std::move(table)) {
    n_ = static_cast<std::uint32_t>(table_.size());
    if (n_ == 0)
      throw std::invalid_argument("CayleyTable: empty table");
    if (n_ > kMaxOrder)
      throw std::invalid_argument("CayleyTable: order exceeds cap");
    for (const auto &row : table_) {
      if (row.size() != n_)
        throw std::invalid_argument("CayleyTable: table is not square");
      for (std::uint32_t v : row)
        if (v >= n_)
          throw std::invalid_argument("CayleyTable: entry out of range");
    }
    validate_axioms();
    compute_element_orders();
  }

  std::uint32_t order() const { return n_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return table_[a][b];
  }
  std::uint32_t inv(std::uint32_t a) const { return inverse_[a]; }
  std::uint32_t element_order(std::uint32_t a) const {
    return element_order_[a];
  }

  std::uint32_t power(std::uint32_t a, std::uint32_t k) const {
    std::uint32_t acc = 0;
    for (std::uint32_t i = 0; i < k; ++i)
      acc = mul(acc, a);
    return acc;
  }

  std::uint32_t conjugate(std::uint32_t a, std::uint32_t by) const {
    return mul(inv(by), mul(a, by));
  }

  std::uint32_t commutator(std::uint32_t a, std::uint32_t b) const {
    return mul(inv(mul(b, a)), mul(a, b));
  }

  bool is_abelian() const {
    for (std::uint32_t a = 0; a < n_; ++a)
      for (std::uint32_t b = a + 1; b < n_; ++b)
        if (mul(a, b) != mul(b, a))
          return false;
    return true;
  }

  /// Sorted list of central elements.
  std::vector<std::uint32_t> center() const {
    std::vector<std::uint32_t> z;
    for (std::uint32_t a = 0; a < n_; ++a) {
      bool central = true;
      for (std::uint32_t b = 0; b < n_ && central; ++b)
        central = mul(a, b) == mul(b, a);
      if (central)
        z.push_back(a);
    }
    return z;
  }

  /// Size of the conjugacy class of each element.
  std::vector<std::uint32_t> conjugacy_class_sizes() const {
    std::vector<std::uint32_t> sizes(n_, 0);
    for (std::uint32_t a = 0; a < n_; ++a) {
      std::vector<bool> seen(n_, false);
      std::uint32_t count = 0;
      for (std::uint32_t b = 0; b < n_; ++b) {
        std::uint32_t c = conjugate(a, b);
        if (!seen[c]) {
          seen[c] = true;
          ++count;
        }
      }
      sizes[a] = count;
    }
    return sizes;
  }

  /// Closure of a subset (plus identity) under multiplication, sorted.
  std::vector<std::uint32_t>
  subgroup_closure(std::vector<std::uint32_t> seed) const {
    std::vector<bool> in(n_, false);
    std::vector<std::uint32_t> elems{0};
    in[0] = true;
    for (std::uint32_t s : seed)
      if (!in[s]) {
        in[s] = true;
        elems.push_back(s);
      }
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = 0; j < elems.size(); ++j) {
        std::uint32_t p = mul(elems[i], elems[j]);
        if (!in[p]) {
          in[p] = true;
          elems.push_back(p);
        }
      }
    std::sort(elems.begin(), elems.end());
    return elems;
  }

  /// Greedy deterministic generating set: repeatedly adjoin the least
  /// element outside the subgroup generated so far.
  std::vector<std::uint32_t> small_generating_set() const {
    std::vector<std::uint32_t> gens;
    std::vector<std::uint32_t> span{0};
    while (span.size() < n_) {
      std::uint32_t next = 0;
      while (std::binary_search(span.begin(), span.end(), next))
        ++next;
      gens.push_back(next);
      span = subgroup_closure(gens);
    }
    return gens;
  }

  /// Commutator subgroup [G,G] as a sorted element list.
  std::vector<std::uint32_t> commutator_subgroup() const {
    std::vector<std::uint32_t> seed;
    for (std::uint32_t a = 0; a < n_; ++a)
      for (std::uint32_t b = 0; b < n_; ++b)
        seed.push_back(commutator(a, b));
    return subgroup_closure(seed);
  }

  /// Frattini subgroup of a p-group: the closure of p-th powers and
  /// commutators. Throws if the order is not a prime power.
  std::vector<std::uint32_t> frattini_subgroup() const {
    std::uint32_t p = least_prime_factor(n_);
    for (std::uint32_t m = n_; m > 1; m /= p)
      if (m % p != 0)
        throw std::logic_error("frattini_subgroup: order not a prime power");
    std::vector<std::uint32_t> seed;
    for (std::uint32_t a = 0; a < n_; ++a) {
      seed.push_back(power(a, p));
      for (std::uint32_t b = 0; b < n_; ++b)
        seed.push_back(commutator(a, b));
    }
    return subgroup_closure(seed);
  }

  /// Least k ≥ 1 with a^k in the subgroup `sub` (sorted element list).
  std::uint32_t order_modulo(std::uint32_t a,
                             const std::vector<std::uint32_t> &sub) const {
    std::uint32_t acc = a;
    for (std::uint32_t k = 1;; ++k) {
      if (std::binary_search(sub.begin(), sub.end(), acc))
        return k;
      acc = mul(acc, a);
    }
  }

  /// Right translation x ↦ x·a as a permutation of {0..n-1}.
  Perm right_translation(std::uint32_t a) const {
    std::vector<Point> images(n_);
    for (std::uint32_t x = 0; x < n_; ++x)
      images[x] = mul(x, a);
    return Perm(std::move(images));
  }

  /// The regular representation, generated by translations of a small
  /// generating set.
  PermGroup regular_representation() const {
    std::vector<Perm> gens;
    for (std::uint32_t g : small_generating_set())
      gens.push_back(right_translation(g));
    if (gens.empty())
      return PermGroup(n_);
    return PermGroup(n_, gens);
  }

  const std::vector<std::vector<std::uint32_t>> &rows() const {
    return table_;
  }

private:
  static std::uint32_t least_prime_factor(std::uint32_t n) {
    for (std::uint32_t d = 2; d * d <= n; ++d)
      if (n % d == 0)
        return d;
    return n;
  }

  void validate_axioms() const {
    for (std::uint32_t a = 0; a < n_; ++a)
      if (table_[0][a] != a || table_[a][0] != a)
        throw std::invalid_argument("CayleyTable: 0 is not an identity");
    // Latin square: rows and columns are permutations.
    for (std::uint32_t a = 0; a < n_; ++a) {
      std::vector<bool> row(n_, false), col(n_, false);
      for (std::uint32_t b = 0; b < n_; ++b) {
        if (row[table_[a][b]] || col[table_[b][a]])
          throw std::invalid_argument("CayleyTable: not a Latin square");
        row[table_[a][b]] = col[table_[b][a]] = true;
      }
    }
    for (std::uint32_t a = 0; a < n_; ++a)
      for (std::uint32_t b = 0; b < n_; ++b)
        for (std::uint32_t c = 0; c < n_; ++c)
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
            throw std::invalid_argument("CayleyTable: not associative");
  }

  void compute_element_orders() {
    inverse_.assign(n_, 0);
    element_order_.assign(n_, 1);
    for (std::uint32_t a = 0; a < n_; ++a) {
      std::uint32_t prev = 0, acc = a, k = 1;
      while (acc != 0) {
        prev = acc;
        acc = table_[acc][a];
        ++k;
      }
      element_order_[a] = a == 0 ? 1 : k;
      inverse_[a] = prev; // a^{order-1}; stays 0 for the identity
    }
  }

  std::uint32_t n_ = 0;
  std::vector<std::vector<std::uint32_t>> table_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> element_order_;
};

// ---------------------------------------------------------------------------
// .tbl file format: first significant line `order N`, then N rows of N
// integers over {0..N-1}. '#' comments and blank lines are ignored.
// ---------------------------------------------------------------------------

inline CayleyTable read_table_stream(std::istream &in,
                                     const std::string &source) {
  std::string line;
  std::size_t line_no = 0;
  std::uint64_t n = 0;
  bool have_header = false;
  std::vector<std::vector<std::uint32_t>> rows;

  while (std::getline(in, line)) {
    ++line_no;
    if (detail::is_comment_or_blank(line))
      continue;
    std::istringstream fields(line);
    if (!have_header) {
      std::string keyword;
      fields >> keyword;
      if (keyword != "order")
        throw ParseError(source, line_no, "expected 'order N' header");
      if (!(fields >> n) || n == 0 || n > CayleyTable::kMaxOrder)
        throw ParseError(source, line_no, "invalid table order");
      std::string rest;
      if (fields >> rest)
        throw ParseError(source, line_no, "trailing tokens after header");
      have_header = true;
      continue;
    }
    if (rows.size() == n)
      throw ParseError(source, line_no, "unexpected extra row");
    std::vector<std::uint32_t> row;
    std::uint64_t v;
    while (fields >> v) {
      if (v >= n)
        throw ParseError(source, line_no, "entry out of range");
      row.push_back(static_cast<std::uint32_t>(v));
    }
    if (!fields.eof())
      throw ParseError(source, line_no, "non-integer token in row");
    if (row.size() != n)
      throw ParseError(source, line_no, "wrong number of entries in row");
    rows.push_back(std::move(row));
  }
  if (!have_header)
    throw ParseError(source, 0, "missing 'order N' header");
  if (rows.size() != n)
    throw ParseError(source, line_no, "fewer rows than declared order");
  return CayleyTable(std::move(rows));
}

inline CayleyTable read_table_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open table file: " + path);
  return read_table_stream(in, path);
}

inline void write_table_stream(std::ostream &out, const CayleyTable &t) {
  out << "order " << t.order() << "\n";
  for (const auto &row : t.rows()) {
    for (std::size_t j = 0; j < row.size(); ++j)
      out << (j ? " " : "") << row[j];
    out << "\n";
  }
}

inline void write_table_file(const std::string &path, const CayleyTable &t) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot open table file for writing: " + path);
  write_table_stream(out, t);
}

} // namespace semiprim
