#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <vector>

/**
 * @file field.hpp
 * @brief Exact arithmetic in GF(p^f). Elements are integers 0..q-1 encoding
 *        polynomial coefficient vectors in base p against a fixed primitive
 *        modulus; multiplication runs on exp/log tables, addition digit-wise.
 */

namespace semiprim {

class Field {
public:
  Field(std::uint32_t p, std::uint32_t f) : p_(p), f_(f) {
    if (!is_prime(p))
      throw std::invalid_argument("Field: characteristic must be prime");
    if (f == 0)
      throw std::invalid_argument("Field: extension degree must be positive");
    std::uint64_t size = 1;
    for (std::uint32_t i = 0; i < f; ++i) {
      size *= p;
      if (size > (1u << 20))
        throw std::invalid_argument("Field: q exceeds 2^20");
    }
    q_ = static_cast<std::uint32_t>(size);
    high_ = q_ / p_; // p^{f-1}
    find_primitive_modulus();
    log_.assign(q_, 0);
    for (std::uint32_t k = 0; k + 1 < q_; ++k)
      log_[exp_[k]] = k;
  }

  std::uint32_t p() const { return p_; }
  std::uint32_t f() const { return f_; }
  std::uint32_t q() const { return q_; }

  /// Encoding of the non-leading coefficients of the modulus x^f + m(x).
  std::uint32_t modulus_low() const { return modulus_low_; }

  /// The fixed primitive element (the residue of x).
  std::uint32_t generator() const { return q_ == 2 ? 1 : exp_[1]; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    check(a);
    check(b);
    std::uint32_t out = 0, place = 1;
    for (std::uint32_t i = 0; i < f_; ++i) {
      out += ((a % p_) + (b % p_)) % p_ * place;
      a /= p_;
      b /= p_;
      place *= p_;
    }
    return out;
  }

  std::uint32_t neg(std::uint32_t a) const {
    check(a);
    std::uint32_t out = 0, place = 1;
    for (std::uint32_t i = 0; i < f_; ++i) {
      out += (p_ - (a % p_)) % p_ * place;
      a /= p_;
      place *= p_;
    }
    return out;
  }

  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return add(a, neg(b));
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    check(a);
    check(b);
    if (a == 0 || b == 0)
      return 0;
    return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (q_ - 1)];
  }

  std::uint32_t inv(std::uint32_t a) const {
    check(a);
    if (a == 0)
      throw std::domain_error("Field: inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t n) const {
    check(a);
    if (a == 0)
      return n == 0 ? 1 : 0;
    std::uint64_t e = (static_cast<std::uint64_t>(log_[a]) * (n % (q_ - 1))) %
                      (q_ - 1);
    return exp_[e];
  }

  /// x ↦ x^{p^e}, the e-th power of the Frobenius automorphism.
  std::uint32_t frobenius(std::uint32_t a, std::uint32_t e = 1) const {
    check(a);
    if (a == 0)
      return 0;
    std::uint64_t pe = 1;
    for (std::uint32_t i = 0; i < e % f_; ++i)
      pe = (pe * p_) % (q_ - 1 == 0 ? 1 : q_ - 1);
    if (q_ == 2)
      return a;
    return exp_[(static_cast<std::uint64_t>(log_[a]) * pe) % (q_ - 1)];
  }

  /// Discrete log of a nonzero element w.r.t. the fixed generator.
  std::uint32_t log(std::uint32_t a) const {
    check(a);
    if (a == 0)
      throw std::domain_error("Field: log of zero");
    return log_[a];
  }

  std::uint32_t exp(std::uint64_t k) const {
    return q_ == 2 ? 1 : exp_[k % (q_ - 1)];
  }

  /// Ordering key placing 0 first and nonzero elements by discrete log.
  std::uint32_t order_key(std::uint32_t a) const {
    check(a);
    return a == 0 ? 0 : 1 + log_[a];
  }

  static bool is_prime(std::uint32_t n) {
    if (n < 2)
      return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
      if (n % d == 0)
        return false;
    return true;
  }

private:
  void check(std::uint32_t a) const { assert(a < q_); (void)a; }

  /// Digit-wise a - t*b over the coefficient vectors.
  std::uint32_t sub_scaled(std::uint32_t a, std::uint32_t b,
                           std::uint32_t t) const {
    std::uint32_t out = 0, place = 1;
    for (std::uint32_t i = 0; i < f_; ++i) {
      std::uint32_t digit = static_cast<std::uint32_t>(
          ((a % p_) + p_ - static_cast<std::uint64_t>(b % p_) * t % p_) % p_);
      out += digit * place;
      a /= p_;
      b /= p_;
      place *= p_;
    }
    return out;
  }

  /// Multiply a field element by x modulo x^f + m(x).
  std::uint32_t times_x(std::uint32_t a, std::uint32_t modulus) const {
    std::uint32_t top = a / high_;
    std::uint32_t shifted = (a % high_) * p_;
    return sub_scaled(shifted, modulus, top);
  }

  /// Scan monic polynomials x^f + m(x) in ascending integer encoding of m
  /// and keep the first whose residue class of x has multiplicative order
  /// exactly q-1; that makes the quotient a field and x a generator.
  void find_primitive_modulus() {
    for (std::uint32_t m = 0; m < q_; ++m) {
      std::vector<std::uint32_t> powers;
      powers.reserve(q_);
      std::uint32_t v = 1;
      bool primitive = true;
      for (std::uint32_t k = 1; k + 1 < q_; ++k) {
        v = times_x(v, m);
        if (v == 1) {
          primitive = false;
          break;
        }
        powers.push_back(v);
      }
      if (!primitive)
        continue;
      v = times_x(v, m);
      if (v != 1)
        continue;
      modulus_low_ = m;
      exp_.assign(1, 1);
      exp_.insert(exp_.end(), powers.begin(), powers.end());
      assert(exp_.size() == q_ - 1);
      return;
    }
    throw std::logic_error("Field: no primitive modulus found");
  }

  std::uint32_t p_, f_, q_, high_ = 0;
  std::uint32_t modulus_low_ = 0;
  std::vector<std::uint32_t> exp_, log_;
};

} // namespace semiprim
