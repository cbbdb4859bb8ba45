#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace dhcount {

/// An element of F_q stored as the base-p integer sum c_i p^i of its
/// coordinates in the power basis 1, x, ..., x^{r-1} of the field modulus.
struct FieldElement {
  std::uint32_t code = 0;

  constexpr bool is_zero() const { return code == 0; }
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

/// A concrete model of F_q, q = p^r, as F_p[x]/(f) with a full discrete
/// logarithm table relative to a fixed primitive element.
///
/// The canonical modulus is the first monic irreducible f of degree r when
/// the coefficient vectors (c_0, ..., c_{r-1}) are ordered lexicographically
/// with c_0 compared first. The canonical generator is the first element of
/// order q-1 in the same order. Copies share the lookup tables, and the
/// object is immutable after construction.
class FieldCtx {
 public:
  static constexpr std::uint64_t kDefaultMaxOrder = std::uint64_t{1} << 20;

  /// Builds F_{p^r}. Throws InvalidInput if p is not prime, r < 1 or
  /// p^r > max_order.
  static FieldCtx make(std::uint32_t p, std::uint32_t r,
                       std::uint64_t max_order = kDefaultMaxOrder);

  /// Same field and modulus, different primitive element. Throws
  /// InvalidInput if g does not have order q-1.
  FieldCtx with_generator(FieldElement g) const;

  /// The k-th primitive element (k = 0 is the canonical generator) in the
  /// canonical enumeration order.
  FieldElement primitive_element(std::size_t k) const;

  std::uint32_t p() const { return t_->p; }
  std::uint32_t r() const { return t_->r; }
  std::uint32_t q() const { return t_->q; }
  /// Monic modulus, coefficients c_0..c_r (c_r = 1).
  const std::vector<std::uint32_t>& modulus() const { return t_->modulus; }
  FieldElement generator() const { return t_->exp[t_->exp.size() > 1 ? 1 : 0]; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  /// Image of an integer under Z -> F_p -> F_q.
  FieldElement from_int(std::int64_t v) const;
  FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(FieldElement x) const;
  /// All q elements, ordered by code.
  std::vector<FieldElement> elements() const;

  FieldElement add(FieldElement x, FieldElement y) const;
  FieldElement sub(FieldElement x, FieldElement y) const;
  FieldElement neg(FieldElement x) const;
  FieldElement mul(FieldElement x, FieldElement y) const;
  FieldElement inv(FieldElement x) const;
  /// x^e for any integer e; 0^e = 0 for e > 0 and 0^0 = 1. Negative e
  /// requires x != 0.
  FieldElement pow(FieldElement x, std::int64_t e) const;
  FieldElement frobenius(FieldElement x) const { return pow(x, p()); }

  /// g^k, k taken mod q-1.
  FieldElement exp(std::int64_t k) const;
  /// The unique k in [0, q-2] with g^k = x. Throws std::domain_error on 0.
  std::uint32_t dlog(FieldElement x) const;
  /// Absolute trace to F_p, returned as an integer in [0, p).
  std::uint32_t trace(FieldElement x) const;

  friend bool operator==(const FieldCtx& a, const FieldCtx& b) {
    return a.t_ == b.t_;
  }

 private:
  struct Tables {
    std::uint32_t p = 0, r = 0, q = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<FieldElement> exp;    // k -> g^k, k in [0, q-2]
    std::vector<std::uint32_t> log;   // code -> k, log[0] unused
    std::vector<std::uint32_t> ptab;  // p^i, i in [0, r]
  };

  explicit FieldCtx(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
  static std::shared_ptr<const Tables> tabulate(std::uint32_t p, std::uint32_t r,
                                                std::vector<std::uint32_t> modulus,
                                                FieldElement generator);

  std::shared_ptr<const Tables> t_;
};

/// Deterministic trial-division primality test.
bool is_prime(std::uint64_t n);

/// Distinct prime factors of n, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace dhcount
