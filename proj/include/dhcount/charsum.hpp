#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "dhcount/cycvalue.hpp"
#include "dhcount/ffield.hpp"

namespace dhcount {

/// Multiplicative and additive characters of F_q together with Gauss and
/// Jacobi sums, evaluated as complex numbers.
///
/// Characters are indexed by exponents of T, the generator of the character
/// group with T(g) = exp(2 pi i / (q-1)) for the field's generator g. Any
/// integer exponent is accepted and reduced mod q-1; j = 0 is the trivial
/// character. Every character, trivial included, vanishes at 0. The additive
/// character is theta(x) = exp(2 pi i Tr(x) / p).
class CharSums {
 public:
  explicit CharSums(FieldCtx field, mpfr_prec_t bits = CycValue::kMinPrecBits);

  CharSums(const CharSums&) = delete;
  CharSums& operator=(const CharSums&) = delete;

  const FieldCtx& field() const { return field_; }
  mpfr_prec_t prec_bits() const { return bits_; }
  std::uint32_t order() const { return field_.q() - 1; }

  /// exp(2 pi i k / (q-1))
  const CycValue& zeta(std::int64_t k) const;
  /// T^j(x)
  CycValue mult_char(std::int64_t j, FieldElement x) const;
  /// theta(x)
  CycValue additive_char(FieldElement x) const;
  /// The exponent e in [0, q-2] with T^j(x) = zeta^e, for x != 0.
  std::uint32_t char_exponent(std::int64_t j, FieldElement x) const;

  /// g(T^j), memoized per j.
  CycValue gauss(std::int64_t j) const;

  /// J(T^{j_1}, ..., T^{j_k}) by direct summation over t_1 + ... + t_k = 1.
  CycValue jacobi(std::span<const std::int64_t> js) const;
  /// The generalized sum over t_1 + ... + t_k = 0.
  CycValue jacobi_zero(std::span<const std::int64_t> js) const;
  /// The generalized sum over t_1 + ... + t_k = alpha.
  CycValue jacobi_alpha(std::span<const std::int64_t> js, FieldElement alpha) const;
  /// J via Gauss sums: prod g / g(prod) when the product character is
  /// nontrivial, -prod g / q when it is trivial, and the closed form
  /// [(q-1)^k + (-1)^{k+1}] / q when all characters are trivial.
  CycValue jacobi_via_gauss(std::span<const std::int64_t> js) const;

  /// Integer counts c[e] such that the direct sum equals sum_e c[e] zeta^e.
  std::vector<std::int64_t> jacobi_histogram(std::span<const std::int64_t> js,
                                             FieldElement alpha) const;
  CycValue from_histogram(std::span<const std::int64_t> hist) const;

 private:
  std::uint32_t reduce(std::int64_t j) const;
  CycValue compute_gauss(std::uint32_t j) const;

  FieldCtx field_;
  mpfr_prec_t bits_;
  std::vector<CycValue> zeta_qm1_;
  std::vector<CycValue> zeta_p_;
  std::vector<std::uint32_t> trace_of_power_;  // k -> Tr(g^k)

  mutable std::mutex memo_mutex_;
  mutable std::vector<std::optional<CycValue>> gauss_memo_;
};

}  // namespace dhcount
