#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dhcount/ffield.hpp"

namespace dhcount {

/// The hypersurface x_1^d + ... + x_n^d - d lambda x_1^{h_1} ... x_n^{h_n} = 0
/// over F_q, with d = h_1 + ... + h_n, gcd(h) = 1 and t = gcd(d, q-1).
struct DeformParams {
  FieldCtx field;
  std::vector<std::uint32_t> h;
  FieldElement lambda;
  std::uint32_t n = 0;
  std::uint32_t d = 0;
  std::uint32_t t = 1;

  /// Validates h (length >= 2, entries >= 1, gcd 1) and derives n, d, t.
  static DeformParams make(FieldCtx field, std::vector<std::uint32_t> h, FieldElement lambda);
  /// The Dwork member: h = (1, ..., 1), d = n.
  static DeformParams dwork(FieldCtx field, std::uint32_t n, FieldElement lambda);

  DeformParams with_lambda(FieldElement l) const;

  bool is_dwork() const;
  /// (q-1)/t
  std::uint32_t step() const { return (field.q() - 1) / t; }
  /// d lambda as an element of F_q (zero when p | d).
  FieldElement deformation_coefficient() const;
  /// lambda^d h_1^{h_1} ... h_n^{h_n}
  FieldElement hypergeometric_argument() const;
  /// p divides d h_1 ... h_n
  bool p_divides_dh() const;
  /// (q^{n-1} - 1)/(q - 1), the hyperplane count.
  std::int64_t hyperplane_count() const;
  /// (q^n - 1)/(q - 1), the size of P^{n-1}(F_q).
  std::uint64_t projective_size() const;

  std::string describe() const;
};

}  // namespace dhcount
