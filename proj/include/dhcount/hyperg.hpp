#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "dhcount/deform.hpp"
#include "dhcount/padic.hpp"
#include "dhcount/wlattice.hpp"

namespace dhcount {

/// Parameters of the p-adic hypergeometric function mGm: top line a,
/// bottom line b (equal lengths m) and an argument in F_q.
struct GParams {
  std::vector<Rational> a;
  std::vector<Rational> b;
  FieldElement lambda;

  std::size_t m() const { return a.size(); }
};

/// Which form of the main count: the inverted argument with C(w), or the
/// exchanged lines with C(-w) and the plain argument.
enum class MainVariant { kMain, kSwapped };

/// Throws InvalidInput if the lists differ in length or a denominator is
/// divisible by p.
void validate(const PadicCtx& ctx, const GParams& params);

/// The summand of index s in [0, q-2], before the overall -1/(q-1).
QqNumber g_summand(const PadicCtx& ctx, const GParams& params, std::uint32_t s);

/// mGm(a; b | lambda) modulo p^N. Zero when lambda = 0.
QqNumber evaluate_g(const PadicCtx& ctx, const GParams& params);

/// Parameters attached to the class of w in the main count. Throws
/// PreconditionError when p divides d h_1 ... h_n.
GParams build_main_params(const DeformParams& dp, const WeightVector& w,
                          MainVariant variant = MainVariant::kMain);

/// Parameters for the t = 1 count: top [1/d, ..., (d-1)/d], bottom the
/// b_i/h_i with one zero removed, argument lambda^d prod h_i^{h_i}.
GParams build_gcd1_params(const DeformParams& dp);

/// Dwork-case parameters: lines A_w, B_w, argument lambda^n.
GParams build_dwork_params(const FieldCtx& field, const DworkProfile& profile, FieldElement lambda);

/// C(sign * w) = prod_i prod_{a<r} Gamma_p(<(w_i/t) p^a>) (-p)^{<(w_i/t) p^a>}.
QqNumber c_factor(const PadicCtx& ctx, const WeightVector& w, int sign = 1);

/// Sum of the (-p)-exponents in C(sign * w); throws std::logic_error if
/// it is not an integer.
std::int64_t c_exponent(const PadicCtx& ctx, const WeightVector& w, int sign = 1);

}  // namespace dhcount
