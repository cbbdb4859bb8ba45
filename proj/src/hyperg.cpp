#include "dhcount/hyperg.hpp"

#include <numeric>
#include <stdexcept>

#include "dhcount/errors.hpp"

namespace dhcount {

namespace {

std::int64_t floor_of(const Rational& x) {
  const std::int64_t n = x.numerator(), d = x.denominator();  // d > 0
  std::int64_t f = n / d;
  if (n % d != 0 && n < 0) --f;
  return f;
}

Rational frac(const Rational& x) { return x - Rational(floor_of(x)); }

}  // namespace

void validate(const PadicCtx& ctx, const GParams& params) {
  if (params.a.size() != params.b.size()) {
    throw InvalidInput("top and bottom parameter lists differ in length");
  }
  const std::int64_t p = ctx.p();
  for (const auto* list : {&params.a, &params.b}) {
    for (const auto& x : *list) {
      if (x.denominator() % p == 0) throw InvalidInput("parameter denominator divisible by p");
    }
  }
  if (params.lambda.code >= ctx.q()) throw InvalidInput("argument is not an element of F_q");
}

QqNumber g_summand(const PadicCtx& ctx, const GParams& params, std::uint32_t s) {
  const std::int64_t qm1 = ctx.q() - 1;
  if (s >= qm1) throw InvalidInput("summation index out of range");
  const QqNumber chi = ctx.teich_char(s, params.lambda);
  if (chi.is_exact_zero()) return chi;

  QqNumber num = ctx.one();
  QqNumber den = ctx.one();
  std::int64_t exponent = 0;
  const Rational shift(s, qm1);
  std::int64_t pk = 1;
  for (std::uint32_t k = 0; k < ctx.r(); ++k, pk *= ctx.p()) {
    const Rational sp = shift * pk;
    for (std::size_t i = 0; i < params.a.size(); ++i) {
      const Rational ap = frac(params.a[i] * pk);
      const Rational bp = frac(-params.b[i] * pk);
      num *= ctx.gamma(frac(params.a[i] * pk - sp));
      num *= ctx.gamma(frac(-params.b[i] * pk + sp));
      den *= ctx.gamma(ap);
      den *= ctx.gamma(bp);
      exponent -= floor_of(ap - sp) + floor_of(bp + sp);
    }
  }
  QqNumber term = num / den * ctx.neg_p_power(exponent) * chi;
  if ((static_cast<std::uint64_t>(s) * params.m()) % 2 == 1) term = -term;
  return term;
}

QqNumber evaluate_g(const PadicCtx& ctx, const GParams& params) {
  validate(ctx, params);
  if (params.lambda.is_zero()) return ctx.zero();
  QqNumber sum = ctx.zero();
  for (std::uint32_t s = 0; s + 1 < ctx.q(); ++s) sum += g_summand(ctx, params, s);
  return -sum / ctx.from_int(ctx.q() - 1);
}

GParams build_main_params(const DeformParams& dp, const WeightVector& w, MainVariant variant) {
  if (dp.p_divides_dh()) throw PreconditionError("p divides d * h_1 * ... * h_n");
  if (w.t != dp.t || !is_weight_vector(w, dp.n)) throw InvalidInput("invalid weight vector");
  std::vector<Rational> wline;
  for (std::size_t i = 0; i < dp.n; ++i) {
    const std::int64_t hi = dp.h[i];
    for (std::int64_t b = 0; b < hi; ++b) {
      wline.push_back(Rational(w[i], static_cast<std::int64_t>(dp.t) * hi) + Rational(b, hi));
    }
  }
  std::vector<Rational> dline{Rational(1)};
  for (std::uint32_t k = 1; k < dp.d; ++k) dline.emplace_back(k, dp.d);

  const FieldElement z = dp.hypergeometric_argument();
  if (variant == MainVariant::kMain) {
    return {std::move(wline), std::move(dline), z.is_zero() ? z : dp.field.inv(z)};
  }
  return {std::move(dline), std::move(wline), z};
}

GParams build_gcd1_params(const DeformParams& dp) {
  if (dp.p_divides_dh()) throw PreconditionError("p divides d * h_1 * ... * h_n");
  if (dp.t != 1) throw PreconditionError("gcd(d, q-1) must be 1");
  std::vector<Rational> top;
  for (std::uint32_t k = 1; k < dp.d; ++k) top.emplace_back(k, dp.d);
  std::vector<Rational> bottom;
  bool dropped = false;
  for (auto hi : dp.h) {
    for (std::uint32_t b = 0; b < hi; ++b) {
      if (b == 0 && !dropped) {
        dropped = true;
        continue;
      }
      bottom.emplace_back(b, hi);
    }
  }
  return {std::move(top), std::move(bottom), dp.hypergeometric_argument()};
}

GParams build_dwork_params(const FieldCtx& field, const DworkProfile& profile, FieldElement lambda) {
  if (profile.top.size() != profile.bottom.size()) {
    throw InvalidInput("Dwork parameter lists differ in length");
  }
  return {profile.top, profile.bottom, field.pow(lambda, profile.n)};
}

std::int64_t c_exponent(const PadicCtx& ctx, const WeightVector& w, int sign) {
  const WeightVector v = sign < 0 ? w.negated() : w;
  Rational total(0);
  std::int64_t pa = 1;
  for (std::uint32_t a = 0; a < ctx.r(); ++a, pa *= ctx.p()) {
    for (auto wi : v.w) total += frac(Rational(wi, v.t) * pa);
  }
  if (total.denominator() != 1) throw std::logic_error("C(w) exponent is not an integer");
  return total.numerator();
}

QqNumber c_factor(const PadicCtx& ctx, const WeightVector& w, int sign) {
  const WeightVector v = sign < 0 ? w.negated() : w;
  QqNumber prod = ctx.one();
  std::int64_t pa = 1;
  for (std::uint32_t a = 0; a < ctx.r(); ++a, pa *= ctx.p()) {
    for (auto wi : v.w) prod *= ctx.gamma(frac(Rational(wi, v.t) * pa));
  }
  return prod * ctx.neg_p_power(c_exponent(ctx, w, sign));
}

}  // namespace dhcount
