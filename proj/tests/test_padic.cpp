#include <doctest.h>

#include "dhcount/errors.hpp"
#include "dhcount/padic.hpp"
#include "support.hpp"

using namespace dhcount;

TEST_CASE("precision from the reconstruction bound") {
  CHECK(PadicCtx::minimal_digits(7, 57) == 3);
  CHECK(PadicCtx::make(FieldCtx::make(7, 1), 57)->digits() == 7);
  CHECK(PadicCtx::make(FieldCtx::make(3, 2), 820)->digits() == 11);
  CHECK_THROWS_AS(PadicCtx::make(FieldCtx::make(2, 2), 10), PreconditionError);
  CHECK_THROWS_AS(PadicCtx::with_precision(FieldCtx::make(13, 1), 40), InvalidInput);
}

TEST_CASE("arithmetic and valuations") {
  const auto ctx = PadicCtx::with_precision(FieldCtx::make(5, 1), 6);
  const QqNumber a = ctx->from_int(50);  // 2 * 5^2
  CHECK(a.valuation() == 2);
  CHECK(a.abs_precision() == 8);
  const QqNumber b = ctx->from_rational(Rational(1, 5));
  CHECK(b.valuation() == -1);
  CHECK(congruent(a * b, ctx->from_int(10), 6));
  CHECK(congruent(a / ctx->from_int(25), ctx->from_int(2), 6));
  CHECK(congruent(ctx->from_int(3) - ctx->from_int(3), ctx->zero(), 6));
  CHECK(ctx->zero().is_exact_zero());
  CHECK(congruent(ctx->neg_p_power(3), ctx->from_int(-125), 8));
  CHECK(congruent(ctx->from_int(7).pow(-1) * ctx->from_int(7), ctx->one(), 6));
  // Cancellation loses absolute precision only, never correctness.
  const QqNumber c = ctx->from_int(1 + 5 * 5 * 5) - ctx->one();
  CHECK(c.valuation() == 3);
  CHECK(congruent(c, ctx->from_int(125), 6));
}

TEST_CASE("arithmetic in Z_9") {
  const FieldCtx f = FieldCtx::make(3, 2);
  const auto ctx = PadicCtx::with_precision(f, 8);
  for (auto x : f.elements()) {
    if (x.is_zero()) continue;
    const QqNumber w = ctx->teichmuller(x);
    CHECK(congruent(w.pow(8), ctx->one(), 8));
    CHECK(congruent(w * (ctx->one() / w), ctx->one(), 8));
    CHECK(congruent(w * ctx->teichmuller(f.inv(x)), ctx->one(), 8));
  }
  const QqNumber g = ctx->teichmuller(f.generator());
  CHECK_FALSE(g.is_scalar());
}

TEST_CASE("Teichmueller lifts") {
  for (auto [p, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{7, 1}, {3, 2}, {13, 1}}) {
    const FieldCtx f = FieldCtx::make(p, r);
    const auto ctx = PadicCtx::with_precision(f, 6);
    CHECK(congruent(ctx->teichmuller(f.one()), ctx->one(), 6));
    CHECK(congruent(ctx->teichmuller(f.neg(f.one())), -ctx->one(), 6));
    CHECK(ctx->teichmuller(f.zero()).is_exact_zero());
    for (auto x : f.elements()) {
      if (x.is_zero()) continue;
      const QqNumber w = ctx->teichmuller(x);
      CHECK(congruent(w.pow(f.q() - 1), ctx->one(), 6));
      // omega(x) reduces to x.
      const auto c = f.coeffs(x);
      for (std::size_t i = 0; i < c.size(); ++i) CHECK(w.unit()[i] % p == c[i]);
      CHECK(congruent(ctx->teich_char(0, x), ctx->one(), 6));
      CHECK(congruent(ctx->teich_char(3, x) * ctx->teich_char(-3, x), ctx->one(), 6));
      CHECK(congruent(ctx->teich_char(1, x) * w, ctx->one(), 6));
    }
    CHECK(ctx->teich_char(2, f.zero()).is_exact_zero());
  }
}

TEST_CASE("Gamma_p values") {
  const auto ctx = PadicCtx::with_precision(FieldCtx::make(5, 1), 6);
  const std::uint64_t m = ctx->modulus();
  CHECK(ctx->gamma_residue(0) == 1);
  CHECK(ctx->gamma_residue(1) == m - 1);
  CHECK(ctx->gamma_residue(3) == m - 2);
  CHECK(congruent(ctx->gamma(Rational(0)), ctx->one(), 6));
  CHECK_THROWS_AS(ctx->gamma(Rational(1, 5)), InvalidInput);
  // Gamma_p(x + 1) = -x Gamma_p(x) for units x, and -Gamma_p(x) otherwise.
  for (std::int64_t k = 1; k < 8; ++k) {
    const Rational x(k, 8);
    const QqNumber factor = (k % 5 == 0) ? ctx->one() : ctx->from_rational(x);
    CHECK(congruent(ctx->gamma(x + Rational(1)), -factor * ctx->gamma(x), 6));
  }
}

TEST_CASE("Gamma_p agrees with the defining product") {
  std::mt19937_64 rng(11);
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, int>>{{3, 7}, {5, 5}, {7, 4}, {13, 3}}) {
    const auto ctx = PadicCtx::with_precision(FieldCtx::make(p, 1), n);
    const auto t = testing::check_gamma_naive(*ctx, ctx->modulus());
    INFO(t.first_failure);
    CHECK(t.ok());
    const auto c = testing::check_gamma_continuity(*ctx, 200, rng);
    CHECK(c.ok());
  }
}

TEST_CASE("Gross-Koblitz consequences") {
  for (auto [p, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{7, 1}, {3, 2}, {11, 1}, {5, 2}}) {
    const FieldCtx f = FieldCtx::make(p, r);
    const auto ctx = PadicCtx::with_precision(f, 8);
    CAPTURE(f.q());
    auto t = testing::check_norm_relation(*ctx);
    for (std::uint32_t h : {2u, 3u, 5u}) t += testing::check_gamma_multiplication(*ctx, h);
    INFO(t.first_failure);
    CHECK(t.ok());
  }
}

TEST_CASE("integer reconstruction") {
  const auto ctx = PadicCtx::make(FieldCtx::make(7, 1), 57);
  CHECK(ctx->reconstruct_integer(ctx->from_int(57), 57) == 57);
  CHECK(ctx->reconstruct_integer(ctx->zero(), 57) == 0);
  CHECK(ctx->reconstruct_integer(ctx->from_int(49), 57) == 49);
  CHECK_THROWS_AS(ctx->reconstruct_integer(ctx->from_rational(Rational(1, 7)), 57), PrecisionError);
  CHECK_THROWS_AS(ctx->reconstruct_integer(ctx->from_int(-1), 57), PrecisionError);
  const auto low = PadicCtx::with_precision(FieldCtx::make(7, 1), 2);
  CHECK_THROWS_AS(low->reconstruct_integer(low->from_int(3), 57), PrecisionError);
}
