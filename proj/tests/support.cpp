#include "support.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dhcount/errors.hpp"
#include "dhcount/hyperg.hpp"

namespace dhcount::testing {

void Tally::record(bool pass, const std::string& what) {
  ++checks;
  if (!pass) {
    if (failures == 0) first_failure = what;
    ++failures;
  }
}

void Tally::residual(double r, double tol, const std::string& what) {
  worst = std::max(worst, r);
  record(r < tol, what + " (residual " + std::to_string(r) + ")");
}

Tally& Tally::operator+=(const Tally& o) {
  if (failures == 0 && o.failures > 0) first_failure = o.first_failure;
  checks += o.checks;
  failures += o.failures;
  worst = std::max(worst, o.worst);
  return *this;
}

namespace {

using Js = std::vector<std::int64_t>;

std::string show(const Js& js) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < js.size(); ++i) os << (i ? "," : "") << js[i];
  os << ")";
  return os.str();
}

// Calls f on character tuples of length k: all of them, or random ones.
template <class F>
void for_tuples(std::uint32_t m, std::size_t k, Coverage cov, std::mt19937_64& rng, F&& f) {
  Js js(k, 0);
  if (!cov.exhaustive) {
    std::uniform_int_distribution<std::int64_t> dist(0, m - 1);
    for (std::size_t i = 0; i < cov.samples; ++i) {
      for (auto& j : js) j = dist(rng);
      f(js);
    }
    return;
  }
  while (true) {
    f(js);
    std::size_t i = k;
    while (i > 0 && js[i - 1] + 1 == m) js[--i] = 0;
    if (i == 0) return;
    ++js[i - 1];
  }
}

double dist(const CycValue& a, const CycValue& b) { return a.distance(b).to_double(); }

CycValue real(long v, const CharSums& cs) { return CycValue(v, 0, cs.prec_bits()); }

bool all_trivial(const Js& js, std::int64_t m) {
  return std::all_of(js.begin(), js.end(), [m](std::int64_t j) { return j % m == 0; });
}

bool product_trivial(const Js& js, std::int64_t m) {
  return std::accumulate(js.begin(), js.end(), std::int64_t{0}) % m == 0;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

Rational frac(const Rational& x) {
  std::int64_t f = x.numerator() / x.denominator();
  if (x.numerator() % x.denominator() != 0 && x.numerator() < 0) --f;
  return x - Rational(f);
}

bool same(const QqNumber& a, const QqNumber& b) {
  return congruent(a, b, std::min(a.abs_precision(), b.abs_precision()));
}

}  // namespace

// ---------------------------------------------------------------- complex side

Tally check_gauss_conj(const CharSums& cs) {
  Tally t;
  const std::int64_t m = cs.order();
  const long q = cs.field().q();
  const FieldElement minus_one = cs.field().neg(cs.field().one());
  for (std::int64_t j = 0; j < m; ++j) {
    const CycValue lhs = cs.gauss(j) * cs.gauss(-j);
    const CycValue rhs = j == 0 ? real(1, cs) : cs.mult_char(j, minus_one) * q;
    t.residual(dist(lhs, rhs), kIdentityTol, "g(T^j) g(T^-j), j=" + std::to_string(j));
  }
  return t;
}

Tally check_jacobi_zero(const CharSums& cs, Coverage cov, std::mt19937_64& rng) {
  Tally t;
  const std::int64_t m = cs.order();
  const long q = cs.field().q();
  for (std::size_t k = 2; k <= 3; ++k) {
    for_tuples(m, k, cov, rng, [&](const Js& js) {
      const CycValue j0 = cs.jacobi_zero(js);
      CycValue expect = real(0, cs);
      if (all_trivial(js, m)) {
        long pw = 1;
        for (std::size_t i = 0; i < k; ++i) pw *= q - 1;
        expect = real(pw, cs) - cs.jacobi(js) * (q - 1);
      } else if (product_trivial(js, m)) {
        expect = -(cs.jacobi(js) * (q - 1));
      }
      t.residual(dist(j0, expect), kIdentityTol, "J_0" + show(js));
    });
  }
  return t;
}

Tally check_jacobi_reduction(const CharSums& cs, Coverage cov, std::mt19937_64& rng) {
  Tally t;
  const std::int64_t m = cs.order();
  const FieldElement minus_one = cs.field().neg(cs.field().one());
  for (std::size_t k = 2; k <= 4; ++k) {
    Coverage c = cov;
    if (k == 4 && c.exhaustive) c = {false, 400};
    for_tuples(m, k - 1, c, rng, [&](const Js& head) {
      Js js = head;
      // Close the tuple so the product is trivial.
      js.push_back(mod(-std::accumulate(head.begin(), head.end(), std::int64_t{0}), m));
      if (all_trivial(js, m)) return;
      const CycValue lhs = cs.jacobi(js);
      const CycValue rhs = -(cs.mult_char(js.back(), minus_one) * cs.jacobi(head));
      t.residual(dist(lhs, rhs), kIdentityTol, "J reduction" + show(js));
    });
  }
  return t;
}

Tally check_jacobi_all_trivial(const CharSums& cs) {
  Tally t;
  const long q = cs.field().q();
  for (std::size_t k = 1; k <= 4; ++k) {
    long pw = 1;
    for (std::size_t i = 0; i < k; ++i) pw *= q - 1;
    const long sign = k % 2 == 1 ? 1 : -1;  // (-1)^{k+1}
    const CycValue expect = real(pw + sign, cs) / real(q, cs);
    t.residual(dist(cs.jacobi(Js(k, 0)), expect), kIdentityTol,
               "J(eps x " + std::to_string(k) + ")");
  }
  return t;
}

Tally check_jacobi_to_gauss(const CharSums& cs, Coverage cov, std::mt19937_64& rng) {
  Tally t;
  const std::int64_t m = cs.order();
  const long q = cs.field().q();
  for (std::size_t k = 2; k <= 3; ++k) {
    for_tuples(m, k, cov, rng, [&](const Js& js) {
      if (all_trivial(js, m)) return;
      CycValue prod = real(1, cs);
      for (auto j : js) prod *= cs.gauss(j);
      const std::int64_t sum = std::accumulate(js.begin(), js.end(), std::int64_t{0});
      const CycValue expect =
          product_trivial(js, m) ? -(prod / real(q, cs)) : prod / cs.gauss(sum);
      t.residual(dist(cs.jacobi(js), expect), kIdentityTol, "J vs Gauss" + show(js));
      t.residual(dist(cs.jacobi_via_gauss(js), expect), kIdentityTol, "J via Gauss" + show(js));
    });
  }
  return t;
}

// ---------------------------------------------------------------- p-adic side

Tally check_gamma_naive(const PadicCtx& ctx, std::uint64_t below) {
  Tally t;
  const std::uint64_t m = ctx.modulus();
  const std::uint32_t p = ctx.p();
  std::uint64_t prod = 1;  // product of 0 < j < n with p not dividing j
  below = std::min(below, m);
  for (std::uint64_t n = 0; n < below; ++n) {
    if (n > 1 && (n - 1) % p != 0) prod = mulmod(prod, n - 1, m);
    const std::uint64_t expect = n % 2 == 0 ? prod : (m - prod) % m;
    t.record(ctx.gamma_residue(n) == expect, "Gamma_p(" + std::to_string(n) + ")");
  }
  return t;
}

Tally check_gamma_continuity(const PadicCtx& ctx, std::size_t samples, std::mt19937_64& rng) {
  Tally t;
  const std::uint64_t m = ctx.modulus();
  std::uniform_int_distribution<std::uint64_t> any(0, m - 1);
  std::uniform_int_distribution<int> level(1, ctx.digits() - 1);
  for (std::size_t i = 0; i < samples; ++i) {
    const std::uint64_t a = any(rng);
    const int k = level(rng);
    const std::uint64_t pk = ctx.p_power(k);
    const std::uint64_t b = (a + pk * (any(rng) % (m / pk))) % m;
    const std::uint64_t ga = ctx.gamma_residue(a), gb = ctx.gamma_residue(b);
    t.record(ga % pk == gb % pk, "continuity at " + std::to_string(a) + ", " + std::to_string(b));
  }
  return t;
}

Tally check_gamma_multiplication(const PadicCtx& ctx, std::uint32_t h) {
  Tally t;
  if (h % ctx.p() == 0) return t;
  const std::int64_t m = ctx.q() - 1;
  const FieldElement hf = ctx.field().from_int(h);
  for (std::int64_t j = 0; j < m; ++j) {
    const Rational x(j, m);
    QqNumber lhs = ctx.one(), rhs = ctx.teichmuller(ctx.field().pow(hf, j));
    std::int64_t pa = 1;
    for (std::uint32_t a = 0; a < ctx.r(); ++a, pa *= ctx.p()) {
      for (std::uint32_t b = 0; b < h; ++b) lhs *= ctx.gamma(frac((x + b) / Rational(h) * pa));
      rhs *= ctx.gamma(frac(x * pa));
      for (std::uint32_t b = 1; b < h; ++b) rhs *= ctx.gamma(frac(Rational(b, h) * pa));
    }
    t.record(same(lhs, rhs), "multiplication h=" + std::to_string(h) + " j=" + std::to_string(j));
  }
  return t;
}

Tally check_norm_relation(const PadicCtx& ctx) {
  Tally t;
  const std::int64_t m = ctx.q() - 1;
  auto gk = [&](std::int64_t j) {
    QqNumber prod = ctx.one();
    std::int64_t pa = 1;
    for (std::uint32_t a = 0; a < ctx.r(); ++a, pa *= ctx.p()) {
      prod *= ctx.gamma(frac(Rational(j * pa, m)));
    }
    return prod;
  };
  const FieldElement minus_one = ctx.field().neg(ctx.field().one());
  for (std::int64_t j = 1; j < m; ++j) {
    const QqNumber lhs = gk(j) * gk(-j) * ctx.neg_p_power(ctx.r());
    const QqNumber rhs = ctx.teich_char(j, minus_one) * ctx.from_int(ctx.q());
    t.record(same(lhs, rhs), "norm relation j=" + std::to_string(j));
  }
  return t;
}

Tally check_zero_cancellation(const PadicCtx& ctx, std::size_t sets, std::mt19937_64& rng) {
  Tally t;
  const std::int64_t m = ctx.q() - 1;
  std::uniform_int_distribution<std::int64_t> num(0, m - 1);
  std::uniform_int_distribution<int> len(1, 3);
  std::uniform_int_distribution<std::uint32_t> lam(1, ctx.q() - 1);
  for (std::size_t i = 0; i < sets; ++i) {
    GParams small;
    const int l = len(rng);
    for (int k = 0; k < l; ++k) {
      small.a.emplace_back(num(rng), m);
      small.b.emplace_back(num(rng), m);
    }
    small.lambda = ctx.field().exp(lam(rng));
    GParams big = small;
    big.a.insert(big.a.begin(), Rational(0));
    big.b.insert(big.b.begin(), Rational(0));
    const QqNumber lhs = evaluate_g(ctx, big);
    const QqNumber rhs = ctx.one() + ctx.from_int(ctx.q()) * evaluate_g(ctx, small);
    t.record(same(lhs, rhs), "zero cancellation set " + std::to_string(i));
  }
  return t;
}

// ---------------------------------------------------------------- counting

Tally check_all_engines(const EngineContext& ec, const DeformParams& dp) {
  Tally t;
  const std::int64_t proj = brute_projective(dp);
  const std::int64_t star = brute_affine_star(dp);
  for (const auto& info : all_engines()) {
    try {
      const CountReport rep = run_engine(info.id, ec, dp);
      const std::int64_t expect = info.affine_star ? star : proj;
      t.record(rep.count == expect, std::string(info.name) + " at " + dp.describe() + ": got " +
                                        std::to_string(rep.count) + ", expected " +
                                        std::to_string(expect));
    } catch (const PreconditionError&) {
    }
  }
  return t;
}

std::vector<WeightVector> random_reps(const DeformParams& dp, bool zero_containing,
                                      std::mt19937_64& rng) {
  const auto wset = build_w_set(dp.n, dp.t);
  const auto dec = partition_classes(wset, dp.h, dp.t);
  std::vector<WeightVector> reps;
  for (const auto& c : dec.classes) {
    std::vector<WeightVector> pool;
    for (const auto& w : c.members) {
      if (!zero_containing || w.has_zero()) pool.push_back(w);
    }
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    reps.push_back(pool.at(pick(rng)));
  }
  std::shuffle(reps.begin(), reps.end(), rng);
  return reps;
}

}  // namespace dhcount::testing
