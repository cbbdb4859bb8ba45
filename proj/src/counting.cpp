#include "dhcount/counting.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>

#include "dhcount/errors.hpp"

namespace dhcount {

namespace {

// ---------------------------------------------------------------- enumeration

// Evaluates the defining polynomial on vectors of element codes.
class Evaluator {
 public:
  explicit Evaluator(const DeformParams& dp) : dp_(dp), field_(dp.field) {
    const std::uint32_t q = field_.q();
    pow_d_.resize(q);
    for (std::uint32_t x = 0; x < q; ++x) pow_d_[x] = field_.pow({x}, dp.d);
    pow_h_.resize(dp.n);
    for (std::size_t i = 0; i < dp.n; ++i) {
      pow_h_[i].resize(q);
      for (std::uint32_t x = 0; x < q; ++x) pow_h_[i][x] = field_.pow({x}, dp.h[i]);
    }
    coef_ = dp.deformation_coefficient();
  }

  bool vanishes(std::span<const std::uint32_t> x) const {
    FieldElement diag = field_.zero();
    FieldElement mono = coef_;
    for (std::size_t i = 0; i < x.size(); ++i) {
      diag = field_.add(diag, pow_d_[x[i]]);
      mono = field_.mul(mono, pow_h_[i][x[i]]);
    }
    return diag == mono;
  }

 private:
  const DeformParams& dp_;
  const FieldCtx& field_;
  std::vector<FieldElement> pow_d_;
  std::vector<std::vector<FieldElement>> pow_h_;
  FieldElement coef_;
};

// Calls f on every vector of codes with entries in [lo, q), positions
// before `from` left untouched.
template <class F>
void odometer(std::vector<std::uint32_t>& x, std::size_t from, std::uint32_t lo, std::uint32_t q,
              F&& f) {
  for (std::size_t i = from; i < x.size(); ++i) x[i] = lo;
  while (true) {
    f(x);
    std::size_t i = x.size();
    while (i > from && x[i - 1] + 1 == q) x[--i] = lo;
    if (i == from) return;
    ++x[i - 1];
  }
}

// ---------------------------------------------------------------- complex helpers

CycValue scalar(long v, mpfr_prec_t bits) { return CycValue(v, 0, bits); }

struct Rounded {
  std::int64_t value;
  double residual;
};

Rounded nearest(const CycValue& v) {
  const std::int64_t n = round_to_int(v.re());
  const double res = v.distance(scalar(n, v.prec_bits())).to_double();
  return {n, res};
}

// Rounds value(sums); retries once at doubled precision before giving up.
std::int64_t certify(const CharSums& sums, const std::function<CycValue(const CharSums&)>& value,
                     EngineStats* stats) {
  Rounded r = nearest(value(sums));
  mpfr_prec_t bits = sums.prec_bits();
  if (!(r.residual < kRoundingTolerance)) {
    bits *= 2;
    const CharSums hi(sums.field(), bits);
    r = nearest(value(hi));
    if (!(r.residual < kRoundingTolerance)) {
      throw PrecisionError("complex value is " + std::to_string(r.residual) +
                           " away from the nearest integer at " + std::to_string(bits) + " bits");
    }
  }
  if (stats) {
    stats->residual = r.residual;
    stats->precision = static_cast<int>(bits);
  }
  return r.value;
}

std::vector<std::int64_t> scaled(const WeightVector& w, std::int64_t step) {
  std::vector<std::int64_t> js(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) js[i] = static_cast<std::int64_t>(w[i]) * step;
  return js;
}

CycValue gauss_product(const CharSums& sums, std::span<const std::int64_t> js) {
  CycValue prod = scalar(1, sums.prec_bits());
  for (auto j : js) prod *= sums.gauss(j);
  return prod;
}

std::vector<WeightVector> class_reps(const DeformParams& dp) {
  const auto wset = build_w_set(dp.n, dp.t);
  const auto dec = partition_classes(wset, dp.h, dp.t);
  std::vector<WeightVector> reps;
  for (const auto& c : dec.classes) reps.push_back(c.rep);
  return reps;
}

void check_reps(std::span<const WeightVector> reps, const DeformParams& dp) {
  const auto wset = build_w_set(dp.n, dp.t);
  const auto dec = partition_classes(wset, dp.h, dp.t);
  if (reps.size() != dec.classes.size()) {
    throw InvalidInput("need exactly one representative per class");
  }
  std::vector<bool> seen(dec.classes.size(), false);
  for (const auto& r : reps) {
    bool found = false;
    for (std::size_t c = 0; c < dec.classes.size() && !found; ++c) {
      const auto& m = dec.classes[c].members;
      if (std::binary_search(m.begin(), m.end(), r)) {
        if (seen[c]) throw InvalidInput("two representatives of one class");
        seen[c] = true;
        found = true;
      }
    }
    if (!found) throw InvalidInput("representative is not in W");
  }
}

// ---------------------------------------------------------------- value builders

CycValue weil_value(const CharSums& sums, std::uint32_t n, std::uint32_t d) {
  const std::uint32_t q = sums.field().q();
  const std::uint32_t t = std::gcd(d, q - 1);
  const std::int64_t step = (q - 1) / t;
  std::int64_t base = 0, pw = 1;
  for (std::uint32_t i = 0; i + 1 < n; ++i, pw *= q) base += pw;
  CycValue total = scalar(base, sums.prec_bits());
  for (const auto& w : build_w_set(n, t)) {
    if (w.has_zero()) continue;
    total -= sums.jacobi(scaled(w, step));
  }
  return total;
}

CycValue thm2_value(const CharSums& sums, const DeformParams& dp) {
  const std::int64_t q = dp.field.q();
  const std::int64_t step = dp.step();
  CycValue total = weil_value(sums, dp.n, dp.d);
  const FieldElement coef = dp.deformation_coefficient();
  if (coef.is_zero()) return total;
  CycValue acc = scalar(0, sums.prec_bits());
  const auto wset = build_w_set(dp.n, dp.t);
  for (std::int64_t s = 0; s < step; ++s) {
    const std::int64_t ds = static_cast<std::int64_t>(dp.d) * s;
    const CycValue tail = sums.mult_char(ds, coef) / sums.gauss(ds);
    for (const auto& w : wset) {
      auto js = scaled(w, step);
      for (std::size_t i = 0; i < js.size(); ++i) js[i] += static_cast<std::int64_t>(dp.h[i]) * s;
      acc += gauss_product(sums, js) * tail;
    }
  }
  return total + acc / scalar(q - 1, sums.prec_bits());
}

// Diagonal count in Gauss-product form: base + (1/q) sum_{w*} prod g.
CycValue diagonal_gauss_value(const CharSums& sums, std::uint32_t n, std::uint32_t t,
                              std::int64_t base) {
  const std::int64_t q = sums.field().q();
  const std::int64_t step = (q - 1) / t;
  CycValue acc = scalar(0, sums.prec_bits());
  for (const auto& w : build_w_set(n, t)) {
    if (!w.has_zero()) acc += gauss_product(sums, scaled(w, step));
  }
  return scalar(base, sums.prec_bits()) + acc / scalar(q, sums.prec_bits());
}

CycValue corthm2_value(const CharSums& sums, const DeformParams& dp, SumMode mode,
                       std::span<const WeightVector> reps) {
  const std::int64_t q = dp.field.q();
  const std::int64_t step = dp.step();
  const mpfr_prec_t bits = sums.prec_bits();
  const FieldElement coef = dp.deformation_coefficient();
  // With d lambda = 0 the s = 0 terms cannot be folded into the Gauss
  // product sum, so the diagonal form applies instead.
  if (coef.is_zero()) return diagonal_gauss_value(sums, dp.n, dp.t, dp.hyperplane_count());

  const auto wset = build_w_set(dp.n, dp.t);
  CycValue zero_part = scalar(0, bits);
  for (const auto& w : wset) {
    if (w.has_zero()) zero_part += gauss_product(sums, scaled(w, step));
  }

  std::vector<WeightVector> owned;
  std::span<const WeightVector> ws = wset;
  std::int64_t s_end = step;
  if (mode == SumMode::kLong) {
    if (reps.empty()) {
      owned = class_reps(dp);
      reps = owned;
    } else {
      check_reps(reps, dp);
    }
    ws = reps;
    s_end = q - 1;
  }
  const FieldElement neg_coef = dp.field.neg(coef);
  CycValue acc = scalar(0, bits);
  for (std::int64_t s = 0; s < s_end; ++s) {
    const std::int64_t ds = static_cast<std::int64_t>(dp.d) * s;
    const CycValue tail = sums.gauss(-ds) * sums.mult_char(ds, neg_coef);
    for (const auto& w : ws) {
      auto js = scaled(w, step);
      for (std::size_t i = 0; i < js.size(); ++i) js[i] += static_cast<std::int64_t>(dp.h[i]) * s;
      acc += gauss_product(sums, js) * tail;
    }
  }
  return scalar(dp.hyperplane_count(), bits) - zero_part / scalar(q, bits) +
         acc / scalar(q * (q - 1), bits);
}

CycValue dwork_gauss_value(const CharSums& sums, const DeformParams& dp, SumMode mode,
                           std::span<const WeightVector> reps) {
  const std::int64_t q = dp.field.q();
  const std::int64_t step = dp.step();
  const std::int64_t n = dp.n;
  const mpfr_prec_t bits = sums.prec_bits();
  const FieldElement minus_one = dp.field.neg(dp.field.one());
  const FieldElement arg = dp.field.neg(dp.field.mul(dp.field.from_int(n), dp.lambda));

  const auto wset = build_w_set(dp.n, dp.t);
  std::vector<WeightVector> owned;
  std::span<const WeightVector> ws = wset;
  std::int64_t s_end = step;
  if (mode == SumMode::kLong) {
    if (reps.empty()) {
      owned = class_reps(dp);
      reps = owned;
    } else {
      check_reps(reps, dp);
    }
    ws = reps;
    s_end = q - 1;
  }
  const CycValue qv = scalar(q, bits);
  CycValue acc = scalar(0, bits);
  for (std::int64_t s = 0; s < s_end; ++s) {
    const CycValue tail = sums.gauss(-n * s) * sums.mult_char(n * s, arg);
    for (const auto& w : ws) {
      const DworkProfile prof = dwork_profile(w, dp.n, dp.t);
      CycValue prod = scalar(1, bits);
      for (auto k : prof.present) {
        const std::int64_t j = static_cast<std::int64_t>(k) * step + s;
        CycValue f = scalar(1, bits);
        for (std::uint32_t c = 1; c < prof.counts[k]; ++c) f *= sums.gauss(j);
        prod *= f / sums.gauss(-j) * sums.mult_char(j, minus_one) * qv;
      }
      acc += prod * tail;
    }
  }
  return scalar(dp.hyperplane_count(), bits) + acc / scalar(q * (q - 1), bits);
}

// ---------------------------------------------------------------- p-adic helpers

void require_padic(const PadicCtx& ctx, const DeformParams& dp) {
  if (!(ctx.field() == dp.field)) throw InvalidInput("p-adic context built for another field");
  if (dp.p_divides_dh()) throw PreconditionError("p divides d * h_1 * ... * h_n");
}

std::int64_t reconstruct(const PadicCtx& ctx, const QqNumber& v, const DeformParams& dp,
                         EngineStats* stats) {
  const std::int64_t m = ctx.reconstruct_integer(v, dp.projective_size());
  if (stats) {
    stats->residual = 0.0;
    stats->precision = ctx.digits();
  }
  return m;
}

QqNumber sign_pow(const PadicCtx& ctx, std::uint32_t n) {
  return n % 2 == 0 ? ctx.one() : -ctx.one();
}

}  // namespace

// ---------------------------------------------------------------- oracles

std::int64_t brute_projective(const DeformParams& dp) {
  const Evaluator ev(dp);
  const std::uint32_t q = dp.field.q();
  std::int64_t count = 0;
  std::vector<std::uint32_t> x(dp.n, 0);
  for (std::size_t lead = 0; lead < dp.n; ++lead) {
    std::fill(x.begin(), x.end(), 0u);
    x[lead] = 1;
    odometer(x, lead + 1, 0, q, [&](std::span<const std::uint32_t> v) {
      if (ev.vanishes(v)) ++count;
    });
  }
  return count;
}

std::int64_t brute_affine_star(const DeformParams& dp) {
  const Evaluator ev(dp);
  std::int64_t count = 0;
  std::vector<std::uint32_t> x(dp.n, 1);
  odometer(x, 0, 1, dp.field.q(), [&](std::span<const std::uint32_t> v) {
    if (ev.vanishes(v)) ++count;
  });
  return count;
}

// ---------------------------------------------------------------- complex engines

std::int64_t weil_diagonal_projective(const CharSums& sums, std::uint32_t n, std::uint32_t d,
                                      EngineStats* stats) {
  if (n < 2 || d < 1) throw InvalidInput("need n >= 2 and d >= 1");
  return certify(sums, [&](const CharSums& s) { return weil_value(s, n, d); }, stats);
}

std::int64_t weil_diagonal_affine_star(const CharSums& sums, std::uint32_t n, std::uint32_t d,
                                       EngineStats* stats) {
  if (n < 2 || d < 1) throw InvalidInput("need n >= 2 and d >= 1");
  return certify(
      sums,
      [&](const CharSums& cs) {
        const std::uint32_t q = cs.field().q();
        const std::uint32_t t = std::gcd(d, q - 1);
        const std::int64_t step = (q - 1) / t;
        CycValue total = scalar(0, cs.prec_bits());
        for (const auto& w : build_w_set(n, t)) total += cs.jacobi_zero(scaled(w, step));
        return total;
      },
      stats);
}

std::int64_t cor1_affine_star(const CharSums& sums, const DeformParams& dp, EngineStats* stats) {
  const FieldElement coef = dp.deformation_coefficient();
  if (coef.is_zero()) throw PreconditionError("needs d * lambda != 0");
  return certify(
      sums,
      [&](const CharSums& cs) {
        const std::int64_t step = dp.step();
        CycValue total = scalar(0, cs.prec_bits());
        const auto wset = build_w_set(dp.n, dp.t);
        for (std::int64_t s = 0; s < step; ++s) {
          const std::int64_t ds = static_cast<std::int64_t>(dp.d) * s;
          const CycValue chi = cs.mult_char(ds, coef);
          for (const auto& w : wset) {
            auto js = scaled(w, step);
            for (std::size_t i = 0; i < js.size(); ++i) {
              js[i] += static_cast<std::int64_t>(dp.h[i]) * s;
            }
            total += cs.jacobi(js) * chi;
          }
        }
        return total;
      },
      stats);
}

std::int64_t thm2_projective(const CharSums& sums, const DeformParams& dp, EngineStats* stats) {
  return certify(sums, [&](const CharSums& s) { return thm2_value(s, dp); }, stats);
}

std::int64_t corthm2_projective(const CharSums& sums, const DeformParams& dp, SumMode mode,
                                std::span<const WeightVector> reps, EngineStats* stats) {
  return certify(sums, [&](const CharSums& s) { return corthm2_value(s, dp, mode, reps); }, stats);
}

std::int64_t dwork_gauss_projective(const CharSums& sums, std::uint32_t n, FieldElement lambda,
                                    SumMode mode, std::span<const WeightVector> reps,
                                    EngineStats* stats) {
  const DeformParams dp = DeformParams::dwork(sums.field(), n, lambda);
  if (lambda.is_zero()) throw PreconditionError("Dwork engines need lambda != 0");
  if (n % dp.field.p() == 0) throw PreconditionError("Dwork Gauss engine needs p not dividing n");
  return certify(sums, [&](const CharSums& s) { return dwork_gauss_value(s, dp, mode, reps); },
                 stats);
}

// ---------------------------------------------------------------- p-adic engines

std::shared_ptr<const PadicCtx> padic_context_for(const FieldCtx& field, std::uint32_t n, int pad) {
  std::uint64_t size = 0, pw = 1;
  for (std::uint32_t i = 0; i < n; ++i, pw *= field.q()) size += pw;
  return PadicCtx::make(field, size, pad);
}

QqNumber main_padic_class_term(const PadicCtx& ctx, const DeformParams& dp, const WeightVector& w,
                               MainVariant variant) {
  require_padic(ctx, dp);
  const int sign = variant == MainVariant::kMain ? 1 : -1;
  return c_factor(ctx, w, sign) * evaluate_g(ctx, build_main_params(dp, w, variant));
}

QqNumber main_padic_value(const PadicCtx& ctx, const DeformParams& dp, MainVariant variant,
                          std::span<const WeightVector> reps) {
  require_padic(ctx, dp);
  const QqNumber sgn = sign_pow(ctx, dp.n);
  const QqNumber q = ctx.from_int(dp.field.q());
  QqNumber total = ctx.from_int(dp.hyperplane_count());
  const auto wset = build_w_set(dp.n, dp.t);
  if (dp.lambda.is_zero()) {
    // Diagonal case: the s = 0 absorption behind the class sum needs
    // lambda != 0, so sum C(w) over w with no zero coordinate instead.
    QqNumber acc = ctx.zero();
    for (const auto& w : wset) {
      if (!w.has_zero()) acc += c_factor(ctx, w);
    }
    return total + sgn * acc / q;
  }
  QqNumber zero_part = ctx.zero();
  for (const auto& w : wset) {
    if (w.has_zero()) zero_part += c_factor(ctx, w);
  }
  std::vector<WeightVector> owned;
  if (reps.empty()) {
    owned = class_reps(dp);
    reps = owned;
  } else {
    check_reps(reps, dp);
  }
  QqNumber class_part = ctx.zero();
  for (const auto& w : reps) class_part += main_padic_class_term(ctx, dp, w, variant);
  return total - sgn * zero_part / q + sgn * class_part / q;
}

std::int64_t main_padic_projective(const PadicCtx& ctx, const DeformParams& dp,
                                   MainVariant variant, std::span<const WeightVector> reps,
                                   EngineStats* stats) {
  return reconstruct(ctx, main_padic_value(ctx, dp, variant, reps), dp, stats);
}

std::int64_t gcd1_padic_projective(const PadicCtx& ctx, const DeformParams& dp,
                                   EngineStats* stats) {
  require_padic(ctx, dp);
  if (dp.t != 1) throw PreconditionError("needs gcd(d, q-1) = 1");
  const QqNumber g = evaluate_g(ctx, build_gcd1_params(dp));
  const QqNumber v = ctx.from_int(dp.hyperplane_count()) + sign_pow(ctx, dp.n) * g;
  return reconstruct(ctx, v, dp, stats);
}

QqNumber dwork_padic_class_term(const PadicCtx& ctx, std::uint32_t n, FieldElement lambda,
                                const WeightVector& w0) {
  if (!w0.has_zero()) throw InvalidInput("representative must contain a zero coordinate");
  const DworkProfile prof = dwork_profile(w0, n, w0.t);
  return c_factor(ctx, w0) * evaluate_g(ctx, build_dwork_params(ctx.field(), prof, lambda));
}

std::int64_t dwork_padic_projective(const PadicCtx& ctx, std::uint32_t n, FieldElement lambda,
                                    std::span<const WeightVector> reps, EngineStats* stats) {
  const DeformParams dp = DeformParams::dwork(ctx.field(), n, lambda);
  require_padic(ctx, dp);
  if (lambda.is_zero()) throw PreconditionError("Dwork engines need lambda != 0");
  std::vector<WeightVector> owned;
  if (reps.empty()) {
    const auto wset = build_w_set(dp.n, dp.t);
    for (const auto& c : partition_classes(wset, dp.h, dp.t).classes) {
      if (!c.zero_rep) throw std::logic_error("class without a zero-containing member");
      owned.push_back(*c.zero_rep);
    }
    reps = owned;
  } else {
    check_reps(reps, dp);
  }
  QqNumber acc = ctx.zero();
  for (const auto& w0 : reps) acc += dwork_padic_class_term(ctx, n, lambda, w0);
  const QqNumber v = ctx.from_int(dp.hyperplane_count()) + sign_pow(ctx, n) * acc;
  return reconstruct(ctx, v, dp, stats);
}

// ---------------------------------------------------------------- dispatch

namespace {

constexpr std::array<EngineInfo, 14> kEngines{{
    {Engine::kBrute, "brute", false, false},
    {Engine::kBruteAffineStar, "brute-affine-star", true, false},
    {Engine::kWeil, "weil", false, false},
    {Engine::kWeilAffineStar, "weil-affine-star", true, false},
    {Engine::kCor1AffineStar, "cor1-affine-star", true, false},
    {Engine::kThm2, "thm2", false, false},
    {Engine::kCorThm2Short, "corthm2-short", false, false},
    {Engine::kCorThm2Long, "corthm2-long", false, false},
    {Engine::kPadicMain, "padic-main", false, true},
    {Engine::kPadicSwapped, "padic-swapped", false, true},
    {Engine::kPadicGcd1, "padic-gcd1", false, true},
    {Engine::kDworkGauss, "dwork-gauss", false, false},
    {Engine::kDworkGaussLong, "dwork-gauss-long", false, false},
    {Engine::kDworkPadic, "dwork-padic", false, true},
}};

}  // namespace

std::span<const EngineInfo> all_engines() { return kEngines; }

const EngineInfo& engine_info(Engine e) {
  for (const auto& info : kEngines) {
    if (info.id == e) return info;
  }
  throw std::logic_error("unknown engine id");
}

Engine engine_from_name(std::string_view name) {
  for (const auto& info : kEngines) {
    if (info.name == name) return info.id;
  }
  throw InvalidInput("unknown engine '" + std::string(name) + "'");
}

EngineContext::EngineContext(FieldCtx field, mpfr_prec_t bits, int padic_pad)
    : field_(std::move(field)), bits_(bits), pad_(padic_pad) {
  if (bits_ < CycValue::kMinPrecBits) throw InvalidInput("precision below 192 bits");
}

const CharSums& EngineContext::sums() const {
  std::lock_guard lock(mutex_);
  if (!sums_) sums_ = std::make_unique<CharSums>(field_, bits_);
  return *sums_;
}

const PadicCtx& EngineContext::padic(std::uint32_t n) const {
  std::lock_guard lock(mutex_);
  auto& slot = padic_[n];
  if (!slot) slot = padic_context_for(field_, n, pad_);
  return *slot;
}

CountReport run_engine(Engine e, const EngineContext& ctx, const DeformParams& dp) {
  if (!(ctx.field() == dp.field)) throw InvalidInput("engine context built for another field");
  const auto start = std::chrono::steady_clock::now();
  EngineStats st;
  std::int64_t count = 0;
  auto need_dwork = [&] {
    if (!dp.is_dwork()) throw PreconditionError("Dwork engines need h = (1, ..., 1)");
  };
  switch (e) {
    case Engine::kBrute: count = brute_projective(dp); break;
    case Engine::kBruteAffineStar: count = brute_affine_star(dp); break;
    case Engine::kWeil:
      if (!dp.deformation_coefficient().is_zero()) {
        throw PreconditionError("diagonal count needs d * lambda = 0");
      }
      count = weil_diagonal_projective(ctx.sums(), dp.n, dp.d, &st);
      break;
    case Engine::kWeilAffineStar:
      if (!dp.deformation_coefficient().is_zero()) {
        throw PreconditionError("diagonal count needs d * lambda = 0");
      }
      count = weil_diagonal_affine_star(ctx.sums(), dp.n, dp.d, &st);
      break;
    case Engine::kCor1AffineStar: count = cor1_affine_star(ctx.sums(), dp, &st); break;
    case Engine::kThm2: count = thm2_projective(ctx.sums(), dp, &st); break;
    case Engine::kCorThm2Short:
      count = corthm2_projective(ctx.sums(), dp, SumMode::kShort, {}, &st);
      break;
    case Engine::kCorThm2Long:
      count = corthm2_projective(ctx.sums(), dp, SumMode::kLong, {}, &st);
      break;
    case Engine::kPadicMain:
      count = main_padic_projective(ctx.padic(dp.n), dp, MainVariant::kMain, {}, &st);
      break;
    case Engine::kPadicSwapped:
      count = main_padic_projective(ctx.padic(dp.n), dp, MainVariant::kSwapped, {}, &st);
      break;
    case Engine::kPadicGcd1: count = gcd1_padic_projective(ctx.padic(dp.n), dp, &st); break;
    case Engine::kDworkGauss:
      need_dwork();
      count = dwork_gauss_projective(ctx.sums(), dp.n, dp.lambda, SumMode::kShort, {}, &st);
      break;
    case Engine::kDworkGaussLong:
      need_dwork();
      count = dwork_gauss_projective(ctx.sums(), dp.n, dp.lambda, SumMode::kLong, {}, &st);
      break;
    case Engine::kDworkPadic:
      need_dwork();
      count = dwork_padic_projective(ctx.padic(dp.n), dp.n, dp.lambda, {}, &st);
      break;
  }
  const auto stop = std::chrono::steady_clock::now();
  CountReport rep;
  rep.engine = std::string(engine_info(e).name);
  rep.count = count;
  rep.residual = st.residual;
  rep.precision = st.precision;
  rep.ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return rep;
}

}  // namespace dhcount
