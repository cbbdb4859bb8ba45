#include "dhcount/padic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include "dhcount/errors.hpp"

namespace dhcount {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }
u64 addmod(u64 a, u64 b, u64 m) { return static_cast<u64>((static_cast<u128>(a) + b) % m); }
u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : static_cast<u64>(static_cast<u128>(a) + m - b); }

u64 reduce_signed(std::int64_t v, u64 m) {
  const i128 r = static_cast<i128>(v) % static_cast<i128>(m);
  return static_cast<u64>(r < 0 ? r + m : r);
}

u64 inv_mod(u64 a, u64 m) {
  i128 g = m, x = 0, g1 = a % m, x1 = 1;
  while (g1 != 0) {
    const i128 quot = g / g1;
    std::tie(g, g1) = std::make_pair(g1, g - quot * g1);
    std::tie(x, x1) = std::make_pair(x1, x - quot * x1);
  }
  if (g != 1) throw std::domain_error("value is not invertible modulo p^N");
  x %= static_cast<i128>(m);
  return static_cast<u64>(x < 0 ? x + m : x);
}

int valuation_of(u64 c, std::uint32_t p) {
  int v = 0;
  while (c % p == 0) {
    c /= p;
    ++v;
  }
  return v;
}

// Polynomials in Y modulo p^N, truncated to degree < N.
using TruncPoly = std::vector<u64>;

TruncPoly mul_trunc(const TruncPoly& a, const TruncPoly& b, u64 m) {
  TruncPoly out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < out.size(); ++j) {
      out[i + j] = addmod(out[i + j], mulmod(a[i], b[j], m), m);
    }
  }
  return out;
}

// g(p Y + k)
TruncPoly compose_affine(const TruncPoly& g, u64 p, u64 k, u64 m) {
  const std::size_t len = g.size();
  TruncPoly res(len, 0);
  res[0] = g[len - 1];
  for (std::size_t e = len - 1; e-- > 0;) {
    TruncPoly next(len, 0);
    for (std::size_t i = 0; i < len; ++i) {
      if (res[i] == 0) continue;
      next[i] = addmod(next[i], mulmod(res[i], k, m), m);
      if (i + 1 < len) next[i + 1] = addmod(next[i + 1], mulmod(res[i], p, m), m);
    }
    next[0] = addmod(next[0], g[e], m);
    res = std::move(next);
  }
  return res;
}

u64 eval_poly(const TruncPoly& g, u64 y, u64 m) {
  u64 acc = 0;
  const u64 yr = y % m;
  for (std::size_t e = g.size(); e-- > 0;) acc = addmod(mulmod(acc, yr, m), g[e], m);
  return acc;
}

}  // namespace

// ---------------------------------------------------------------- QqNumber

bool QqNumber::is_scalar() const {
  if (zero_) return true;
  for (std::size_t i = 1; i < unit_.size(); ++i) {
    if (unit_[i] != 0) return false;
  }
  return true;
}

void QqNumber::normalize(int abs_prec) {
  const std::uint32_t p = ctx_->p();
  int shift = INT_MAX;
  for (auto c : unit_) {
    if (c != 0) shift = std::min(shift, valuation_of(c, p));
  }
  if (shift == INT_MAX || val_ + shift >= abs_prec) {
    zero_ = true;
    abs_ = abs_prec;
    unit_.clear();
    return;
  }
  zero_ = false;
  val_ += shift;
  rel_ = abs_prec - val_;
  const u64 m = ctx_->p_power(rel_);
  const u64 div = ctx_->p_power(shift);
  for (auto& c : unit_) c = (c / div) % m;
}

QqNumber QqNumber::operator-() const {
  QqNumber out = *this;
  if (zero_) return out;
  const u64 m = ctx_->p_power(rel_);
  for (auto& c : out.unit_) c = c == 0 ? 0 : m - c;
  return out;
}

QqNumber operator+(const QqNumber& a, const QqNumber& b) {
  const PadicCtx& ctx = *a.ctx_;
  const int abs_prec = std::min(a.abs_precision(), b.abs_precision());
  if (a.zero_ && b.zero_) {
    QqNumber out(&ctx);
    out.abs_ = abs_prec;
    return out;
  }
  if (abs_prec >= QqNumber::kExact) {
    throw std::logic_error("nonzero QqNumber with unbounded precision");
  }
  const int v = std::min(a.zero_ ? INT_MAX : a.val_, b.zero_ ? INT_MAX : b.val_);
  if (v >= abs_prec) {
    QqNumber out(&ctx);
    out.abs_ = abs_prec;
    return out;
  }
  const int k = abs_prec - v;
  const u64 m = ctx.p_power(k);
  QqNumber out(&ctx);
  out.unit_.assign(ctx.r(), 0);
  out.val_ = v;
  for (const QqNumber* x : {&a, &b}) {
    if (x->zero_) continue;
    const int shift = x->val_ - v;
    if (shift >= k) continue;
    const u64 scale = ctx.p_power(shift);
    for (std::size_t i = 0; i < out.unit_.size(); ++i) {
      out.unit_[i] = addmod(out.unit_[i], mulmod(x->unit_[i] % m, scale, m), m);
    }
  }
  out.normalize(abs_prec);
  return out;
}

QqNumber operator*(const QqNumber& a, const QqNumber& b) {
  const PadicCtx& ctx = *a.ctx_;
  QqNumber out(&ctx);
  if (a.is_exact_zero() || b.is_exact_zero()) return out;
  if (a.zero_ || b.zero_) {
    out.abs_ = a.valuation() + b.valuation();
    return out;
  }
  out.zero_ = false;
  out.val_ = a.val_ + b.val_;
  out.rel_ = std::min(a.rel_, b.rel_);
  out.unit_ = ctx.mul_units(a.unit_, b.unit_, out.rel_);
  return out;
}

QqNumber operator/(const QqNumber& a, const QqNumber& b) {
  const PadicCtx& ctx = *a.ctx_;
  if (b.zero_) throw std::domain_error("division by a p-adic zero");
  QqNumber out(&ctx);
  if (a.is_exact_zero()) return out;
  if (a.zero_) {
    out.abs_ = a.abs_ - b.val_;
    return out;
  }
  out.zero_ = false;
  out.val_ = a.val_ - b.val_;
  out.rel_ = std::min(a.rel_, b.rel_);
  out.unit_ = ctx.mul_units(a.unit_, ctx.inv_unit(b.unit_, out.rel_), out.rel_);
  return out;
}

QqNumber QqNumber::pow(std::int64_t e) const {
  if (e < 0) return (ctx_->one() / *this).pow(-e);
  QqNumber result = ctx_->one();
  QqNumber base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool congruent(const QqNumber& a, const QqNumber& b, int k) {
  const QqNumber d = a - b;
  return d.valuation() >= k;
}

std::string QqNumber::to_string() const {
  std::ostringstream os;
  if (zero_) {
    if (is_exact_zero()) return "0";
    os << "O(p^" << abs_ << ")";
    return os.str();
  }
  const std::uint32_t p = ctx_->p();
  os << "val=" << val_ << " prec=" << rel_ << " unit=[";
  for (std::size_t i = 0; i < unit_.size(); ++i) {
    if (i) os << ",";
    // Base-p digits, most significant first, padded to the precision.
    std::string digits(rel_, '0');
    u64 c = unit_[i];
    for (int d = rel_; d-- > 0;) {
      const u64 digit = c % p;
      c /= p;
      digits[d] = static_cast<char>(digit < 10 ? '0' + digit : 'a' + (digit - 10));
    }
    os << digits;
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------- GammaArg

GammaArg GammaArg::fractional() const {
  if (den == 0) throw InvalidInput("zero denominator");
  std::int64_t n = num, d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  n %= d;
  if (n < 0) n += d;
  const std::int64_t g = std::gcd(n, d);
  return {n / g, d / g};
}

// ---------------------------------------------------------------- PadicCtx

int PadicCtx::minimal_digits(std::uint32_t p, std::uint64_t bound) {
  int n = 0;
  u128 pw = 1;
  while (pw <= static_cast<u128>(2) * bound) {
    pw *= p;
    ++n;
  }
  return std::max(n, 1);
}

std::shared_ptr<const PadicCtx> PadicCtx::make(const FieldCtx& field, std::uint64_t bound, int pad) {
  if (field.p() == 2) throw PreconditionError("p-adic engines require an odd prime p");
  return with_precision(field, minimal_digits(field.p(), bound) + pad);
}

std::shared_ptr<const PadicCtx> PadicCtx::with_precision(const FieldCtx& field, int digits) {
  if (field.p() == 2) throw PreconditionError("p-adic engines require an odd prime p");
  return std::make_shared<const PadicCtx>(field, digits);
}

PadicCtx::PadicCtx(FieldCtx field, int digits) : field_(std::move(field)), N_(digits) {
  if (N_ < 1) throw InvalidInput("p-adic precision must be at least one digit");
  ppow_.assign(1, 1);
  for (int i = 1; i <= N_; ++i) {
    const u128 next = static_cast<u128>(ppow_.back()) * p();
    if (next >= (u128{1} << 62)) {
      throw InvalidInput("p^N exceeds 62 bits; lower the precision");
    }
    ppow_.push_back(static_cast<u64>(next));
  }
  lift_.assign(field_.modulus().begin(), field_.modulus().end());
  build_gamma_blocks();
  build_teichmuller_table();
}

QqNumber PadicCtx::make_number(int val, int rel, std::vector<std::uint64_t> unit) const {
  QqNumber out(this);
  out.zero_ = false;
  out.val_ = val;
  out.unit_ = std::move(unit);
  out.unit_.resize(r(), 0);
  out.normalize(val + rel);
  return out;
}

QqNumber PadicCtx::from_int(std::int64_t v) const {
  if (v == 0) return zero();
  return from_rational(Rational(v));
}

QqNumber PadicCtx::from_rational(const Rational& x) const {
  if (x.numerator() == 0) return zero();
  std::int64_t num = x.numerator(), den = x.denominator();
  int val = 0;
  while (num % static_cast<std::int64_t>(p()) == 0) {
    num /= p();
    ++val;
  }
  while (den % static_cast<std::int64_t>(p()) == 0) {
    den /= p();
    --val;
  }
  const u64 m = modulus();
  const u64 u = mulmod(reduce_signed(num, m), inv_mod(reduce_signed(den, m), m), m);
  return make_number(val, N_, {u});
}

QqNumber PadicCtx::neg_p_power(std::int64_t e) const {
  const u64 sign = (e % 2 == 0) ? 1 : modulus() - 1;
  return make_number(static_cast<int>(e), N_, {sign});
}

std::vector<std::uint64_t> PadicCtx::mul_units(std::span<const std::uint64_t> a,
                                               std::span<const std::uint64_t> b, int k) const {
  const u64 m = ppow_[k];
  const std::size_t deg = r();
  std::vector<u64> prod(2 * deg - 1, 0);
  for (std::size_t i = 0; i < deg; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < deg; ++j) {
      prod[i + j] = addmod(prod[i + j], mulmod(a[i] % m, b[j] % m, m), m);
    }
  }
  // Reduce by the monic lift of the modulus.
  for (std::size_t i = prod.size(); i-- > deg;) {
    const u64 c = prod[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j < deg; ++j) {
      prod[i - deg + j] = submod(prod[i - deg + j], mulmod(c, lift_[j] % m, m), m);
    }
  }
  prod.resize(deg);
  return prod;
}

std::vector<std::uint64_t> PadicCtx::inv_unit(std::span<const std::uint64_t> a, int k) const {
  std::vector<std::uint32_t> low(r());
  for (std::size_t i = 0; i < low.size(); ++i) low[i] = static_cast<std::uint32_t>(a[i] % p());
  const FieldElement x = field_.from_coeffs(low);
  if (x.is_zero()) throw std::domain_error("inverting a non-unit");
  const auto inv0 = field_.coeffs(field_.inv(x));
  std::vector<u64> y(inv0.begin(), inv0.end());
  int prec = 1;
  while (prec < k) {
    prec = std::min(2 * prec, k);
    const u64 m = ppow_[prec];
    // y <- y (2 - a y)
    std::vector<u64> ay = mul_units(a, y, prec);
    for (auto& c : ay) c = submod(0, c, m);
    ay[0] = addmod(ay[0], 2, m);
    y = mul_units(y, ay, prec);
  }
  for (auto& c : y) c %= ppow_[k];
  return y;
}

std::vector<std::uint64_t> PadicCtx::pow_units(std::vector<std::uint64_t> base, std::uint64_t e,
                                               int k) const {
  std::vector<u64> result(r(), 0);
  result[0] = 1;
  while (e > 0) {
    if (e & 1) result = mul_units(result, base, k);
    e >>= 1;
    if (e > 0) base = mul_units(base, base, k);
  }
  return result;
}

QqNumber PadicCtx::teichmuller(FieldElement x) const {
  if (x.is_zero()) return zero();
  const auto c = field_.coeffs(x);
  std::vector<u64> y(c.begin(), c.end());
  // Each q-th power gains one correct digit.
  for (int i = 0; i < N_; ++i) y = pow_units(std::move(y), q(), N_);
  return make_number(0, N_, std::move(y));
}

void PadicCtx::build_teichmuller_table() {
  const QqNumber w = teichmuller(field_.generator());
  omega_pow_.reserve(q() - 1);
  QqNumber cur = one();
  for (std::uint32_t k = 0; k + 1 < q(); ++k) {
    omega_pow_.push_back(cur);
    cur *= w;
  }
}

QqNumber PadicCtx::teich_char(std::int64_t s, FieldElement lambda) const {
  if (lambda.is_zero()) return zero();
  const std::int64_t m = q() - 1;
  std::int64_t k = (-(s % m) * static_cast<std::int64_t>(field_.dlog(lambda))) % m;
  if (k < 0) k += m;
  return omega_pow_[static_cast<std::size_t>(k)];
}

void PadicCtx::build_gamma_blocks() {
  const u64 m = modulus();
  const std::size_t len = static_cast<std::size_t>(N_);
  blocks_.assign(len, {});
  if (N_ < 2) return;
  TruncPoly g(len, 0);
  g[0] = 1;
  for (u64 j = 1; j < p(); ++j) {
    // multiply by (j + p Y)
    TruncPoly next(len, 0);
    for (std::size_t i = 0; i < len; ++i) {
      next[i] = addmod(next[i], mulmod(g[i], j, m), m);
      if (i + 1 < len) next[i + 1] = addmod(next[i + 1], mulmod(g[i], p(), m), m);
    }
    g = std::move(next);
  }
  blocks_[1] = g;
  for (std::size_t level = 2; level < len; ++level) {
    TruncPoly acc(len, 0);
    acc[0] = 1;
    for (u64 k = 0; k < p(); ++k) {
      acc = mul_trunc(acc, compose_affine(blocks_[level - 1], p(), k, m), m);
    }
    blocks_[level] = std::move(acc);
  }
}

std::uint64_t PadicCtx::gamma_residue(std::uint64_t n) const {
  const u64 m = modulus();
  if (n >= m) throw InvalidInput("Gamma_p residue argument out of range");
  {
    std::lock_guard lock(gamma_mutex_);
    if (auto it = gamma_memo_.find(n); it != gamma_memo_.end()) return it->second;
  }
  std::vector<u64> digit(N_);
  u64 rest = n;
  for (int i = 0; i < N_; ++i) {
    digit[i] = rest % p();
    rest /= p();
  }
  // Product of the integers in [1, n) prime to p, one complete block of
  // length p^L at a time from the most significant digit down.
  u64 prod = 1;
  u64 prefix = 0;
  for (int level = N_ - 1; level >= 1; --level) {
    const u64 block = ppow_[level];
    for (u64 k = 0; k < digit[level]; ++k) {
      prod = mulmod(prod, eval_poly(blocks_[level], prefix / block + k, m), m);
    }
    prefix += digit[level] * block;
  }
  for (u64 i = 1; i < digit[0]; ++i) prod = mulmod(prod, (prefix + i) % m, m);
  const u64 value = (n % 2 == 0) ? prod : submod(0, prod, m);
  std::lock_guard lock(gamma_mutex_);
  gamma_memo_.emplace(n, value);
  return value;
}

std::uint64_t PadicCtx::residue(const GammaArg& x) const {
  if (x.den == 0) throw InvalidInput("zero denominator");
  if (x.den % static_cast<std::int64_t>(p()) == 0) {
    throw InvalidInput("argument denominator divisible by p");
  }
  const u64 m = modulus();
  return mulmod(reduce_signed(x.num, m), inv_mod(reduce_signed(x.den, m), m), m);
}

QqNumber PadicCtx::gamma(const GammaArg& x) const {
  return make_number(0, N_, {gamma_residue(residue(x))});
}

std::int64_t PadicCtx::reconstruct_integer(const QqNumber& v, std::uint64_t bound) const {
  if (!v.is_zero() && v.valuation() < 0) {
    throw PrecisionError("value is not a p-adic integer (valuation " +
                         std::to_string(v.valuation()) + ")");
  }
  if (!v.is_scalar()) throw PrecisionError("value has nonzero components outside Z_p");
  const int k = std::min(v.abs_precision(), N_);
  if (k < 0 || ppow_[std::max(k, 0)] <= bound) {
    throw PrecisionError("only " + std::to_string(k) + " p-adic digits known; cannot determine an integer up to " +
                         std::to_string(bound));
  }
  u64 m = 0;
  if (!v.is_zero() && v.valuation() < k) {
    m = mulmod(v.unit()[0] % ppow_[k], ppow_[v.valuation()], ppow_[k]);
  }
  if (m > bound) {
    throw PrecisionError("residue " + std::to_string(m) + " has no representative in [0, " +
                         std::to_string(bound) + "]");
  }
  return static_cast<std::int64_t>(m);
}

}  // namespace dhcount
