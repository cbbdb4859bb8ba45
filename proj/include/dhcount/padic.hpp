#pragma once

#include <climits>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "dhcount/ffield.hpp"
#include "dhcount/wlattice.hpp"

namespace dhcount {

class PadicCtx;

/// An element of Q_q = Q_p[x]/(f~) known to bounded precision, stored as
/// p^val * u with u a unit of Z_q known modulo p^rel. A number that is zero
/// to its precision keeps only its absolute precision; an exact zero (for
/// example the Teichmueller lift of 0) has unbounded precision.
class QqNumber {
 public:
  static constexpr int kExact = INT_MAX / 4;

  const PadicCtx& ctx() const { return *ctx_; }
  bool is_zero() const { return zero_; }
  bool is_exact_zero() const { return zero_ && abs_ >= kExact; }
  /// For a zero, the absolute precision.
  int valuation() const { return zero_ ? abs_ : val_; }
  int abs_precision() const { return zero_ ? abs_ : val_ + rel_; }
  int rel_precision() const { return zero_ ? 0 : rel_; }
  /// Unit part, coefficients mod p^rel in the power basis.
  std::span<const std::uint64_t> unit() const { return unit_; }
  /// True when all non-constant coordinates vanish.
  bool is_scalar() const;

  QqNumber operator-() const;
  friend QqNumber operator+(const QqNumber& a, const QqNumber& b);
  friend QqNumber operator-(const QqNumber& a, const QqNumber& b) { return a + (-b); }
  friend QqNumber operator*(const QqNumber& a, const QqNumber& b);
  friend QqNumber operator/(const QqNumber& a, const QqNumber& b);
  QqNumber& operator+=(const QqNumber& o) { return *this = *this + o; }
  QqNumber& operator-=(const QqNumber& o) { return *this = *this - o; }
  QqNumber& operator*=(const QqNumber& o) { return *this = *this * o; }
  QqNumber& operator/=(const QqNumber& o) { return *this = *this / o; }
  QqNumber pow(std::int64_t e) const;

  /// a = b mod p^k, decided from the known digits; false if the
  /// precision of either side is below k.
  friend bool congruent(const QqNumber& a, const QqNumber& b, int k);

  /// Human-readable "val=.. prec=.. unit=[..]" with coefficients in base-p
  /// digit strings (least significant digit last).
  std::string to_string() const;

 private:
  friend class PadicCtx;
  explicit QqNumber(const PadicCtx* ctx) : ctx_(ctx) {}
  void normalize(int abs_prec);

  const PadicCtx* ctx_ = nullptr;
  bool zero_ = true;
  int val_ = 0;
  int rel_ = 0;
  int abs_ = kExact;  // only meaningful for zero_
  std::vector<std::uint64_t> unit_;
};

/// A p-adic rational argument num/den of Gamma_p, p not dividing den.
struct GammaArg {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static GammaArg from(const Rational& x) { return {x.numerator(), x.denominator()}; }
  /// Fractional part, as a reduced fraction in [0, 1).
  GammaArg fractional() const;
};

/// Bounded-precision model of Z_q for an odd prime p, together with
/// Teichmueller lifts and Morita's p-adic gamma function. Immutable apart
/// from internal memo tables, which are guarded.
class PadicCtx {
 public:
  static constexpr int kDefaultPad = 4;

  /// N = (least N with p^N > 2 bound) + pad. Throws PreconditionError for
  /// p = 2 and InvalidInput if p^N overflows 62 bits.
  static std::shared_ptr<const PadicCtx> make(const FieldCtx& field, std::uint64_t bound,
                                              int pad = kDefaultPad);
  static std::shared_ptr<const PadicCtx> with_precision(const FieldCtx& field, int digits);
  /// Least N with p^N > 2 bound.
  static int minimal_digits(std::uint32_t p, std::uint64_t bound);

  PadicCtx(const PadicCtx&) = delete;
  PadicCtx& operator=(const PadicCtx&) = delete;

  const FieldCtx& field() const { return field_; }
  std::uint32_t p() const { return field_.p(); }
  std::uint32_t r() const { return field_.r(); }
  std::uint32_t q() const { return field_.q(); }
  int digits() const { return N_; }
  std::uint64_t modulus() const { return ppow_[N_]; }
  std::uint64_t p_power(int k) const { return ppow_[k]; }
  /// Lift of the field modulus; identical integer coefficients c_0..c_r.
  const std::vector<std::uint64_t>& lift_modulus() const { return lift_; }

  QqNumber zero() const { return QqNumber(this); }
  QqNumber one() const { return from_int(1); }
  QqNumber from_int(std::int64_t v) const;
  /// Rational with arbitrary denominator; p-factors become valuation.
  QqNumber from_rational(const Rational& x) const;
  /// (-p)^e, any integer e.
  QqNumber neg_p_power(std::int64_t e) const;

  /// omega(x): the (q-1)-st root of unity congruent to x mod p; omega(0) = 0.
  QqNumber teichmuller(FieldElement x) const;
  /// omega(lambda)^{-s} for lambda != 0, exact zero for lambda = 0.
  QqNumber teich_char(std::int64_t s, FieldElement lambda) const;

  /// Gamma_p(n) for an integer 0 <= n < p^N, as an integer residue.
  std::uint64_t gamma_residue(std::uint64_t n) const;
  /// Gamma_p(x) for rational x with p not dividing its denominator.
  QqNumber gamma(const GammaArg& x) const;
  QqNumber gamma(const Rational& x) const { return gamma(GammaArg::from(x)); }

  /// x mod p^N as an integer in [0, p^N); requires p not dividing den.
  std::uint64_t residue(const GammaArg& x) const;

  /// The unique m in [0, bound] congruent to v. Throws PrecisionError when
  /// v has negative valuation, is not a scalar, when the known digits do
  /// not determine m, or when no such m exists.
  std::int64_t reconstruct_integer(const QqNumber& v, std::uint64_t bound) const;

  // Unit-polynomial arithmetic modulo (f~, p^k). Public for QqNumber.
  std::vector<std::uint64_t> mul_units(std::span<const std::uint64_t> a,
                                       std::span<const std::uint64_t> b, int k) const;
  std::vector<std::uint64_t> inv_unit(std::span<const std::uint64_t> a, int k) const;

  explicit PadicCtx(FieldCtx field, int digits);

 private:
  QqNumber make_number(int val, int rel, std::vector<std::uint64_t> unit) const;
  std::vector<std::uint64_t> pow_units(std::vector<std::uint64_t> base, std::uint64_t e, int k) const;
  void build_gamma_blocks();
  void build_teichmuller_table();

  FieldCtx field_;
  int N_;
  std::vector<std::uint64_t> ppow_;
  std::vector<std::uint64_t> lift_;
  // blocks_[L] = coefficients of G_L(Y) = prod_{0<j<p^L, p∤j} (p^L Y + j),
  // truncated to degree < N, for L in [1, N).
  std::vector<std::vector<std::uint64_t>> blocks_;
  std::vector<QqNumber> omega_pow_;  // k -> omega(g^k)

  mutable std::mutex gamma_mutex_;
  mutable std::unordered_map<std::uint64_t, std::uint64_t> gamma_memo_;
};

}  // namespace dhcount
