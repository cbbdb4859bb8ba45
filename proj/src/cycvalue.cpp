#include "dhcount/cycvalue.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>

#include "dhcount/errors.hpp"

namespace dhcount {

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

Real::Real(long value, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_si(v_, value, MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(v_, other.bits());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept : Real(other.bits()) { mpfr_swap(v_, other.v_); }

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.bits());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

void Real::widen_to(mpfr_prec_t bits) {
  if (bits > this->bits()) mpfr_prec_round(v_, bits, MPFR_RNDN);
}

Real& Real::operator+=(const Real& o) {
  widen_to(o.bits());
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  widen_to(o.bits());
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  widen_to(o.bits());
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  widen_to(o.bits());
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real out(*this);
  mpfr_neg(out.v_, out.v_, MPFR_RNDN);
  return out;
}

std::string Real::to_string(int digits) const {
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Rg", digits, v_);
  std::unique_ptr<char, void (*)(char*)> guard(raw, [](char* s) { mpfr_free_str(s); });
  return std::string(raw);
}

Real abs(const Real& x) {
  Real out(x);
  mpfr_abs(out.get(), out.get(), MPFR_RNDN);
  return out;
}

std::int64_t round_to_int(const Real& x) {
  Real r(x.bits());
  mpfr_round(r.get(), x.get());
  if (!mpfr_fits_slong_p(r.get(), MPFR_RNDN)) {
    throw PrecisionError("value does not fit in a 64-bit integer");
  }
  return mpfr_get_si(r.get(), MPFR_RNDN);
}

CycValue::CycValue(mpfr_prec_t bits) : re_(bits), im_(bits) {
  if (bits < kMinPrecBits) {
    throw InvalidInput("complex working precision below " + std::to_string(kMinPrecBits) + " bits");
  }
}

CycValue::CycValue(long re, long im, mpfr_prec_t bits) : CycValue(bits) {
  mpfr_set_si(re_.get(), re, MPFR_RNDN);
  mpfr_set_si(im_.get(), im, MPFR_RNDN);
}

CycValue::CycValue(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {
  if (prec_bits() < kMinPrecBits) {
    throw InvalidInput("complex working precision below " + std::to_string(kMinPrecBits) + " bits");
  }
}

CycValue CycValue::root_of_unity(std::int64_t k, std::int64_t m, mpfr_prec_t bits) {
  k %= m;
  if (k < 0) k += m;
  if (k == 0) return CycValue(1, 0, bits);
  if (2 * k == m) return CycValue(-1, 0, bits);
  if (4 * k == m) return CycValue(0, 1, bits);
  if (4 * k == 3 * m) return CycValue(0, -1, bits);
  // Evaluate with guard bits so the rounded result is correct to `bits`.
  const mpfr_prec_t work = bits + 32;
  Real angle(work);
  mpfr_const_pi(angle.get(), MPFR_RNDN);
  mpfr_mul_si(angle.get(), angle.get(), 2 * k, MPFR_RNDN);
  mpfr_div_si(angle.get(), angle.get(), m, MPFR_RNDN);
  Real c(bits), s(bits);
  mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
  return CycValue(std::move(c), std::move(s));
}

CycValue& CycValue::operator+=(const CycValue& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

CycValue& CycValue::operator-=(const CycValue& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

CycValue& CycValue::operator*=(const CycValue& o) {
  Real re = re_ * o.re_ - im_ * o.im_;
  Real im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

CycValue& CycValue::operator/=(const CycValue& o) {
  const Real den = o.norm();
  if (mpfr_zero_p(den.get())) throw std::domain_error("division by zero complex value");
  Real re = (re_ * o.re_ + im_ * o.im_) / den;
  Real im = (im_ * o.re_ - re_ * o.im_) / den;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

CycValue& CycValue::operator*=(long k) {
  mpfr_mul_si(re_.get(), re_.get(), k, MPFR_RNDN);
  mpfr_mul_si(im_.get(), im_.get(), k, MPFR_RNDN);
  return *this;
}

Real CycValue::norm() const { return re_ * re_ + im_ * im_; }

Real CycValue::distance(const CycValue& w) const {
  CycValue diff = *this - w;
  Real n = diff.norm();
  mpfr_sqrt(n.get(), n.get(), MPFR_RNDN);
  return n;
}

}  // namespace dhcount
