#pragma once

#include <mpfr.h>

#include <cstdint>
#include <string>

namespace dhcount {

/// Owning wrapper around an mpfr_t. Binary operations round to the larger
/// of the two operand precisions, so precision never drops silently.
class Real {
 public:
  explicit Real(mpfr_prec_t bits = 192);
  Real(long value, mpfr_prec_t bits);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_prec_t bits() const { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  Real operator-() const;

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Decimal rendering with the given number of significant digits.
  std::string to_string(int digits = 40) const;

 private:
  void widen_to(mpfr_prec_t bits);
  mpfr_t v_;
};

Real abs(const Real& x);
/// Nearest integer; throws PrecisionError if it does not fit in int64.
std::int64_t round_to_int(const Real& x);

/// A complex number with MPFR real and imaginary parts, used for values of
/// characters, Gauss sums and Jacobi sums.
class CycValue {
 public:
  static constexpr mpfr_prec_t kMinPrecBits = 192;

  /// Zero at the given precision. Throws InvalidInput below kMinPrecBits.
  explicit CycValue(mpfr_prec_t bits = kMinPrecBits);
  CycValue(long re, long im, mpfr_prec_t bits);
  CycValue(Real re, Real im);

  /// exp(2 pi i k / m).
  static CycValue root_of_unity(std::int64_t k, std::int64_t m, mpfr_prec_t bits);

  mpfr_prec_t prec_bits() const { return re_.bits() < im_.bits() ? re_.bits() : im_.bits(); }
  const Real& re() const { return re_; }
  const Real& im() const { return im_; }

  CycValue& operator+=(const CycValue& o);
  CycValue& operator-=(const CycValue& o);
  CycValue& operator*=(const CycValue& o);
  CycValue& operator/=(const CycValue& o);
  CycValue& operator*=(long k);
  friend CycValue operator+(CycValue a, const CycValue& b) { return a += b; }
  friend CycValue operator-(CycValue a, const CycValue& b) { return a -= b; }
  friend CycValue operator*(CycValue a, const CycValue& b) { return a *= b; }
  friend CycValue operator/(CycValue a, const CycValue& b) { return a /= b; }
  friend CycValue operator*(CycValue a, long k) { return a *= k; }
  CycValue operator-() const { return CycValue(-re_, -im_); }

  CycValue conj() const { return CycValue(re_, -im_); }
  /// |z|^2
  Real norm() const;
  /// |z - w| (Euclidean).
  Real distance(const CycValue& w) const;

 private:
  Real re_, im_;
};

}  // namespace dhcount
