#include "dhcount/deform.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dhcount/errors.hpp"

namespace dhcount {

DeformParams DeformParams::make(FieldCtx field, std::vector<std::uint32_t> h, FieldElement lambda) {
  if (h.size() < 2) throw InvalidInput("need at least two variables");
  std::uint32_t g = 0;
  std::uint64_t d = 0;
  for (auto x : h) {
    if (x < 1) throw InvalidInput("exponents h_i must be positive");
    g = std::gcd(g, x);
    d += x;
  }
  if (g != 1) throw InvalidInput("exponents h_i must have gcd 1");
  if (lambda.code >= field.q()) throw InvalidInput("lambda is not an element of F_q");
  DeformParams dp{std::move(field), std::move(h), lambda};
  dp.n = static_cast<std::uint32_t>(dp.h.size());
  dp.d = static_cast<std::uint32_t>(d);
  dp.t = std::gcd(dp.d, dp.field.q() - 1);
  return dp;
}

DeformParams DeformParams::dwork(FieldCtx field, std::uint32_t n, FieldElement lambda) {
  return make(std::move(field), std::vector<std::uint32_t>(n, 1), lambda);
}

DeformParams DeformParams::with_lambda(FieldElement l) const {
  DeformParams out = *this;
  if (l.code >= field.q()) throw InvalidInput("lambda is not an element of F_q");
  out.lambda = l;
  return out;
}

bool DeformParams::is_dwork() const {
  return std::all_of(h.begin(), h.end(), [](std::uint32_t x) { return x == 1; });
}

FieldElement DeformParams::deformation_coefficient() const {
  return field.mul(field.from_int(d), lambda);
}

FieldElement DeformParams::hypergeometric_argument() const {
  FieldElement z = field.pow(lambda, d);
  for (auto hi : h) z = field.mul(z, field.pow(field.from_int(hi), hi));
  return z;
}

bool DeformParams::p_divides_dh() const {
  const std::uint32_t p = field.p();
  if (d % p == 0) return true;
  return std::any_of(h.begin(), h.end(), [p](std::uint32_t x) { return x % p == 0; });
}

std::int64_t DeformParams::hyperplane_count() const {
  std::int64_t s = 0, pw = 1;
  for (std::uint32_t i = 0; i + 1 < n; ++i) {
    s += pw;
    pw *= field.q();
  }
  return s;
}

std::uint64_t DeformParams::projective_size() const {
  std::uint64_t s = 0, pw = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    s += pw;
    pw *= field.q();
  }
  return s;
}

std::string DeformParams::describe() const {
  std::ostringstream os;
  os << "q=" << field.q() << " n=" << n << " h=(";
  for (std::size_t i = 0; i < h.size(); ++i) os << (i ? "," : "") << h[i];
  os << ") d=" << d << " t=" << t << " lambda=" << lambda.code;
  return os.str();
}

}  // namespace dhcount
