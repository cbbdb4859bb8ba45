#include "dhcount/ffield.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "dhcount/errors.hpp"

namespace dhcount {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

using Poly = std::vector<std::uint32_t>;  // c_0, c_1, ... over F_p

// Coefficient vector of the idx-th vector in lexicographic order with c_0
// most significant.
Poly lex_vector(std::uint64_t idx, std::uint32_t p, std::uint32_t len) {
  Poly v(len);
  for (std::uint32_t i = len; i-- > 0;) {
    v[i] = static_cast<std::uint32_t>(idx % p);
    idx /= p;
  }
  return v;
}

std::uint32_t encode(const Poly& v, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = v.size(); i-- > 0;) code = code * p + v[i];
  return code;
}

Poly decode(std::uint32_t code, std::uint32_t p, std::uint32_t r) {
  Poly v(r);
  for (std::uint32_t i = 0; i < r; ++i) {
    v[i] = code % p;
    code /= p;
  }
  return v;
}

// Remainder of a modulo a monic polynomial m, over F_p.
Poly poly_rem(Poly a, const Poly& m, std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint64_t lead = a.back();
    if (lead != 0) {
      const std::size_t shift = a.size() - 1 - dm;
      for (std::size_t i = 0; i < dm; ++i) {
        const std::uint64_t sub = lead * m[i] % p;
        a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
      }
    }
    a.pop_back();
  }
  return a;
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  Poly rem = poly_rem(std::move(prod), m, p);
  rem.resize(m.size() - 1, 0);
  return rem;
}

Poly pow_mod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly result(m.size() - 1, 0);
  result[0] = 1;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, m, p);
    base = mul_mod(base, base, m, p);
    e >>= 1;
  }
  return result;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t r = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t deg = 1; 2 * deg <= r; ++deg) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g = lex_vector(idx, p, deg);
      g.push_back(1);
      Poly rem = poly_rem(f, g, p);
      bool zero = true;
      for (auto c : rem) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

bool has_full_order(const Poly& g, const Poly& m, std::uint32_t p, std::uint64_t q) {
  Poly one(m.size() - 1, 0);
  one[0] = 1;
  bool nonzero = false;
  for (auto c : g) nonzero = nonzero || c != 0;
  if (!nonzero) return false;
  if (pow_mod(g, q - 1, m, p) != one) return false;
  for (auto l : prime_factors(q - 1)) {
    if (pow_mod(g, (q - 1) / l, m, p) == one) return false;
  }
  return true;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

FieldCtx FieldCtx::make(std::uint32_t p, std::uint32_t r, std::uint64_t max_order) {
  if (!is_prime(p)) throw InvalidInput("characteristic " + std::to_string(p) + " is not prime");
  if (r < 1) throw InvalidInput("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < r; ++i) {
    q *= p;
    if (q > max_order) {
      throw InvalidInput("field order " + std::to_string(p) + "^" + std::to_string(r) +
                         " exceeds the table cap " + std::to_string(max_order));
    }
  }

  Poly modulus;
  for (std::uint64_t idx = 0; idx < q; ++idx) {
    Poly f = lex_vector(idx, p, r);
    f.push_back(1);
    if (is_irreducible(f, p)) {
      modulus = std::move(f);
      break;
    }
  }

  FieldElement gen{};
  for (std::uint64_t idx = 1; idx < q; ++idx) {
    Poly g = lex_vector(idx, p, r);
    if (has_full_order(g, modulus, p, q)) {
      gen = FieldElement{encode(g, p)};
      break;
    }
  }
  return FieldCtx(tabulate(p, r, std::move(modulus), gen));
}

std::shared_ptr<const FieldCtx::Tables> FieldCtx::tabulate(std::uint32_t p, std::uint32_t r,
                                                           std::vector<std::uint32_t> modulus,
                                                           FieldElement generator) {
  auto t = std::make_shared<Tables>();
  t->p = p;
  t->r = r;
  t->ptab.resize(r + 1);
  t->ptab[0] = 1;
  for (std::uint32_t i = 1; i <= r; ++i) t->ptab[i] = t->ptab[i - 1] * p;
  t->q = t->ptab[r];
  t->modulus = std::move(modulus);

  const std::uint32_t q = t->q;
  t->exp.resize(q - 1);
  t->log.assign(q, 0);
  std::vector<bool> seen(q, false);
  const Poly g = decode(generator.code, p, r);
  Poly cur(r, 0);
  cur[0] = 1;
  for (std::uint32_t k = 0; k + 1 < q; ++k) {
    const std::uint32_t code = encode(cur, p);
    if (code == 0 || seen[code]) {
      throw InvalidInput("element " + std::to_string(generator.code) +
                         " does not generate the multiplicative group");
    }
    seen[code] = true;
    t->exp[k] = FieldElement{code};
    t->log[code] = k;
    cur = mul_mod(cur, g, t->modulus, p);
  }
  return t;
}

FieldCtx FieldCtx::with_generator(FieldElement g) const {
  if (g.code >= q() || g.is_zero() || std::gcd(dlog(g), q() - 1) != 1) {
    throw InvalidInput("element " + std::to_string(g.code) + " is not primitive");
  }
  return FieldCtx(tabulate(p(), r(), modulus(), g));
}

FieldElement FieldCtx::primitive_element(std::size_t k) const {
  std::size_t seen = 0;
  for (std::uint64_t idx = 1; idx < q(); ++idx) {
    const FieldElement x{encode(lex_vector(idx, p(), r()), p())};
    if (x.is_zero()) continue;
    if (std::gcd(dlog(x), q() - 1) == 1) {
      if (seen == k) return x;
      ++seen;
    }
  }
  throw InvalidInput("field has fewer than " + std::to_string(k + 1) + " primitive elements");
}

FieldElement FieldCtx::from_int(std::int64_t v) const {
  return FieldElement{static_cast<std::uint32_t>(mod_floor(v, p()))};
}

FieldElement FieldCtx::from_coeffs(std::span<const std::uint32_t> c) const {
  if (c.size() > r()) throw InvalidInput("too many coefficients for F_q element");
  Poly v(c.begin(), c.end());
  for (auto x : v) {
    if (x >= p()) throw InvalidInput("coefficient not reduced mod p");
  }
  return FieldElement{encode(v, p())};
}

std::vector<std::uint32_t> FieldCtx::coeffs(FieldElement x) const {
  return decode(x.code, p(), r());
}

std::vector<FieldElement> FieldCtx::elements() const {
  std::vector<FieldElement> out(q());
  for (std::uint32_t c = 0; c < q(); ++c) out[c] = FieldElement{c};
  return out;
}

FieldElement FieldCtx::add(FieldElement x, FieldElement y) const {
  if (r() == 1) return FieldElement{(x.code + y.code) % p()};
  std::uint32_t out = 0;
  for (std::uint32_t i = 0; i < r(); ++i) {
    const std::uint32_t a = x.code / t_->ptab[i] % p();
    const std::uint32_t b = y.code / t_->ptab[i] % p();
    out += (a + b) % p() * t_->ptab[i];
  }
  return FieldElement{out};
}

FieldElement FieldCtx::neg(FieldElement x) const {
  std::uint32_t out = 0;
  for (std::uint32_t i = 0; i < r(); ++i) {
    const std::uint32_t a = x.code / t_->ptab[i] % p();
    out += (p() - a) % p() * t_->ptab[i];
  }
  return FieldElement{out};
}

FieldElement FieldCtx::sub(FieldElement x, FieldElement y) const { return add(x, neg(y)); }

FieldElement FieldCtx::mul(FieldElement x, FieldElement y) const {
  if (x.is_zero() || y.is_zero()) return zero();
  std::uint32_t k = t_->log[x.code] + t_->log[y.code];
  if (k >= q() - 1) k -= q() - 1;
  return t_->exp[k];
}

FieldElement FieldCtx::inv(FieldElement x) const {
  if (x.is_zero()) throw std::domain_error("inverse of zero in F_q");
  const std::uint32_t k = t_->log[x.code];
  return t_->exp[k == 0 ? 0 : q() - 1 - k];
}

FieldElement FieldCtx::pow(FieldElement x, std::int64_t e) const {
  if (x.is_zero()) {
    if (e < 0) throw std::domain_error("negative power of zero in F_q");
    return e == 0 ? one() : zero();
  }
  const std::int64_t m = q() - 1;
  const std::int64_t k = mod_floor(static_cast<std::int64_t>(t_->log[x.code]) * mod_floor(e, m), m);
  return t_->exp[static_cast<std::size_t>(k)];
}

FieldElement FieldCtx::exp(std::int64_t k) const {
  return t_->exp[static_cast<std::size_t>(mod_floor(k, q() - 1))];
}

std::uint32_t FieldCtx::dlog(FieldElement x) const {
  if (x.is_zero()) throw std::domain_error("discrete logarithm of zero");
  return t_->log[x.code];
}

std::uint32_t FieldCtx::trace(FieldElement x) const {
  FieldElement acc = zero();
  FieldElement cur = x;
  for (std::uint32_t i = 0; i < r(); ++i) {
    acc = add(acc, cur);
    cur = frobenius(cur);
  }
  // The trace lies in the prime field, i.e. only the constant coordinate.
  if (acc.code >= p()) throw std::logic_error("trace left the prime field");
  return acc.code;
}

}  // namespace dhcount
