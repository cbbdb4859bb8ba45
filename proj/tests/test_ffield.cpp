#include <doctest.h>

#include <set>

#include "dhcount/errors.hpp"
#include "dhcount/ffield.hpp"

using namespace dhcount;

namespace {

std::uint32_t order_of(const FieldCtx& f, FieldElement x) {
  std::uint32_t k = 1;
  for (FieldElement y = x; !(y == f.one()); y = f.mul(y, x)) ++k;
  return k;
}

}  // namespace

TEST_CASE("prime helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9));
  CHECK(prime_factors(12) == std::vector<std::uint64_t>{2, 3});
  CHECK(prime_factors(1).empty());
}

TEST_CASE("prime field F_7 uses the smallest primitive root") {
  const auto f = FieldCtx::make(7, 1);
  CHECK(f.q() == 7);
  CHECK(f.generator().code == 3);
  CHECK(f.dlog(f.one()) == 0);
  CHECK(f.dlog({3}) == 1);
  CHECK(f.dlog({6}) == 3);
  CHECK(f.trace({5}) == 5);
}

TEST_CASE("F_9 canonical modulus is x^2 + 1") {
  const auto f = FieldCtx::make(3, 2);
  CHECK(f.modulus() == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(order_of(f, f.generator()) == 8);
  CHECK(f.trace(f.zero()) == 0);
  for (auto x : f.elements()) {
    // Tr(x) = x + x^3 lands in the prime field.
    const FieldElement tr = f.add(x, f.pow(x, 3));
    CHECK(tr.code == f.trace(x));
  }
}

TEST_CASE("invalid field parameters") {
  CHECK_THROWS_AS(FieldCtx::make(4, 1), InvalidInput);
  CHECK_THROWS_AS(FieldCtx::make(5, 0), InvalidInput);
  const auto f = FieldCtx::make(5, 1);
  CHECK_THROWS_AS(f.dlog(f.zero()), std::domain_error);
  CHECK_THROWS(f.inv(f.zero()));
}

TEST_CASE("F_2 is supported") {
  const auto f = FieldCtx::make(2, 1);
  CHECK(f.q() == 2);
  CHECK(f.generator() == f.one());
}

TEST_CASE("field axioms and tables, exhaustive for small q") {
  for (auto [p, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 3}, {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 1}, {11, 1}, {13, 1}, {2, 4}}) {
    CAPTURE(p);
    CAPTURE(r);
    const auto f = FieldCtx::make(p, r);
    const auto els = f.elements();
    REQUIRE(els.size() == f.q());
    CHECK(order_of(f, f.generator()) == f.q() - 1);

    std::set<std::uint32_t> logs;
    std::set<std::uint32_t> traces;
    std::uint32_t fixed = 0;
    std::set<std::uint32_t> frob_image;
    for (auto x : els) {
      traces.insert(f.trace(x));
      CHECK(f.trace(x) < p);
      frob_image.insert(f.frobenius(x).code);
      if (f.frobenius(x) == x) ++fixed;
      CHECK(f.add(x, f.neg(x)).is_zero());
      if (x.is_zero()) continue;
      logs.insert(f.dlog(x));
      CHECK(f.exp(f.dlog(x)) == x);
      CHECK(f.mul(x, f.inv(x)) == f.one());
      for (auto y : els) {
        CHECK(f.trace(f.add(x, y)) == (f.trace(x) + f.trace(y)) % p);
        if (y.is_zero()) continue;
        CHECK(f.dlog(f.mul(x, y)) == (f.dlog(x) + f.dlog(y)) % (f.q() - 1));
      }
    }
    CHECK(logs.size() == f.q() - 1);
    CHECK(traces.size() == p);
    CHECK(frob_image.size() == f.q());
    CHECK(fixed == p);
  }
}

TEST_CASE("distributivity sampled in F_25") {
  const auto f = FieldCtx::make(5, 2);
  const auto els = f.elements();
  for (std::size_t i = 0; i < els.size(); i += 3) {
    for (std::size_t j = 0; j < els.size(); j += 5) {
      for (std::size_t k = 0; k < els.size(); k += 7) {
        const auto x = els[i], y = els[j], z = els[k];
        CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
        CHECK(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
      }
    }
  }
}

TEST_CASE("alternative generators") {
  const auto f = FieldCtx::make(13, 1);
  const auto g1 = f.primitive_element(1);
  CHECK(order_of(f, g1) == 12);
  CHECK_FALSE(g1 == f.generator());
  const auto f1 = f.with_generator(g1);
  CHECK(f1.generator() == g1);
  CHECK(f1.dlog(g1) == 1);
  CHECK_THROWS_AS(f.with_generator({3}), InvalidInput);  // 3 has order 3 mod 13
}

TEST_CASE("coefficient round trip") {
  const auto f = FieldCtx::make(3, 3);
  for (auto x : f.elements()) CHECK(f.from_coeffs(f.coeffs(x)) == x);
  CHECK(f.from_int(-1) == f.neg(f.one()));
  CHECK(f.pow(f.generator(), -1) == f.inv(f.generator()));
}
