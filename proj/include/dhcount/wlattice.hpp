#pragma once

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace dhcount {

using Rational = boost::rational<std::int64_t>;

/// (w_1, ..., w_n) with 0 <= w_i < t and sum w_i = 0 mod t.
struct WeightVector {
  std::vector<std::uint32_t> w;
  std::uint32_t t = 1;

  std::size_t size() const { return w.size(); }
  std::uint32_t operator[](std::size_t i) const { return w[i]; }
  bool has_zero() const;
  bool all_nonzero() const { return !has_zero(); }
  bool is_zero() const;
  /// (-w_i mod t)_i
  WeightVector negated() const;

  friend auto operator<=>(const WeightVector&, const WeightVector&) = default;
};

struct WClass {
  std::vector<WeightVector> members;  // ascending
  WeightVector rep;                   // lexicographically smallest member
  /// Smallest member with a zero coordinate. Always present when some h_i
  /// is a unit mod t, in particular for h = (1, ..., 1).
  std::optional<WeightVector> zero_rep;
};

struct WClassDecomposition {
  std::uint32_t t = 1;
  std::vector<std::uint32_t> h;
  std::vector<WeightVector> all;
  std::vector<WClass> classes;  // ordered by representative
};

/// Coordinate statistics of w in the Dwork setting h = (1, ..., 1), d = n,
/// together with the hypergeometric parameter lists built from them.
struct DworkProfile {
  std::uint32_t n = 0, t = 1;
  std::vector<std::uint32_t> counts;   // counts[k] = n_k, k in [0, t)
  std::vector<std::uint32_t> missing;  // S_w
  std::vector<std::uint32_t> present;  // complement of S_w
  std::vector<Rational> top;           // A_w
  std::vector<Rational> bottom;        // B_w
};

/// All of W for (n, t) in lexicographic order; t^{n-1} vectors.
std::vector<WeightVector> build_w_set(std::uint32_t n, std::uint32_t t);

/// Orbits of w -> w + m h (mod t). Throws InvalidInput unless gcd(h) = 1
/// and every member of wset is a valid (n, t) weight vector.
WClassDecomposition partition_classes(std::span<const WeightVector> wset,
                                      std::span<const std::uint32_t> h, std::uint32_t t);

/// Throws InvalidInput if t does not divide n or w is not a valid weight.
DworkProfile dwork_profile(const WeightVector& w, std::uint32_t n, std::uint32_t t);

/// True iff w has length n, entries < t and coordinate sum divisible by t.
bool is_weight_vector(const WeightVector& w, std::size_t n);

}  // namespace dhcount
