#pragma once

// Identity and property checks shared by the unit tests and the
// acceptance runner. Each returns a tally instead of asserting.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dhcount/charsum.hpp"
#include "dhcount/counting.hpp"
#include "dhcount/padic.hpp"

namespace dhcount::testing {

struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  double worst = 0.0;  // largest complex residual seen
  std::string first_failure;

  bool ok() const { return checks > 0 && failures == 0; }
  void record(bool pass, const std::string& what);
  void residual(double r, double tol, const std::string& what);
  Tally& operator+=(const Tally& o);
};

inline constexpr double kIdentityTol = 1e-20;

/// Exhaustive when `exhaustive`, otherwise `samples` random tuples.
struct Coverage {
  bool exhaustive = true;
  std::size_t samples = 0;
};

// ---- complex side
Tally check_gauss_conj(const CharSums& cs);
Tally check_jacobi_zero(const CharSums& cs, Coverage cov, std::mt19937_64& rng);
Tally check_jacobi_reduction(const CharSums& cs, Coverage cov, std::mt19937_64& rng);
Tally check_jacobi_all_trivial(const CharSums& cs);
Tally check_jacobi_to_gauss(const CharSums& cs, Coverage cov, std::mt19937_64& rng);

// ---- p-adic side
/// Gamma_p against the defining product for every n below the bound.
Tally check_gamma_naive(const PadicCtx& ctx, std::uint64_t below);
Tally check_gamma_continuity(const PadicCtx& ctx, std::size_t samples, std::mt19937_64& rng);
Tally check_gamma_multiplication(const PadicCtx& ctx, std::uint32_t h);
Tally check_norm_relation(const PadicCtx& ctx);
Tally check_zero_cancellation(const PadicCtx& ctx, std::size_t sets, std::mt19937_64& rng);

// ---- counting
/// Every engine applicable at dp against the brute-force oracles.
Tally check_all_engines(const EngineContext& ec, const DeformParams& dp);

/// Random representative per class (a zero-containing one if requested).
std::vector<WeightVector> random_reps(const DeformParams& dp, bool zero_containing,
                                      std::mt19937_64& rng);

}  // namespace dhcount::testing
