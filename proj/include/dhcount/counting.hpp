#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dhcount/charsum.hpp"
#include "dhcount/deform.hpp"
#include "dhcount/hyperg.hpp"
#include "dhcount/padic.hpp"
#include "dhcount/wlattice.hpp"

namespace dhcount {

/// How the (s, w) double sums are taken: s < (q-1)/t over all of W, or
/// s over [0, q-2] with one representative per class.
enum class SumMode { kShort, kLong };

/// Diagnostics filled in by the engines.
struct EngineStats {
  double residual = 0.0;  // complex engines: distance to the nearest integer
  int precision = 0;      // bits (complex) or p-adic digits
};

/// Accept a complex value when it is this close to an integer.
inline constexpr double kRoundingTolerance = 1e-6;

// ---------------------------------------------------------------- oracles

/// Points of P^{n-1}(F_q) on the hypersurface, by enumeration.
std::int64_t brute_projective(const DeformParams& dp);
/// Points with all coordinates nonzero, by enumeration.
std::int64_t brute_affine_star(const DeformParams& dp);

// ---------------------------------------------------------------- complex engines

std::int64_t weil_diagonal_projective(const CharSums& sums, std::uint32_t n, std::uint32_t d,
                                      EngineStats* stats = nullptr);
std::int64_t weil_diagonal_affine_star(const CharSums& sums, std::uint32_t n, std::uint32_t d,
                                       EngineStats* stats = nullptr);
/// Requires d lambda != 0.
std::int64_t cor1_affine_star(const CharSums& sums, const DeformParams& dp,
                              EngineStats* stats = nullptr);
std::int64_t thm2_projective(const CharSums& sums, const DeformParams& dp,
                             EngineStats* stats = nullptr);
/// In long mode, reps (one per class) may replace the canonical ones.
std::int64_t corthm2_projective(const CharSums& sums, const DeformParams& dp, SumMode mode,
                                std::span<const WeightVector> reps = {},
                                EngineStats* stats = nullptr);
/// Dwork case h = (1, ..., 1). Requires n lambda != 0.
std::int64_t dwork_gauss_projective(const CharSums& sums, std::uint32_t n, FieldElement lambda,
                                    SumMode mode = SumMode::kShort,
                                    std::span<const WeightVector> reps = {},
                                    EngineStats* stats = nullptr);

// ---------------------------------------------------------------- p-adic engines

/// A context with enough digits to reconstruct counts for (field, n).
std::shared_ptr<const PadicCtx> padic_context_for(const FieldCtx& field, std::uint32_t n,
                                                  int pad = PadicCtx::kDefaultPad);

std::int64_t main_padic_projective(const PadicCtx& ctx, const DeformParams& dp,
                                   MainVariant variant = MainVariant::kMain,
                                   std::span<const WeightVector> reps = {},
                                   EngineStats* stats = nullptr);
std::int64_t gcd1_padic_projective(const PadicCtx& ctx, const DeformParams& dp,
                                   EngineStats* stats = nullptr);
/// reps must contain one zero-containing member per class.
std::int64_t dwork_padic_projective(const PadicCtx& ctx, std::uint32_t n, FieldElement lambda,
                                    std::span<const WeightVector> reps = {},
                                    EngineStats* stats = nullptr);

/// The class sum of the main count before reconstruction.
QqNumber main_padic_value(const PadicCtx& ctx, const DeformParams& dp, MainVariant variant,
                          std::span<const WeightVector> reps = {});
/// One term C(w) * G(...) of the main count, for inspection.
QqNumber main_padic_class_term(const PadicCtx& ctx, const DeformParams& dp, const WeightVector& w,
                               MainVariant variant);
/// One term C(w0) * G(A; B | lambda^n) of the Dwork count.
QqNumber dwork_padic_class_term(const PadicCtx& ctx, std::uint32_t n, FieldElement lambda,
                                const WeightVector& w0);

// ---------------------------------------------------------------- dispatch

enum class Engine {
  kBrute,
  kBruteAffineStar,
  kWeil,
  kWeilAffineStar,
  kCor1AffineStar,
  kThm2,
  kCorThm2Short,
  kCorThm2Long,
  kPadicMain,
  kPadicSwapped,
  kPadicGcd1,
  kDworkGauss,
  kDworkGaussLong,
  kDworkPadic,
};

struct EngineInfo {
  Engine id;
  std::string_view name;
  bool affine_star;  // counts (F_q^*)^n rather than P^{n-1}
  bool padic;
};

std::span<const EngineInfo> all_engines();
const EngineInfo& engine_info(Engine e);
/// Throws InvalidInput for an unknown name.
Engine engine_from_name(std::string_view name);

struct CountReport {
  std::string engine;
  std::int64_t count = 0;
  double residual = 0.0;
  int precision = 0;
  double ms = 0.0;
};

/// Shared, lazily built character-sum and p-adic contexts for one field.
class EngineContext {
 public:
  explicit EngineContext(FieldCtx field, mpfr_prec_t bits = CycValue::kMinPrecBits,
                         int padic_pad = PadicCtx::kDefaultPad);

  const FieldCtx& field() const { return field_; }
  const CharSums& sums() const;
  /// Throws PreconditionError for p = 2.
  const PadicCtx& padic(std::uint32_t n) const;

 private:
  FieldCtx field_;
  mpfr_prec_t bits_;
  int pad_;
  mutable std::mutex mutex_;
  mutable std::unique_ptr<CharSums> sums_;
  mutable std::map<std::uint32_t, std::shared_ptr<const PadicCtx>> padic_;
};

/// Runs one engine; throws PreconditionError when it does not apply.
CountReport run_engine(Engine e, const EngineContext& ctx, const DeformParams& dp);

}  // namespace dhcount
