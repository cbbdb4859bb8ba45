#include "dhcount/charsum.hpp"

#include "dhcount/errors.hpp"

namespace dhcount {

CharSums::CharSums(FieldCtx field, mpfr_prec_t bits)
    : field_(std::move(field)), bits_(bits), gauss_memo_(field_.q() - 1) {
  const std::uint32_t m = order();
  zeta_qm1_.reserve(m);
  for (std::uint32_t k = 0; k < m; ++k) zeta_qm1_.push_back(CycValue::root_of_unity(k, m, bits));
  zeta_p_.reserve(field_.p());
  for (std::uint32_t k = 0; k < field_.p(); ++k) {
    zeta_p_.push_back(CycValue::root_of_unity(k, field_.p(), bits));
  }
  trace_of_power_.resize(m);
  for (std::uint32_t k = 0; k < m; ++k) trace_of_power_[k] = field_.trace(field_.exp(k));
}

std::uint32_t CharSums::reduce(std::int64_t j) const {
  const std::int64_t m = order();
  std::int64_t r = j % m;
  if (r < 0) r += m;
  return static_cast<std::uint32_t>(r);
}

const CycValue& CharSums::zeta(std::int64_t k) const { return zeta_qm1_[reduce(k)]; }

std::uint32_t CharSums::char_exponent(std::int64_t j, FieldElement x) const {
  const std::uint64_t e = std::uint64_t{reduce(j)} * field_.dlog(x);
  return static_cast<std::uint32_t>(e % order());
}

CycValue CharSums::mult_char(std::int64_t j, FieldElement x) const {
  if (x.is_zero()) return CycValue(bits_);
  return zeta_qm1_[char_exponent(j, x)];
}

CycValue CharSums::additive_char(FieldElement x) const { return zeta_p_[field_.trace(x)]; }

CycValue CharSums::compute_gauss(std::uint32_t j) const {
  // Histogram over (character exponent, trace) pairs, then one complex
  // multiply per occupied cell.
  const std::uint32_t m = order();
  const std::uint32_t p = field_.p();
  std::vector<std::int64_t> cells(std::size_t{m} * p, 0);
  for (std::uint32_t k = 0; k < m; ++k) {
    const std::uint32_t e = static_cast<std::uint32_t>(std::uint64_t{j} * k % m);
    ++cells[std::size_t{e} * p + trace_of_power_[k]];
  }
  CycValue acc(bits_);
  for (std::uint32_t e = 0; e < m; ++e) {
    for (std::uint32_t tr = 0; tr < p; ++tr) {
      const std::int64_t c = cells[std::size_t{e} * p + tr];
      if (c != 0) acc += zeta_qm1_[e] * zeta_p_[tr] * static_cast<long>(c);
    }
  }
  return acc;
}

CycValue CharSums::gauss(std::int64_t j) const {
  const std::uint32_t jr = reduce(j);
  {
    std::lock_guard lock(memo_mutex_);
    if (gauss_memo_[jr]) return *gauss_memo_[jr];
  }
  CycValue value = compute_gauss(jr);
  std::lock_guard lock(memo_mutex_);
  if (!gauss_memo_[jr]) gauss_memo_[jr] = value;
  return *gauss_memo_[jr];
}

std::vector<std::int64_t> CharSums::jacobi_histogram(std::span<const std::int64_t> js,
                                                     FieldElement alpha) const {
  if (js.empty()) throw InvalidInput("Jacobi sum needs at least one character");
  const std::uint32_t m = order();
  const std::uint32_t q = field_.q();
  const std::size_t k = js.size();
  std::vector<std::uint32_t> jr(k);
  for (std::size_t i = 0; i < k; ++i) jr[i] = reduce(js[i]);

  std::vector<std::int64_t> hist(m, 0);
  // Odometer over (t_1, ..., t_{k-1}); t_k is forced. partial[i] holds
  // t_1 + ... + t_i and expo[i] the accumulated exponent, with zero
  // coordinates pruned since every character vanishes at 0.
  std::vector<std::uint32_t> digit(k, 0);
  std::vector<FieldElement> partial(k, field_.zero());
  std::vector<std::uint32_t> expo(k, 0);

  auto finish = [&](FieldElement sum, std::uint32_t e) {
    const FieldElement last = field_.sub(alpha, sum);
    if (last.is_zero()) return;
    const std::uint64_t total = e + std::uint64_t{jr[k - 1]} * field_.dlog(last);
    ++hist[total % m];
  };

  if (k == 1) {
    finish(field_.zero(), 0);
    return hist;
  }

  // Depth-first enumeration with the nonzero values 1..q-1 at each level.
  std::size_t level = 0;
  digit[0] = 0;
  while (true) {
    if (digit[level] + 1 >= q) {
      if (level == 0) break;
      digit[level] = 0;
      --level;
      continue;
    }
    ++digit[level];
    const FieldElement t{digit[level]};
    const FieldElement prev_sum = level == 0 ? field_.zero() : partial[level - 1];
    const std::uint32_t prev_e = level == 0 ? 0 : expo[level - 1];
    partial[level] = field_.add(prev_sum, t);
    expo[level] = static_cast<std::uint32_t>((prev_e + std::uint64_t{jr[level]} * field_.dlog(t)) % m);
    if (level + 2 == k) {
      finish(partial[level], expo[level]);
    } else {
      ++level;
      digit[level] = 0;
    }
  }
  return hist;
}

CycValue CharSums::from_histogram(std::span<const std::int64_t> hist) const {
  CycValue acc(bits_);
  for (std::size_t e = 0; e < hist.size(); ++e) {
    if (hist[e] != 0) acc += zeta_qm1_[e] * static_cast<long>(hist[e]);
  }
  return acc;
}

CycValue CharSums::jacobi_alpha(std::span<const std::int64_t> js, FieldElement alpha) const {
  return from_histogram(jacobi_histogram(js, alpha));
}

CycValue CharSums::jacobi(std::span<const std::int64_t> js) const {
  return jacobi_alpha(js, field_.one());
}

CycValue CharSums::jacobi_zero(std::span<const std::int64_t> js) const {
  return jacobi_alpha(js, field_.zero());
}

CycValue CharSums::jacobi_via_gauss(std::span<const std::int64_t> js) const {
  if (js.empty()) throw InvalidInput("Jacobi sum needs at least one character");
  const long q = field_.q();
  bool all_trivial = true;
  std::int64_t total = 0;
  for (auto j : js) {
    all_trivial = all_trivial && reduce(j) == 0;
    total += reduce(j);
  }
  if (all_trivial) {
    // [(q-1)^k + (-1)^{k+1}] / q, computed exactly in integers.
    long num = 1;
    for (std::size_t i = 0; i < js.size(); ++i) num *= q - 1;
    num += js.size() % 2 == 1 ? 1 : -1;
    return CycValue(num / q, 0, bits_);
  }
  CycValue prod(1, 0, bits_);
  for (auto j : js) prod *= gauss(j);
  if (reduce(total) != 0) return prod / gauss(total);
  return -(prod / CycValue(q, 0, bits_));
}

}  // namespace dhcount
