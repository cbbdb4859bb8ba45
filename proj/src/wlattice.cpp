#include "dhcount/wlattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "dhcount/errors.hpp"

namespace dhcount {

bool WeightVector::has_zero() const {
  return std::find(w.begin(), w.end(), 0u) != w.end();
}

bool WeightVector::is_zero() const {
  return std::all_of(w.begin(), w.end(), [](std::uint32_t x) { return x == 0; });
}

WeightVector WeightVector::negated() const {
  WeightVector out{w, t};
  for (auto& x : out.w) x = (t - x) % t;
  return out;
}

bool is_weight_vector(const WeightVector& w, std::size_t n) {
  if (w.t == 0 || w.size() != n) return false;
  std::uint64_t sum = 0;
  for (auto x : w.w) {
    if (x >= w.t) return false;
    sum += x;
  }
  return sum % w.t == 0;
}

std::vector<WeightVector> build_w_set(std::uint32_t n, std::uint32_t t) {
  if (n < 2) throw InvalidInput("W needs at least two coordinates");
  if (t < 1) throw InvalidInput("W needs a positive modulus");
  std::vector<WeightVector> out;
  // The first n-1 coordinates are free; the last is forced by the sum.
  std::vector<std::uint32_t> head(n - 1, 0);
  while (true) {
    std::uint64_t sum = 0;
    for (auto x : head) sum += x;
    WeightVector v{head, t};
    v.w.push_back(static_cast<std::uint32_t>((t - sum % t) % t));
    out.push_back(std::move(v));
    std::size_t i = head.size();
    while (i > 0 && head[i - 1] + 1 == t) head[--i] = 0;
    if (i == 0) break;
    ++head[i - 1];
  }
  // Forced last coordinates keep the order lexicographic already.
  return out;
}

WClassDecomposition partition_classes(std::span<const WeightVector> wset,
                                      std::span<const std::uint32_t> h, std::uint32_t t) {
  if (h.empty()) throw InvalidInput("empty exponent vector");
  std::uint32_t g = 0;
  for (auto x : h) g = std::gcd(g, x);
  if (g != 1) throw InvalidInput("exponent vector h must have gcd 1");

  WClassDecomposition out;
  out.t = t;
  out.h.assign(h.begin(), h.end());
  out.all.assign(wset.begin(), wset.end());
  std::sort(out.all.begin(), out.all.end());

  std::map<WeightVector, bool> assigned;
  for (const auto& w : out.all) {
    if (w.t != t || !is_weight_vector(w, h.size())) {
      throw InvalidInput("member of W is not a valid weight vector");
    }
    assigned[w] = false;
  }

  for (const auto& w : out.all) {
    if (assigned[w]) continue;
    WClass cls;
    for (std::uint32_t m = 0; m < t; ++m) {
      WeightVector v{w.w, t};
      for (std::size_t i = 0; i < v.w.size(); ++i) {
        v.w[i] = static_cast<std::uint32_t>((v.w[i] + std::uint64_t{m} * h[i]) % t);
      }
      auto it = assigned.find(v);
      if (it == assigned.end()) {
        throw InvalidInput("W is not closed under shifts by h");
      }
      if (!it->second) {
        it->second = true;
        cls.members.push_back(std::move(v));
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    cls.rep = cls.members.front();
    for (const auto& v : cls.members) {
      if (v.has_zero()) {
        cls.zero_rep = v;
        break;
      }
    }
    out.classes.push_back(std::move(cls));
  }
  return out;
}

DworkProfile dwork_profile(const WeightVector& w, std::uint32_t n, std::uint32_t t) {
  if (t == 0 || n % t != 0) {
    throw InvalidInput("t = " + std::to_string(t) + " does not divide n = " + std::to_string(n));
  }
  if (w.t != t || !is_weight_vector(w, n)) throw InvalidInput("invalid weight vector");

  DworkProfile prof;
  prof.n = n;
  prof.t = t;
  prof.counts.assign(t, 0);
  for (auto x : w.w) ++prof.counts[x];
  for (std::uint32_t k = 0; k < t; ++k) {
    (prof.counts[k] == 0 ? prof.missing : prof.present).push_back(k);
  }

  const std::int64_t tt = t;
  for (auto k : prof.missing) prof.top.emplace_back(tt - k, tt);
  const std::uint32_t step = n / t;
  for (std::uint32_t b = 0; b < n; ++b) {
    if (b % step != 0) prof.top.emplace_back(b, n);
  }
  for (auto k : prof.present) {
    for (std::uint32_t c = 1; c < prof.counts[k]; ++c) prof.bottom.emplace_back(tt - k, tt);
  }
  return prof;
}

}  // namespace dhcount
