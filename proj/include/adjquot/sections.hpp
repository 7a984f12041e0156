#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "adjquot/core.hpp"

namespace adjquot {

/// Exponent vector, parallel to the owning system's variable list.
struct Monomial {
  std::vector<int64_t> exponents;

  bool operator==(const Monomial&) const = default;

  int64_t degree() const {
    int64_t d = 0;
    for (int64_t e : exponents) d = checked_add(d, e);
    return d;
  }

  int64_t weight(const LinearizedSystem& sys) const {
    int64_t w = 0;
    for (size_t t = 0; t < exponents.size(); ++t)
      w = checked_add(w, checked_mul(exponents[t], sys.variables[t].weight));
    return floormod(w, sys.p);
  }

  /// Variable indices with positive exponent.
  std::vector<int> support(const LinearizedSystem& sys) const {
    std::vector<int> s;
    for (size_t t = 0; t < exponents.size(); ++t)
      if (exponents[t] > 0) s.push_back(sys.variables[t].index);
    return s;
  }
};

struct SectionBasis {
  LinearizedSystem system;
  std::vector<Monomial> monomials;  // lex ascending on exponent vectors
};

/// C(n, k) clamped at `cap` (returns cap+1 once exceeded).
inline int64_t binomial_capped(int64_t n, int64_t k, int64_t cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 r = 1;
  for (int64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return int64_t(r);
}

inline constexpr int64_t default_enumeration_cap = 10'000'000;

/// All degree-d monomials in the system's variables with weight = c mod p,
/// in ascending lexicographic order on exponent vectors.
inline SectionBasis enumerate_basis(const LinearizedSystem& sys,
                                    int64_t cap = default_enumeration_cap) {
  const int v = int(sys.variables.size());
  const int64_t d = sys.degree;
  int64_t raw = binomial_capped(d + v - 1, v - 1, cap);
  if (raw > cap)
    throw error(errc::too_large, "raw monomial count exceeds enumeration cap");

  SectionBasis basis;
  basis.system = sys;
  std::vector<int64_t> e(size_t(v), 0);
  auto rec = [&](auto&& self, int pos, int64_t rem, int64_t wacc) -> void {
    if (pos == v - 1) {
      e[size_t(pos)] = rem;
      int64_t w = floormod(wacc + rem * sys.variables[size_t(pos)].weight, sys.p);
      if (w == floormod(sys.character, sys.p)) basis.monomials.push_back(Monomial{e});
      return;
    }
    for (int64_t e0 = 0; e0 <= rem; ++e0) {
      e[size_t(pos)] = e0;
      self(self, pos + 1, rem - e0, wacc + e0 * sys.variables[size_t(pos)].weight);
    }
    e[size_t(pos)] = 0;
  };
  if (v == 0) {
    if (d == 0 && floormod(sys.character, sys.p) == 0)
      basis.monomials.push_back(Monomial{{}});
  } else {
    rec(rec, 0, d, 0);
  }
  return basis;
}

/// |enumerate_basis| by dynamic programming over (remaining degree, weight
/// residue); no monomials are materialized.
inline int64_t count_basis(const LinearizedSystem& sys) {
  const int64_t d = sys.degree;
  const int64_t p = sys.p;
  // counts[deg * p + res]
  std::vector<int64_t> counts(size_t((d + 1) * p), 0);
  counts[0] = 1;
  for (const Variable& var : sys.variables) {
    int64_t w = floormod(var.weight, p);
    // unbounded exponent per variable: in-place ascending-degree pass
    for (int64_t deg = 1; deg <= d; ++deg)
      for (int64_t res = 0; res < p; ++res) {
        int64_t from = counts[size_t((deg - 1) * p + floormod(res - w, p))];
        if (from)
          counts[size_t(deg * p + res)] =
              checked_add(counts[size_t(deg * p + res)], from);
      }
  }
  return counts[size_t(d * p + floormod(sys.character, p))];
}

namespace detail {

/// Existence DP over the variables selected by `mask` (bit t = variable
/// position t).
inline bool exists_supported_mask(const LinearizedSystem& sys, uint32_t mask) {
  const int64_t d = sys.degree;
  const int64_t p = sys.p;
  std::vector<char> reach(size_t((d + 1) * p), 0);
  reach[0] = 1;
  for (size_t t = 0; t < sys.variables.size(); ++t) {
    if (!(mask >> t & 1u)) continue;
    int64_t w = floormod(sys.variables[t].weight, p);
    for (int64_t deg = 1; deg <= d; ++deg)
      for (int64_t res = 0; res < p; ++res)
        if (reach[size_t((deg - 1) * p + floormod(res - w, p))])
          reach[size_t(deg * p + res)] = 1;
  }
  return reach[size_t(d * p + floormod(sys.character, p))] != 0;
}

inline uint32_t support_to_mask(const LinearizedSystem& sys, const std::vector<int>& support) {
  uint32_t mask = 0;
  for (int idx : support) {
    bool found = false;
    for (size_t t = 0; t < sys.variables.size(); ++t)
      if (sys.variables[t].index == idx) {
        mask |= 1u << t;
        found = true;
      }
    if (!found) throw std::invalid_argument("support index is not a system variable");
  }
  return mask;
}

}  // namespace detail

/// True iff some monomial of the system has support contained in `support`
/// (a set of variable indices).
inline bool exists_supported(const LinearizedSystem& sys, const std::vector<int>& support) {
  if (support.empty()) throw std::invalid_argument("support set must be nonempty");
  return detail::exists_supported_mask(sys, detail::support_to_mask(sys, support));
}

}  // namespace adjquot
