#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "adjquot/sections.hpp"

namespace adjquot {

/// Base locus of a system, resolved on support classes. A point of the
/// quotient lies in the base locus iff its support (set of nonvanishing
/// coordinates, always of size >= 2 on the hypersurface) admits no basis
/// monomial supported inside it.
struct BaseLocusReport {
  LinearizedSystem system;
  std::vector<std::vector<int>> base_supports;          // |T| >= 2, no monomial inside
  std::vector<std::array<int, 2>> pair_base_points;     // the 2-element entries
  std::vector<std::array<int, 2>> predicted_pairs;      // closed-form congruence
  bool exact_match = false;
};

/// All supports T (|T| >= 2) with no basis monomial supported in T,
/// smallest-first. Supersets of supports that already carry a monomial are
/// pruned without re-running the DP.
inline std::vector<std::vector<int>> base_supports(const LinearizedSystem& sys) {
  const int v = int(sys.variables.size());
  if (v > 24) throw error(errc::too_many_variables, "support scan capped at 24 variables");

  const uint32_t total = 1u << v;
  std::vector<char> has_mono(total, 0);
  std::vector<uint32_t> masks;
  masks.reserve(total - 1);
  for (uint32_t m = 1; m < total; ++m) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), [](uint32_t a, uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });

  std::vector<std::vector<int>> result;
  for (uint32_t mask : masks) {
    bool has = false;
    for (uint32_t rest = mask; rest; rest &= rest - 1)
      if (has_mono[mask ^ (rest & -rest)]) {
        has = true;
        break;
      }
    if (!has) has = detail::exists_supported_mask(sys, mask);
    has_mono[mask] = char(has);
    if (!has && std::popcount(mask) >= 2) {
      std::vector<int> T;
      for (int t = 0; t < v; ++t)
        if (mask >> t & 1u) T.push_back(sys.variables[size_t(t)].index);
      result.push_back(std::move(T));
    }
  }
  std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return result;
}

/// Pairs {i,j} with k_i + k_j = -c mod p: the closed-form base points of
/// the adjoint (degree p-2) system. The two-variable weights of
/// xi_a^e xi_b^{p-2-e} realize every residue except -(k_a+k_b).
inline std::vector<std::array<int, 2>> predicted_pairs(const LinearizedSystem& sys) {
  if (sys.degree != sys.p - 2)
    throw error(errc::wrong_degree, "predicted_pairs applies to the degree p-2 system");
  std::vector<std::array<int, 2>> pairs;
  const int v = int(sys.variables.size());
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j)
      if (floormod(sys.variables[size_t(i)].weight + sys.variables[size_t(j)].weight +
                       sys.character,
                   sys.p) == 0)
        pairs.push_back({sys.variables[size_t(i)].index, sys.variables[size_t(j)].index});
  return pairs;
}

namespace detail {

inline bool supports_match_pairs(const std::vector<std::vector<int>>& supports,
                                 const std::vector<std::array<int, 2>>& pairs) {
  if (supports.size() != pairs.size()) return false;
  for (size_t i = 0; i < supports.size(); ++i) {
    if (supports[i].size() != 2) return false;
    if (supports[i][0] != pairs[i][0] || supports[i][1] != pairs[i][1]) return false;
  }
  return true;
}

inline BaseLocusReport make_base_report(const LinearizedSystem& sys) {
  BaseLocusReport rep;
  rep.system = sys;
  rep.base_supports = base_supports(sys);
  for (const auto& T : rep.base_supports)
    if (T.size() == 2) rep.pair_base_points.push_back({T[0], T[1]});
  rep.predicted_pairs = predicted_pairs(sys);
  rep.exact_match = supports_match_pairs(rep.base_supports, rep.predicted_pairs);
  return rep;
}

}  // namespace detail

/// Theorem 1(1): base locus of |K + (p-2)D + jN| in the fundamental case.
inline BaseLocusReport theorem1_check(int64_t p, int64_t j) {
  QuotientConfig cfg = fundamental_config(p);
  DivisorClass cls;
  cls.coefficients[0] = p - 2;
  cls.twist = j;
  cls.canonical = 1;
  // sign is invisible in the fundamental case (sum of weights = 0 mod p)
  return detail::make_base_report(to_system(cfg, cls, -1));
}

/// Theorem 2(1): base locus of the adjoint |K + nD'| on a general quotient,
/// with both published forms of the pair congruence evaluated side by side.
struct Theorem2BaseReport {
  QuotientConfig config;
  int sign_convention = -1;
  BaseLocusReport base;

  std::vector<int64_t> complement;  // S = {0..p-1} minus the weight set
  int64_t k_mod_p = 0;              // sum of S mod p

  std::vector<std::array<int, 2>> abstract_pairs;    // k_i+k_j = 2k_0 + sum k_t
  std::vector<std::array<int, 2>> complement_pairs;  // k_i+k_j = 2k_0 - k
  bool congruences_agree = false;
  bool abstract_match = false;
  bool complement_match = false;

  bool condition_satisfied() const { return !abstract_pairs.empty() || !complement_pairs.empty(); }
};

inline Theorem2BaseReport theorem2_base_check(const QuotientConfig& cfg, int sign_convention) {
  Theorem2BaseReport rep;
  rep.config = cfg;
  rep.sign_convention = sign_convention;

  DivisorClass cls;
  cls.coefficients[0] = cfg.n;
  cls.canonical = 1;
  rep.base = detail::make_base_report(to_system(cfg, cls, sign_convention));

  std::vector<char> used(size_t(cfg.p), 0);
  for (int64_t w : cfg.weights) used[size_t(w)] = 1;
  for (int64_t i = 0; i < cfg.p; ++i)
    if (!used[size_t(i)]) rep.complement.push_back(i);
  int64_t k = 0;
  for (int64_t i : rep.complement) k += i;
  rep.k_mod_p = floormod(k, cfg.p);

  const int64_t k0 = cfg.weights[0];
  const int64_t abstract_target = floormod(2 * k0 + cfg.weight_sum(), cfg.p);
  const int64_t complement_target = floormod(2 * k0 - rep.k_mod_p, cfg.p);
  rep.congruences_agree = abstract_target == complement_target;
  for (int i = 0; i < cfg.variable_count(); ++i)
    for (int j = i + 1; j < cfg.variable_count(); ++j) {
      int64_t s = floormod(cfg.weights[size_t(i)] + cfg.weights[size_t(j)], cfg.p);
      if (s == abstract_target) rep.abstract_pairs.push_back({i, j});
      if (s == complement_target) rep.complement_pairs.push_back({i, j});
    }
  rep.abstract_match =
      detail::supports_match_pairs(rep.base.base_supports, rep.abstract_pairs);
  rep.complement_match =
      detail::supports_match_pairs(rep.base.base_supports, rep.complement_pairs);
  return rep;
}

}  // namespace adjquot
