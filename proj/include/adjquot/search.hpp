#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "adjquot/baselocus.hpp"
#include "adjquot/jets.hpp"

namespace adjquot {

/// One congruence-satisfying weight tuple, re-verified from scratch: the
/// congruence is never trusted on its own.
struct TupleVerification {
  std::vector<int64_t> weights;
  bool abstract_congruence = false;    // k_i+k_j = 2k_0 + sum k_t for some i,j
  bool complement_congruence = false;  // k_i+k_j = 2k_0 - k
  Theorem2BaseReport base;
  std::vector<Theorem2Separation> separation;

  bool has_pair_base_point() const { return !base.base.pair_base_points.empty(); }
  bool has_zero_jet_column() const {
    for (const auto& s : separation)
      if (!s.report.zero_columns.empty()) return true;
    return false;
  }
};

struct SearchResult {
  int n = 0;
  int64_t p = 0;
  int sign_convention = -1;
  bool fundamental_trivial = false;  // p = n+2: fundamental case, nothing to search
  int64_t tuples_scanned = 0;
  std::vector<TupleVerification> tuples;
};

inline constexpr int64_t default_tuple_cap = 1'000'000;

namespace detail {

/// Lexicographically smallest among the p shift-translates (k_t + u mod p,
/// re-sorted) of a tuple; shift-equivalent tuples describe the same
/// projective action.
inline std::vector<int64_t> shift_canonical(const std::vector<int64_t>& w, int64_t p) {
  std::vector<int64_t> best;
  std::vector<int64_t> cur(w.size());
  for (int64_t u = 0; u < p; ++u) {
    for (size_t t = 0; t < w.size(); ++t) cur[t] = floormod(w[t] + u, p);
    std::sort(cur.begin(), cur.end());
    if (best.empty() || cur < best) best = cur;
  }
  return best;
}

}  // namespace detail

/// Sweep all strictly increasing tuples with k_0 = 0, keep those satisfying
/// the congruence (both variants are recorded), dedupe per shift
/// class, and re-verify every survivor via the exhaustive base-locus scan
/// and the jet computation.
inline SearchResult run_search(int n, int64_t p, int sign_convention,
                               int64_t tuple_cap = default_tuple_cap) {
  if (!is_prime(p)) throw error(errc::not_prime, "p must be prime");
  if (p < n + 2) throw error(errc::p_too_small, "p must be at least n+2");

  SearchResult result;
  result.n = n;
  result.p = p;
  result.sign_convention = sign_convention;
  if (p == n + 2) {
    result.fundamental_trivial = true;
    return result;
  }
  if (binomial_capped(p - 1, n + 1, tuple_cap) > tuple_cap)
    throw error(errc::too_large, "tuple count exceeds search cap");

  // shift-class canonical form -> best congruent representative
  std::map<std::vector<int64_t>, std::vector<int64_t>> by_class;

  std::vector<int64_t> w(size_t(n) + 2, 0);
  auto consider = [&]() {
    ++result.tuples_scanned;
    int64_t wsum = 0;
    for (int64_t x : w) wsum += x;
    int64_t abstract_target = floormod(2 * w[0] + wsum, p);
    int64_t k = floormod(p * (p - 1) / 2 - wsum, p);
    int64_t complement_target = floormod(2 * w[0] - k, p);
    bool hit = false;
    for (size_t i = 0; i < w.size() && !hit; ++i)
      for (size_t j = i + 1; j < w.size() && !hit; ++j)
        hit = floormod(w[i] + w[j], p) == abstract_target ||
              floormod(w[i] + w[j], p) == complement_target;
    if (!hit) return;
    auto canon = detail::shift_canonical(w, p);
    auto it = by_class.find(canon);
    if (it == by_class.end() || w < it->second) by_class[canon] = w;
  };
  auto rec = [&](auto&& self, int pos, int64_t lo) -> void {
    if (pos == n + 2) {
      consider();
      return;
    }
    for (int64_t x = lo; x < p; ++x) {
      w[size_t(pos)] = x;
      self(self, pos + 1, x + 1);
    }
  };
  w[0] = 0;
  rec(rec, 1, 1);

  for (const auto& [canon, tuple] : by_class) {
    TupleVerification tv;
    tv.weights = tuple;
    QuotientConfig cfg = validate_config(p, n, tuple);
    int64_t wsum = cfg.weight_sum();
    int64_t k = floormod(p * (p - 1) / 2 - wsum, p);
    for (size_t i = 0; i < tuple.size(); ++i)
      for (size_t j = i + 1; j < tuple.size(); ++j) {
        int64_t s = floormod(tuple[i] + tuple[j], p);
        tv.abstract_congruence |= s == floormod(2 * tuple[0] + wsum, p);
        tv.complement_congruence |= s == floormod(2 * tuple[0] - k, p);
      }
    tv.base = theorem2_base_check(cfg, sign_convention);
    tv.separation = theorem2_separation_check(cfg, sign_convention);
    result.tuples.push_back(std::move(tv));
  }
  std::sort(result.tuples.begin(), result.tuples.end(),
            [](const TupleVerification& a, const TupleVerification& b) {
              return a.weights < b.weights;
            });
  return result;
}

}  // namespace adjquot
