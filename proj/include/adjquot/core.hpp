#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace adjquot {

inline constexpr const char* version = "0.1.0";

enum class errc {
  not_prime,
  dimension_too_small,
  wrong_weight_count,
  weights_not_strictly_increasing,
  weight_out_of_range,
  p_too_small,
  not_fundamental_case,
  overflow_detected,
  too_large,
  too_many_variables,
  wrong_degree,
  invalid_point,
  inconclusive,
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

inline int64_t floormod(int64_t x, int64_t m) {
  int64_t r = x % m;
  return r < 0 ? r + m : r;
}

inline bool is_prime(int64_t p) {
  if (p < 2) return false;
  for (int64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

inline int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw error(errc::overflow_detected, "integer overflow in addition");
  return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw error(errc::overflow_detected, "integer overflow in multiplication");
  return r;
}

/// Group action data: prime order p, quotient dimension n, and the
/// strictly increasing weight tuple (k_0,...,k_{n+1}) defining the
/// diagonal action on the n+2 coordinates.
struct QuotientConfig {
  int64_t p = 0;
  int n = 0;
  std::vector<int64_t> weights;

  int variable_count() const { return n + 2; }

  int64_t weight_sum() const {
    return std::accumulate(weights.begin(), weights.end(), int64_t{0});
  }

  // n = p-2 with weights (0,1,...,p-1)
  bool fundamental() const {
    if (n != p - 2) return false;
    for (int t = 0; t < variable_count(); ++t)
      if (weights[size_t(t)] != t) return false;
    return true;
  }
};

inline QuotientConfig validate_config(int64_t p, int n, std::vector<int64_t> weights) {
  if (!is_prime(p)) throw error(errc::not_prime, "p = " + std::to_string(p) + " is not prime");
  if (n < 2) throw error(errc::dimension_too_small, "dimension n must be at least 2");
  if (weights.size() != size_t(n) + 2)
    throw error(errc::wrong_weight_count,
                "expected " + std::to_string(n + 2) + " weights, got " +
                    std::to_string(weights.size()));
  for (size_t t = 1; t < weights.size(); ++t)
    if (weights[t] <= weights[t - 1])
      throw error(errc::weights_not_strictly_increasing,
                  "weights must be strictly increasing");
  if (weights.front() < 0 || weights.back() > p - 1)
    throw error(errc::weight_out_of_range, "weights must lie in [0, p-1]");
  if (p < n + 2) throw error(errc::p_too_small, "p must be at least n+2");
  return QuotientConfig{p, n, std::move(weights)};
}

inline QuotientConfig fundamental_config(int64_t p) {
  std::vector<int64_t> w(size_t(p), 0);
  std::iota(w.begin(), w.end(), int64_t{0});
  return validate_config(p, int(p) - 2, std::move(w));
}

struct Variable {
  int index = 0;       // coordinate index
  int64_t weight = 0;  // k_index

  bool operator==(const Variable&) const = default;
};

/// A G-linearized O(degree) with character c mod p: its invariant
/// sections are exactly the degree-d monomials of weight = c.
struct LinearizedSystem {
  int64_t p = 0;
  int64_t degree = 0;
  int64_t character = 0;
  std::vector<Variable> variables;

  bool operator==(const LinearizedSystem&) const = default;
};

/// Divisor E = sum a_i D_i + twist*N (+ K if canonical = 1), with D_i the
/// image of {xi_i = 0}.
struct DivisorClass {
  std::map<int, int64_t> coefficients;  // index -> a_i >= 0
  int64_t twist = 0;
  int canonical = 0;  // 0 or 1

  int64_t total_degree() const {
    int64_t t = 0;
    for (const auto& [i, a] : coefficients) t = checked_add(t, a);
    return t;
  }
};

/// Translate a divisor class into its (degree, character) system.
/// degree = t + canonical*(p-n-2); character = sum a_i k_i + twist*(k_1-k_0)
/// + canonical*sign*sum_t k_t, all mod p. sign is the canonical-character
/// convention, resolved once per run by lemmas::resolve_sign_convention.
inline LinearizedSystem to_system(const QuotientConfig& cfg, const DivisorClass& cls,
                                  int sign_convention) {
  if (sign_convention != 1 && sign_convention != -1)
    throw std::invalid_argument("sign_convention must be +1 or -1");
  int64_t t = 0;
  int64_t wsum = 0;
  for (const auto& [i, a] : cls.coefficients) {
    if (i < 0 || i >= cfg.variable_count())
      throw std::out_of_range("divisor coefficient index out of range");
    if (a < 0) throw std::invalid_argument("divisor multiplicities must be nonnegative");
    t = checked_add(t, a);
    wsum = checked_add(wsum, checked_mul(a, cfg.weights[size_t(i)]));
  }
  if (cls.canonical != 0 && cls.canonical != 1)
    throw std::invalid_argument("canonical multiplicity must be 0 or 1");

  LinearizedSystem sys;
  sys.p = cfg.p;
  sys.degree = checked_add(t, int64_t(cls.canonical) * (cfg.p - cfg.n - 2));
  int64_t chi_n = cfg.weights[1] - cfg.weights[0];
  int64_t c = checked_add(wsum, checked_mul(floormod(cls.twist, cfg.p), chi_n));
  c = checked_add(c, int64_t(cls.canonical) * sign_convention * cfg.weight_sum());
  sys.character = floormod(c, cfg.p);
  sys.variables.reserve(size_t(cfg.variable_count()));
  for (int i = 0; i < cfg.variable_count(); ++i)
    sys.variables.push_back({i, cfg.weights[size_t(i)]});
  return sys;
}

/// Fundamental case only: rewrite E as tD_0 + kN using D_i - D_0 ~ iN and
/// pN ~ 0.
inline DivisorClass normalize_class(const QuotientConfig& cfg, const DivisorClass& cls) {
  if (!cfg.fundamental())
    throw error(errc::not_fundamental_case, "normalize_class requires the fundamental case");
  int64_t t = 0;
  int64_t k = floormod(cls.twist, cfg.p);
  for (const auto& [i, a] : cls.coefficients) {
    if (i < 0 || i >= cfg.variable_count())
      throw std::out_of_range("divisor coefficient index out of range");
    if (a < 0) throw std::invalid_argument("divisor multiplicities must be nonnegative");
    t = checked_add(t, a);
    k = floormod(checked_add(k, checked_mul(a, int64_t(i))), cfg.p);
  }
  DivisorClass out;
  if (t > 0) out.coefficients[0] = t;
  out.twist = k;
  out.canonical = cls.canonical;
  return out;
}

struct IntegerMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<int64_t> entries;  // row-major

  IntegerMatrix() = default;
  IntegerMatrix(int r, int c) : rows(r), cols(c), entries(size_t(r) * size_t(c), 0) {}

  int64_t& at(int r, int c) { return entries[size_t(r) * size_t(cols) + size_t(c)]; }
  int64_t at(int r, int c) const { return entries[size_t(r) * size_t(cols) + size_t(c)]; }
};

/// Exact rank over Q by Bareiss fraction-free elimination. Integer-only;
/// every division is exact. Intermediates are tracked in 128 bits and any
/// value leaving the 64-bit range aborts with overflow_detected.
inline int rank_fraction_free(const IntegerMatrix& m) {
  std::vector<int64_t> a = m.entries;
  const int rows = m.rows, cols = m.cols;
  auto at = [&](int r, int c) -> int64_t& { return a[size_t(r) * size_t(cols) + size_t(c)]; };

  int rank = 0;
  int r = 0;
  int64_t prev = 1;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < cols; ++j) std::swap(at(piv, j), at(r, j));
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        __int128 num = (__int128)at(i, j) * at(r, c) - (__int128)at(i, c) * at(r, j);
        if (num % prev != 0)
          throw std::logic_error("fraction-free elimination: pivot division not exact");
        __int128 q = num / prev;
        if (q > INT64_MAX || q < INT64_MIN)
          throw error(errc::overflow_detected, "matrix entry left 64-bit range");
        at(i, j) = int64_t(q);
      }
      at(i, c) = 0;
    }
    prev = at(r, c);
    ++r;
    ++rank;
  }
  return rank;
}

}  // namespace adjquot
