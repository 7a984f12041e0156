#include <doctest.h>

#include "adjquot/baselocus.hpp"
#include "oracles.hpp"

using namespace adjquot;

TEST_CASE("base supports of fundamental adjoint systems at p=5") {
  auto sys = oracle::fundamental_system(5, 3, 0);
  CHECK(base_supports(sys) == std::vector<std::vector<int>>{{1, 4}, {2, 3}});
  sys.character = 1;
  CHECK(base_supports(sys) == std::vector<std::vector<int>>{{0, 4}, {1, 3}});
  sys.character = 2;
  CHECK(base_supports(sys) == std::vector<std::vector<int>>{{0, 3}, {1, 2}});
}

TEST_CASE("systems containing the constant section have empty base locus") {
  CHECK(base_supports(oracle::fundamental_system(7, 0, 0)).empty());
}

TEST_CASE("base_supports agrees with the brute-force oracle") {
  for (int64_t p : {5, 7}) {
    for (int64_t d : {p - 2, p - 1})
      for (int64_t c = 0; c < p; ++c) {
        auto sys = oracle::fundamental_system(p, d, c);
        CHECK(base_supports(sys) == oracle::brute_base_supports(sys));
      }
  }
  // a general (non-fundamental) config too
  LinearizedSystem sys;
  sys.p = 7;
  sys.degree = 5;
  sys.variables = {{0, 0}, {1, 1}, {2, 3}, {3, 5}};
  for (int64_t c = 0; c < 7; ++c) {
    sys.character = c;
    CHECK(base_supports(sys) == oracle::brute_base_supports(sys));
  }
}

TEST_CASE("predicted_pairs examples") {
  auto sys = oracle::fundamental_system(5, 3, 0);
  CHECK(predicted_pairs(sys) == std::vector<std::array<int, 2>>{{1, 4}, {2, 3}});
  sys.character = 2;
  CHECK(predicted_pairs(sys) == std::vector<std::array<int, 2>>{{0, 3}, {1, 2}});
  auto p7 = oracle::fundamental_system(7, 5, 0);
  CHECK(predicted_pairs(p7) == std::vector<std::array<int, 2>>{{1, 6}, {2, 5}, {3, 4}});

  sys.degree = 2;  // not the adjoint degree
  CHECK_THROWS_AS(predicted_pairs(sys), error);
}

TEST_CASE("theorem1_check across p and j") {
  BaseLocusReport rep = theorem1_check(5, 0);
  CHECK(rep.exact_match);
  CHECK(rep.pair_base_points.size() == 2);

  for (int64_t j = 0; j < 7; ++j) {
    rep = theorem1_check(7, j);
    CHECK(rep.exact_match);
    CHECK(rep.pair_base_points.size() == 3);
  }

  rep = theorem1_check(11, 0);
  CHECK(rep.exact_match);
  CHECK(rep.pair_base_points.size() == 5);
}

TEST_CASE("base point count is (p-1)/2 in the fundamental case") {
  for (int64_t p : {5, 7, 11}) {
    for (int64_t j = 0; j < p; ++j) {
      auto rep = theorem1_check(p, j);
      CHECK(int64_t(rep.predicted_pairs.size()) == (p - 1) / 2);
      CHECK(int64_t(rep.pair_base_points.size()) == (p - 1) / 2);
      CHECK(rep.base_supports.size() == rep.pair_base_points.size());  // nothing bigger
    }
  }
}

TEST_CASE("degree p-1 fundamental systems have no 2-element base support") {
  for (int64_t p : {5, 7, 11}) {
    for (int64_t c = 0; c < p; ++c) {
      auto sys = oracle::fundamental_system(p, p - 1, c);
      CHECK(base_supports(sys).empty());
    }
  }
}

TEST_CASE("supersets of non-base supports stay non-base") {
  auto sys = oracle::fundamental_system(7, 5, 2);
  auto base = base_supports(sys);
  auto is_base = [&](const std::vector<int>& T) {
    for (const auto& B : base)
      if (B == T) return true;
    return false;
  };
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b) {
      if (is_base({a, b})) continue;
      for (int c = 0; c < 7; ++c) {
        if (c == a || c == b) continue;
        std::vector<int> T = {a, b, c};
        std::sort(T.begin(), T.end());
        CHECK_FALSE(is_base(T));
      }
    }
}

TEST_CASE("theorem2_base_check reduces to theorem1 on the fundamental case") {
  QuotientConfig cfg = fundamental_config(7);
  auto rep = theorem2_base_check(cfg, -1);
  auto t1 = theorem1_check(7, 0);
  CHECK(rep.base.base_supports == t1.base_supports);
  CHECK(rep.base.exact_match);
  CHECK(rep.complement.empty());
  CHECK(rep.k_mod_p == 0);
  CHECK(rep.congruences_agree);
  // both congruences coincide with the computed pairs here
  CHECK(rep.abstract_match);
  CHECK(rep.complement_match);
  // sign invisible
  auto rep_plus = theorem2_base_check(cfg, +1);
  CHECK(rep_plus.base.base_supports == rep.base.base_supports);
}

TEST_CASE("theorem2_base_check on a searched tuple (n=2, p=5)") {
  QuotientConfig cfg = validate_config(5, 2, {0, 1, 2, 3});
  auto rep = theorem2_base_check(cfg, -1);
  // frozen from the exhaustive 4-variable scan
  CHECK(rep.base.base_supports == std::vector<std::vector<int>>{{0, 1}});
  CHECK(rep.base.exact_match);
  CHECK(rep.complement == std::vector<int64_t>{4});
  CHECK(rep.congruences_agree);
  CHECK(rep.abstract_pairs == std::vector<std::array<int, 2>>{{0, 1}});
  CHECK(rep.abstract_match);
  CHECK(rep.complement_match);
}

TEST_CASE("the two pair congruence forms agree on every valid tuple") {
  for (int64_t p : {5, 7, 11}) {
    for (int n : {2, 3}) {
      if (p < n + 2) continue;
      // sweep all strictly increasing tuples
      std::vector<int64_t> w(size_t(n) + 2);
      auto rec = [&](auto&& self, int pos, int64_t lo) -> void {
        if (pos == n + 2) {
          auto rep = theorem2_base_check(validate_config(p, n, w), -1);
          CHECK(rep.congruences_agree);
          return;
        }
        for (int64_t x = lo; x < p; ++x) {
          w[size_t(pos)] = x;
          self(self, pos + 1, x + 1);
        }
      };
      rec(rec, 0, 0);
    }
  }
}
