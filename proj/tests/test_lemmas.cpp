#include <doctest.h>

#include "adjquot/lemmas.hpp"

using namespace adjquot;

TEST_CASE("delta identity holds on all ordered triples up to 30") {
  CHECK(delta_identity_check(30));
  CHECK_THROWS_AS(delta_identity_check(2), std::invalid_argument);
}

TEST_CASE("invariance exponent vanishes for every odd prime up to 101") {
  for (int64_t p = 3; p <= 101; ++p) {
    if (!is_prime(p)) continue;
    CHECK(invariance_exponent_check(p));
  }
  CHECK_THROWS_AS(invariance_exponent_check(9), error);
  // p = 2 is outside the construction: sum_{k != i} (k - i) = 1 mod 2
  CHECK_THROWS_AS(invariance_exponent_check(2), error);
}

TEST_CASE("sign convention resolves to -1 with the k + t*k0 twist") {
  auto res = resolve_sign_convention(2, 7);
  CHECK_FALSE(res.inconclusive());
  REQUIRE(res.resolved_sign.has_value());
  CHECK(*res.resolved_sign == -1);
  CHECK(res.surviving_minus[0]);
  CHECK_FALSE(res.surviving_minus[1]);
  CHECK_FALSE(res.surviving_minus[2]);
  CHECK_FALSE(res.surviving_plus[0]);
  CHECK_FALSE(res.surviving_plus[1]);
  CHECK_FALSE(res.surviving_plus[2]);
  // the discrimination is real: at least one informative sample
  bool informative = false;
  for (const auto& ev : res.evidence) informative = informative || ev.informative;
  CHECK(informative);
  CHECK(res.evidence.size() == 35);  // C(7,4) tuples
}

TEST_CASE("sign convention is stable across (n, p)") {
  for (auto [n, p] : {std::pair{2, int64_t(11)}, {3, int64_t(7)}}) {
    auto res = resolve_sign_convention(n, p);
    REQUIRE(res.resolved_sign.has_value());
    CHECK(*res.resolved_sign == -1);
    CHECK(res.surviving_minus[0]);
  }
}

TEST_CASE("resolution input validation") {
  CHECK_THROWS_AS(resolve_sign_convention(2, 6), error);
  CHECK_THROWS_AS(resolve_sign_convention(3, 5), error);  // p = n+2 uninformative
}
