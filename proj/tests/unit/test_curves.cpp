#include <doctest.h>

#include "gpcode/curves.hpp"
#include "gpcode/error.hpp"

using namespace gpcode;

TEST_CASE("beta = 0 gives every x") {
  const Field f = Field::build(3, 2);
  // y^3 - y = 0 has 3 roots for each of the 9 values of x, plus infinity.
  CHECK(count_points_brute(f, 2, f.zero()) == 28);
  CHECK(count_points_naive(f, 2, f.zero()) == 28);
}

TEST_CASE("three counting routes agree") {
  for (auto [p, m, k] : std::vector<std::tuple<uint32_t, unsigned, uint64_t>>{{2, 4, 3}, {3, 3, 2}, {5, 2, 3}, {7, 2, 4}}) {
    const Field f = Field::build(p, m);
    const ArtinSchreierCounter counter(f);
    for (uint64_t x = 0; x < f.q(); ++x) {
      const Element beta = f.element(x);
      const BigInt n = count_points_brute(f, k, beta);
      CHECK(n == count_points_naive(f, k, beta));
      CHECK(n == counter.count(k, beta));
      CHECK(n == curve_count(f, k, beta, false).count_weight_formula);
    }
  }
}

TEST_CASE("alternative eigenvalue formula diagnostic") {
  const auto cp = code_params(5, 2, 2);
  const auto e = count_points_from_eigenvalue(cp, 2);
  CHECK(e.derived == 25 + 5 + 2 * 4 * 2);
  CHECK(e.alternative == 50 + 2 * 4 * 2);
  const auto prime = code_params(13, 1, 1);
  const auto e1 = count_points_from_eigenvalue(prime, -1);
  CHECK(e1.derived == e1.alternative);  // m = 1
  CHECK_THROWS_AS(count_points_from_eigenvalue(code_params(5, 2, 8), 0), Error);
}

TEST_CASE("reduction over GF(8) to GF(2^21)") {
  const Field f8 = Field::build(2, 3);
  std::vector<Element> alphas(7, f8.one());
  alphas[0] = f8.zero();
  const auto r = curve_reduction(2, 3, 7, 1, alphas);
  CHECK(r.k == 42799);
  CHECK(r.m == 21);
  CHECK(BigRational(r.derived) == r.reduction_formula);
  CHECK(r.in_count_set);
  for (const auto& c : count_congruences(2, 3, 7, r.derived, r.base_counts)) CHECK(c.passed);
  CHECK_THROWS_AS(curve_reduction(2, 3, 7, 1, {f8.one()}), Error);
}

TEST_CASE("congruence with b = 1 is marked not applicable") {
  const auto cs = count_congruences(5, 2, 1, 126, {126});
  CHECK_FALSE(cs.back().applicable);
  CHECK(cs.front().passed);
}
