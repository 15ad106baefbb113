#include <doctest.h>

#include "gpcode/closed_forms.hpp"
#include "gpcode/error.hpp"

using namespace gpcode;

TEST_CASE("simplex and one-weight towers") {
  CHECK(simplex(3, 2).table == std::map<uint64_t, BigInt>{{0, 1}, {6, 8}});
  const auto t = one_weight_tower(2, 3, 7);
  CHECK(t.length == 49);
  CHECK(t.frequency(28) == 823543);
  CHECK(t.same_table(compose(simplex(2, 3), 7)));
  try {
    one_weight_tower(2, 1, 2);  // Psi_2(2) = 3 is not divisible by 2
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisibilityFailed);
  }
}

TEST_CASE("composition keeps exponent tuples") {
  const auto d = compose(simplex(2, 2), 2);
  CHECK(d.table == std::map<uint64_t, BigInt>{{0, 1}, {2, 6}, {4, 9}});
  CHECK(d.indexed.size() == 3);
  CHECK(compose(simplex(2, 2), 1).same_table(simplex(2, 2)));
}

TEST_CASE("semiprimitive base") {
  const auto d = semiprimitive_base(5, 2, 2);
  CHECK(d.table == std::map<uint64_t, BigInt>{{0, 1}, {8, 12}, {12, 12}});
  CHECK_THROWS_AS(semiprimitive_base(7, 3, 3), Error);
}

TEST_CASE("diophantine solutions") {
  const auto c = solve_cubic_diophantine(7, 1);
  CHECK(c.a == 1);
  CHECK(c.b == 1);
  const auto q = solve_quartic_diophantine(5, 1);
  CHECK(q.a * q.a + 4 * q.b * q.b == 25);
  CHECK_THROWS_AS(solve_cubic_diophantine(5, 1), Error);
}

TEST_CASE("cubic tower weights are integral") {
  const auto t = cubic_tower(7, 1, 2);
  CHECK(t.total() == 117649);
  CHECK(t.frequency(204) == 2 * 114 * 114);
  CHECK_THROWS_AS(cubic_tower(7, 1, 7), Error);  // r = p
}

TEST_CASE("period reduction") {
  const auto s = reduce_periods_semiprimitive(5, 2, 3, 2);
  BigInt cosets = 0;
  for (const auto& c : s.classes) cosets += c.cosets;
  CHECK(cosets == 434);
}

TEST_CASE("routes") {
  CHECK(closed_form_distribution(2, 21, 42799).route == "one-weight tower");
  CHECK(closed_form_distribution(5, 6, 434).route == "semiprimitive tower");
  CHECK(closed_form_distribution(7, 6, 516).route == "cubic tower");
  CHECK(closed_form_distribution(3, 5, 1).route == "simplex");
  ClosedFormOptions o;
  o.allow_brute_base = false;
  CHECK_THROWS_AS(closed_form_distribution(2, 11, 23, o), Error);
}

TEST_CASE("Psi divisibility cases") {
  const auto cases = psi_divisibility_cases(8, 7, 2);
  CHECK_FALSE(cases.empty());
}
