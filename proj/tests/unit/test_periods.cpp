#include <doctest.h>

#include "gpcode/periods.hpp"

using namespace gpcode;

TEST_CASE("Paley periods of GF(13)") {
  // Quadratic Gauss periods: (-1 +- sqrt(13)) / 2 are not integers, so the
  // set is not integral; their counts still partition each coset.
  const Field f = Field::build(13, 1);
  const auto s = gaussian_periods(f, 2);
  CHECK_FALSE(s.is_integral);
  REQUIRE(s.raw.size() == 2);
  CHECK(s.raw[0].total() == 6);
  CHECK(s.raw[1].total() == 6);
  const auto rep = check_relations(s, &f);
  CHECK(rep.all_passed());
  const auto* part = rep.find("partition");
  REQUIRE(part);
  CHECK(part->applicable);
}

TEST_CASE("GF(25), N = 2: semiprimitive values") {
  const Field f = Field::build(5, 2);
  const auto s = gaussian_periods(f, 2);
  CHECK(s.is_integral);
  std::vector<int64_t> v = s.values;
  std::sort(v.begin(), v.end());
  CHECK(v == std::vector<int64_t>{-3, 2});
  const auto rep = check_relations(s, &f);
  CHECK(rep.all_passed());
  CHECK(rep.sum == BigInt(-1));
}

TEST_CASE("N = 1 gives -1") {
  const Field f = Field::build(3, 3);
  const auto s = gaussian_periods(f, 1);
  REQUIRE(s.values.size() == 1);
  CHECK(s.values[0] == -1);
}

TEST_CASE("worker count does not change the result") {
  const Field f = Field::build(3, 8);
  const auto a = gaussian_periods(f, 82, 1), b = gaussian_periods(f, 82, 3);
  CHECK(a.values == b.values);
  CHECK(a.classes.size() == b.classes.size());
}

TEST_CASE("cosets partition the multiplicative group") {
  const Field f = Field::build(2, 6);
  std::vector<int> seen(64, 0);
  for (uint64_t i = 0; i < 9; ++i)
    for (Element x : coset(f, 9, i)) ++seen[x.code];
  CHECK(seen[0] == 0);
  CHECK(std::count(seen.begin() + 1, seen.end(), 1) == 63);
}

TEST_CASE("non-divisor N is rejected") {
  const Field f = Field::build(2, 4);
  CHECK_THROWS(gaussian_periods(f, 4));
}
