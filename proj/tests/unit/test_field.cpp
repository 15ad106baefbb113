#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "gpcode/error.hpp"
#include "gpcode/field.hpp"

using namespace gpcode;

TEST_CASE("GF(4): first irreducible and its generator") {
  const Field f = Field::build(2, 2);
  CHECK(std::vector<uint32_t>(f.modulus().begin(), f.modulus().end()) == std::vector<uint32_t>{1, 1, 1});
  CHECK(f.omega().code == 2);  // x
  CHECK(f.mul(f.omega(), f.omega()).code == 3);
  CHECK(f.trace(f.one()) == 0);
  CHECK(f.trace(f.omega()) == 1);
}

TEST_CASE("GF(9) modulus skips reducible candidates") {
  // x^2 + 1 is the first irreducible when read as c1 c0 in base 3.
  const Field f = Field::build(3, 2);
  CHECK(std::vector<uint32_t>(f.modulus().begin(), f.modulus().end()) == std::vector<uint32_t>{1, 0, 1});
  CHECK(is_irreducible(f.modulus(), 3));
  const uint32_t reducible[] = {2, 0, 1};  // x^2 + 2 = (x-1)(x+1)
  CHECK_FALSE(is_irreducible(reducible, 3));
  // x has order 4, so omega must be something else.
  CHECK(f.pow_poly(f.omega(), 4) != f.one());
  CHECK(f.pow_poly(f.omega(), 8) == f.one());
}

TEST_CASE("arithmetic agrees with polynomial arithmetic") {
  for (auto [p, m] : std::vector<std::pair<uint32_t, unsigned>>{{2, 8}, {3, 5}, {5, 3}, {7, 2}, {13, 1}}) {
    const Field f = Field::build(p, m);
    for (uint64_t a = 0; a < f.q(); a += 7)
      for (uint64_t b = 1; b < f.q(); b += 11) {
        const Element x = f.element(a), y = f.element(b);
        CHECK(f.mul(x, y) == f.mul_poly(x, y));
        CHECK(f.add(f.sub(x, y), y) == x);
        CHECK(f.mul(f.mul(x, y), f.inv(y)) == x);
      }
    CHECK(f.add(f.minus_one(), f.one()) == f.zero());
  }
}

TEST_CASE("trace: functional form equals x + x^p + ... and is balanced") {
  const Field f = Field::build(3, 4);
  std::vector<int> fibre(3, 0);
  for (uint64_t x = 0; x < f.q(); ++x) {
    CHECK(f.trace(f.element(x)) == f.trace_definitional(f.element(x)));
    ++fibre[f.trace(f.element(x))];
  }
  CHECK(fibre == std::vector<int>{27, 27, 27});
}

TEST_CASE("discrete logs") {
  const Field f = Field::build(2, 10);
  for (uint64_t j = 0; j < f.group_order(); j += 37) CHECK(f.log(f.exp(j)) == j);
  CHECK(f.exp(f.group_order()) == f.one());
  CHECK(f.trace_by_log()[5] == f.trace(f.exp(5)));
}

TEST_CASE("rejections") {
  CHECK_THROWS_AS(Field::build(4, 2), Error);
  try {
    Field::build(6, 1);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPrime);
  }
  FieldOptions o;
  o.max_q = 100;
  try {
    Field::build(2, 7, o);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FieldTooLarge);
  }
  const Field f = Field::build(5, 1);
  CHECK_THROWS_AS(f.element(5), Error);
  FieldOptions bad;
  bad.omega = 4;  // -1 in GF(5), order 2
  CHECK_THROWS_AS(Field::build(5, 1, bad), Error);
}

TEST_CASE("cache round trip") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("gpcode-unit-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  FieldOptions o;
  o.cache_dir = dir;
  const Field a = Field::build(3, 6, o);
  CHECK_FALSE(a.loaded_from_cache());
  CHECK(fs::exists(dir / "gf_3_6.cache"));
  const Field b = Field::build(3, 6, o);
  CHECK(b.loaded_from_cache());
  CHECK(std::ranges::equal(a.dlog_table(), b.dlog_table()));
  CHECK(std::ranges::equal(a.trace_by_log(), b.trace_by_log()));
  // A corrupt file is ignored and rewritten.
  { std::ofstream(dir / "gf_3_6.cache", std::ios::trunc) << "garbage"; }
  const Field c = Field::build(3, 6, o);
  CHECK_FALSE(c.loaded_from_cache());
  CHECK(std::ranges::equal(a.dlog_table(), c.dlog_table()));
  fs::remove_all(dir);
}
