#include <doctest.h>

#include "gpcode/integer.hpp"

using namespace gpcode;

TEST_CASE("primality and factorisation") {
  CHECK(is_prime(2));
  CHECK(is_prime(4093));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(4095));
  CHECK(prime_factors(2 * 2 * 3 * 7 * 7) == std::vector<uint64_t>{2, 3, 7});
  CHECK(divisors(12) == std::vector<uint64_t>{1, 2, 3, 4, 6, 12});
  CHECK(factorize(15624) == std::vector<std::pair<uint64_t, unsigned>>{{2, 3}, {3, 2}, {7, 1}, {31, 1}});
}

TEST_CASE("psi is the geometric sum") {
  CHECK(psi(8, 7) == 299593);
  CHECK(psi(25, 3) == 651);
  CHECK(psi(5, 1) == 1);
  CHECK(psi(5, 0) == 0);
}

TEST_CASE("primitive divisors") {
  // n | q - 1 and n divides no p^d - 1 for a proper divisor d of m.
  CHECK(is_primitive_divisor(36, 5, 6));
  CHECK_FALSE(is_primitive_divisor(24, 5, 6));
  CHECK(is_primitive_divisor(7, 2, 3));
  CHECK_FALSE(is_primitive_divisor(3, 2, 4));
  for (uint64_t n = 1; n < 200; ++n) CHECK(is_primitive_divisor(n, 3, 4) == is_primitive_divisor_scan(n, 3, 4));
}

TEST_CASE("multinomials and compositions") {
  const unsigned parts[] = {1, 1, 1};
  CHECK(multinomial(parts) == 6);
  CHECK(binomial(7, 3) == 35);
  int count = 0;
  for_each_composition(3, 3, [&](const std::vector<unsigned>&) { ++count; });
  CHECK(count == 10);
}
