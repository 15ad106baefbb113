#pragma once

// Integer helpers shared by every module: exact big integers, modular
// powering, primality, factorisation and the primitive-divisor test.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gpcode {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

std::string to_decimal(const BigInt& v);

/// Checked p^e in 64 bits; throws FieldTooLarge on overflow.
uint64_t ipow_u64(uint64_t base, unsigned exp);
BigInt ipow(const BigInt& base, unsigned exp);

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t mod);
uint64_t powmod(uint64_t base, uint64_t exp, uint64_t mod);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(uint64_t n);

/// Prime factorisation by trial division, as (prime, exponent) pairs in
/// increasing order of prime.
std::vector<std::pair<uint64_t, unsigned>> factorize(uint64_t n);
std::vector<uint64_t> prime_factors(uint64_t n);
/// All positive divisors in increasing order.
std::vector<uint64_t> divisors(uint64_t n);

/// Multiplicative order of x modulo n (gcd(x, n) must be 1, n >= 1).
uint64_t multiplicative_order(uint64_t x, uint64_t n);

/// Psi_b(x) = x^{b-1} + ... + x + 1, exactly. Psi_0 = 0.
BigInt psi(const BigInt& x, unsigned b);

/// n divides p^m - 1 but no p^t - 1 with 1 <= t < m.
/// Computed through the multiplicative order of p mod n.
bool is_primitive_divisor(uint64_t n, uint64_t p, unsigned m);
/// The same predicate by scanning t = 1..m directly; kept as a cross-check.
bool is_primitive_divisor_scan(uint64_t n, uint64_t p, unsigned m);

BigInt binomial(unsigned n, unsigned k);
/// b! / (l_1! ... l_s!) with sum(l) == b.
BigInt multinomial(std::span<const unsigned> parts);

/// Calls visit(tuple) for every tuple of `slots` non-negative integers
/// summing to `total`, in lexicographically decreasing order of the tuple
/// (first slot largest first).
template <class Visit>
void for_each_composition(unsigned total, unsigned slots, Visit&& visit) {
  if (slots == 0) return;
  std::vector<unsigned> tuple(slots, 0);
  auto rec = [&](auto&& self, unsigned pos, unsigned remaining) -> void {
    if (pos + 1 == slots) {
      tuple[pos] = remaining;
      visit(static_cast<const std::vector<unsigned>&>(tuple));
      return;
    }
    for (unsigned v = remaining + 1; v-- > 0;) {
      tuple[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, total);
}

}  // namespace gpcode
