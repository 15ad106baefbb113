#include "gpcode/integer.hpp"

#include <algorithm>
#include <numeric>

#include "gpcode/error.hpp"

namespace gpcode {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::InvalidElement: return "InvalidElement";
    case ErrorKind::NotADivisor: return "NotADivisor";
    case ErrorKind::DirectedGraph: return "DirectedGraph";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::TooLargeForOracle: return "TooLargeForOracle";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::BridgeHypothesisFailed: return "BridgeHypothesisFailed";
    case ErrorKind::NonIntegralWeight: return "NonIntegralWeight";
    case ErrorKind::EmptyBase: return "EmptyBase";
    case ErrorKind::DivisibilityFailed: return "DivisibilityFailed";
    case ErrorKind::NotSemiprimitive: return "NotSemiprimitive";
    case ErrorKind::NotPrimitiveDivisor: return "NotPrimitiveDivisor";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::HypothesesFailed: return "HypothesesFailed";
    case ErrorKind::CacheError: return "CacheError";
  }
  return "Unknown";
}

std::string to_decimal(const BigInt& v) { return v.str(); }

uint64_t ipow_u64(uint64_t base, unsigned exp) {
  uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base)
      throw Error(ErrorKind::FieldTooLarge,
                  std::to_string(base) + "^" + std::to_string(exp) + " overflows 64 bits");
    r *= base;
  }
  return r;
}

BigInt ipow(const BigInt& base, unsigned exp) { return boost::multiprecision::pow(base, exp); }

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t mod) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % mod);
}

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t mod) {
  if (mod == 1) return 0;
  uint64_t r = 1;
  base %= mod;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, mod);
    base = mulmod(base, base, mod);
    exp >>= 1;
  }
  return r;
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % small == 0) return n == small;
  }
  uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a deterministic witness set below 3.3e24.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::pair<uint64_t, unsigned>> factorize(uint64_t n) {
  std::vector<std::pair<uint64_t, unsigned>> out;
  for (uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> out;
  for (auto [prime, e] : factorize(n)) out.push_back(prime);
  return out;
}

std::vector<uint64_t> divisors(uint64_t n) {
  std::vector<uint64_t> out{1};
  for (auto [prime, e] : factorize(n)) {
    const std::size_t prev = out.size();
    uint64_t pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= prime;
      for (std::size_t j = 0; j < prev; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

uint64_t multiplicative_order(uint64_t x, uint64_t n) {
  if (n == 1) return 1;
  // ord_n(x) divides lambda(n) | phi(n); search divisors of phi(n).
  uint64_t phi = n;
  for (uint64_t prime : prime_factors(n)) phi = phi / prime * (prime - 1);
  uint64_t order = phi;
  for (auto [prime, e] : factorize(phi)) {
    for (unsigned i = 0; i < e && order % prime == 0; ++i) {
      if (powmod(x, order / prime, n) == 1)
        order /= prime;
      else
        break;
    }
  }
  return order;
}

BigInt psi(const BigInt& x, unsigned b) {
  BigInt sum = 0;
  BigInt term = 1;
  for (unsigned i = 0; i < b; ++i) {
    sum += term;
    term *= x;
  }
  return sum;
}

bool is_primitive_divisor(uint64_t n, uint64_t p, unsigned m) {
  if (n == 0 || m == 0) return false;
  if (n == 1) return m == 1;
  if (p % n == 0 || std::gcd(p, n) != 1) return false;
  return multiplicative_order(p, n) == m;
}

bool is_primitive_divisor_scan(uint64_t n, uint64_t p, unsigned m) {
  if (n == 0 || m == 0) return false;
  if (powmod(p, m, n) != 1 % n) return false;
  for (unsigned t = 1; t < m; ++t)
    if (powmod(p, t, n) == 1 % n) return false;
  return true;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n + 1 - i;
    r /= i;
  }
  return r;
}

BigInt multinomial(std::span<const unsigned> parts) {
  BigInt r = 1;
  unsigned total = 0;
  for (unsigned part : parts) {
    total += part;
    r *= binomial(total, part);
  }
  return r;
}

}  // namespace gpcode
