#include "gpcode/field.hpp"

#include <array>
#include <cstring>
#include <fstream>

#include "gpcode/error.hpp"
#include "gpcode/integer.hpp"

namespace gpcode {

namespace {

// Dense polynomials over GF(p), coefficients low to high, no trailing zeros
// (the zero polynomial is empty).
using Poly = std::vector<uint64_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

uint64_t inv_mod(uint64_t a, uint64_t p) { return powmod(a, p - 2, p); }

Poly poly_mod(Poly a, const Poly& f, uint64_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const uint64_t lead_inv = inv_mod(f.back(), p);
  while (a.size() > df) {
    const uint64_t coef = mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i)
      a[shift + i] = (a[shift + i] + p - mulmod(coef, f[i], p)) % p;
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, uint64_t e, const Poly& f, uint64_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Poly poly_sub(Poly a, const Poly& b, uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

Poly poly_gcd(Poly a, Poly b, uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

constexpr std::array<char, 8> kCacheMagic = {'G', 'P', 'C', 'O', 'D', 'E', '1', '\n'};

void write_u32(std::ofstream& out, uint32_t v) {
  const unsigned char bytes[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                                  static_cast<unsigned char>(v >> 16), static_cast<unsigned char>(v >> 24)};
  out.write(reinterpret_cast<const char*>(bytes), 4);
}

bool read_u32(std::ifstream& in, uint32_t& v) {
  unsigned char bytes[4];
  if (!in.read(reinterpret_cast<char*>(bytes), 4)) return false;
  v = uint32_t{bytes[0]} | uint32_t{bytes[1]} << 8 | uint32_t{bytes[2]} << 16 | uint32_t{bytes[3]} << 24;
  return true;
}

}  // namespace

bool is_irreducible(std::span<const uint32_t> monic, uint32_t p) {
  const std::size_t m = monic.size() - 1;
  if (m == 0) return false;
  if (m == 1) return true;
  Poly f(monic.begin(), monic.end());
  const Poly x{0, 1};
  // Rabin: x^{p^m} = x mod f, and gcd(x^{p^{m/r}} - x, f) = 1 for primes r | m.
  std::vector<Poly> frob(m + 1);
  frob[0] = x;
  for (std::size_t i = 1; i <= m; ++i) frob[i] = poly_powmod(frob[i - 1], p, f, p);
  if (poly_sub(frob[m], x, p) != Poly{}) return false;
  for (uint64_t r : prime_factors(m)) {
    Poly g = poly_gcd(f, poly_sub(frob[m / r], x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

Field Field::build(uint32_t p, unsigned m, const FieldOptions& options) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (m == 0) throw Error(ErrorKind::PreconditionFailed, "extension degree must be at least 1");
  uint64_t q = 0;
  try {
    q = ipow_u64(p, m);
  } catch (const Error&) {
    throw Error(ErrorKind::FieldTooLarge, std::to_string(p) + "^" + std::to_string(m) + " overflows");
  }
  const uint64_t bound = std::min<uint64_t>(options.max_q, uint64_t{1} << 32);
  if (q >= bound)
    throw Error(ErrorKind::FieldTooLarge,
                "q = " + std::to_string(q) + " is not below the bound " + std::to_string(bound));

  Field f;
  f.p_ = p;
  f.m_ = m;
  f.q_ = q;
  f.pow_p_.resize(m + 1);
  f.pow_p_[0] = 1;
  for (unsigned i = 1; i <= m; ++i) f.pow_p_[i] = f.pow_p_[i - 1] * p;

  // First irreducible monic modulus in increasing order of the lower part.
  const uint64_t lower_count = f.pow_p_[m];
  std::vector<uint32_t> candidate(m + 1, 0);
  candidate[m] = 1;
  for (uint64_t code = 0; code < lower_count; ++code) {
    uint64_t c = code;
    for (unsigned i = 0; i < m; ++i) {
      candidate[i] = static_cast<uint32_t>(c % p);
      c /= p;
    }
    if (m > 1 && candidate[0] == 0) continue;
    if (is_irreducible(candidate, p)) {
      f.modulus_ = candidate;
      break;
    }
  }
  if (f.modulus_.empty()) throw Error(ErrorKind::PreconditionFailed, "no irreducible modulus found");

  // Trace of each basis monomial, evaluated literally.
  f.basis_trace_.resize(m);
  for (unsigned i = 0; i < m; ++i) {
    f.basis_trace_[i] = f.trace_definitional(Element{static_cast<uint32_t>(f.pow_p_[i])});
    if (p == 2 && f.basis_trace_[i]) f.trace_mask_ |= uint32_t{1} << i;
  }

  const auto factors = prime_factors(q - 1);
  auto is_generator = [&](Element x) {
    if (x.is_zero()) return false;
    for (uint64_t r : factors)
      if (f.pow_poly(x, (q - 1) / r) == f.one()) return false;
    return true;
  };
  if (options.omega) {
    Element w = f.element(*options.omega);
    if (!is_generator(w))
      throw Error(ErrorKind::PreconditionFailed,
                  "injected element " + std::to_string(*options.omega) + " is not primitive");
    f.omega_ = w;
  } else {
    for (uint64_t code = 1; code < q; ++code) {
      if (is_generator(Element{static_cast<uint32_t>(code)})) {
        f.omega_ = Element{static_cast<uint32_t>(code)};
        break;
      }
    }
  }

  // The cache is keyed on the default omega only.
  std::optional<std::filesystem::path> cache_path;
  if (options.cache_dir && !options.omega) cache_path = *options.cache_dir / f.cache_name();
  if (cache_path && f.load_cache(*cache_path)) {
    f.from_cache_ = true;
    return f;
  }
  f.build_tables();
  if (cache_path) f.store_cache(*cache_path);
  return f;
}

void Field::build_tables() {
  const uint64_t n = q_ - 1;
  dlog_.assign(n, UINT32_MAX);
  exp_.resize(n);
  Element cur = one();
  for (uint64_t j = 0; j < n; ++j) {
    if (dlog_[cur.code - 1] != UINT32_MAX)
      throw Error(ErrorKind::PreconditionFailed, "omega repeated before q - 1 steps");
    exp_[j] = cur.code;
    dlog_[cur.code - 1] = static_cast<uint32_t>(j);
    cur = mul_poly(cur, omega_);
  }
  if (cur != one()) throw Error(ErrorKind::PreconditionFailed, "omega^(q-1) != 1");
  trace_by_log_.resize(n);
  for (uint64_t j = 0; j < n; ++j) trace_by_log_[j] = trace(Element{exp_[j]});
}

void Field::derive_from_log() {
  const uint64_t n = q_ - 1;
  exp_.assign(n, 0);
  for (uint64_t c = 1; c <= n; ++c) {
    const uint32_t j = dlog_[c - 1];
    if (j >= n || exp_[j] != 0) throw Error(ErrorKind::CacheError, "discrete-log table is not a bijection");
    exp_[j] = static_cast<uint32_t>(c);
  }
  trace_by_log_.resize(n);
  for (uint64_t j = 0; j < n; ++j) trace_by_log_[j] = trace(Element{exp_[j]});
}

std::string Field::cache_name() const {
  return "gf_" + std::to_string(p_) + "_" + std::to_string(m_) + ".cache";
}

bool Field::load_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::array<char, 8> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kCacheMagic) return false;
  uint32_t p = 0, m = 0, w = 0;
  if (!read_u32(in, p) || !read_u32(in, m) || p != p_ || m != m_) return false;
  for (unsigned i = 0; i <= m_; ++i) {
    uint32_t c = 0;
    if (!read_u32(in, c) || c != modulus_[i]) return false;
  }
  if (!read_u32(in, w) || w != omega_.code) return false;
  const uint64_t n = q_ - 1;
  dlog_.resize(n);
  std::vector<unsigned char> raw(n * 4);
  if (!in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()))) return false;
  for (uint64_t i = 0; i < n; ++i) {
    const unsigned char* b = raw.data() + 4 * i;
    dlog_[i] = uint32_t{b[0]} | uint32_t{b[1]} << 8 | uint32_t{b[2]} << 16 | uint32_t{b[3]} << 24;
  }
  try {
    derive_from_log();
  } catch (const Error&) {
    return false;
  }
  // Spot-check the walk omega^j -> omega^{j+1} at a spread of positions.
  const uint64_t step = std::max<uint64_t>(1, n / 64);
  for (uint64_t j = 0; j < n; j += step) {
    if (mul_poly(Element{exp_[j]}, omega_).code != exp_[(j + 1) % n]) return false;
  }
  return true;
}

void Field::store_cache(const std::filesystem::path& path) const {
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out.write(kCacheMagic.data(), kCacheMagic.size());
    write_u32(out, p_);
    write_u32(out, m_);
    for (uint32_t c : modulus_) write_u32(out, c);
    write_u32(out, omega_.code);
    for (uint32_t v : dlog_) write_u32(out, v);
    if (!out) return;
  }
  std::filesystem::rename(tmp, path, ec);
}

Element Field::element(uint64_t code) const {
  if (code >= q_)
    throw Error(ErrorKind::InvalidElement, "encoding " + std::to_string(code) + " outside GF(" + std::to_string(q_) + ")");
  return Element{static_cast<uint32_t>(code)};
}

std::vector<uint32_t> Field::coeffs(Element x) const {
  std::vector<uint32_t> out(m_);
  uint32_t c = x.code;
  for (unsigned i = 0; i < m_; ++i) {
    out[i] = c % p_;
    c /= p_;
  }
  return out;
}

Element Field::from_coeffs(std::span<const uint32_t> coeffs) const {
  uint64_t code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) code = code * p_ + coeffs[i] % p_;
  return element(code);
}

Element Field::add(Element a, Element b) const {
  if (p_ == 2) return Element{a.code ^ b.code};
  uint32_t x = a.code, y = b.code, r = 0;
  for (unsigned i = 0; i < m_; ++i) {
    r += static_cast<uint32_t>(((x % p_ + y % p_) % p_) * pow_p_[i]);
    x /= p_;
    y /= p_;
  }
  return Element{r};
}

Element Field::neg(Element a) const {
  if (p_ == 2) return a;
  uint32_t x = a.code, r = 0;
  for (unsigned i = 0; i < m_; ++i) {
    r += static_cast<uint32_t>(((p_ - x % p_) % p_) * pow_p_[i]);
    x /= p_;
  }
  return Element{r};
}

Element Field::sub(Element a, Element b) const { return add(a, neg(b)); }

Element Field::mul(Element a, Element b) const {
  if (a.is_zero() || b.is_zero()) return zero();
  const uint64_t s = uint64_t{dlog_[a.code - 1]} + dlog_[b.code - 1];
  return Element{exp_[s % (q_ - 1)]};
}

Element Field::pow(Element a, uint64_t e) const {
  if (e == 0) return one();
  if (a.is_zero()) return zero();
  return exp(static_cast<uint64_t>(static_cast<unsigned __int128>(dlog_[a.code - 1]) * e % (q_ - 1)));
}

Element Field::inv(Element a) const {
  if (a.is_zero()) throw Error(ErrorKind::InvalidElement, "zero has no inverse");
  return exp((q_ - 1 - dlog_[a.code - 1]) % (q_ - 1));
}

uint32_t Field::log(Element x) const {
  if (x.is_zero() || x.code >= q_) throw Error(ErrorKind::InvalidElement, "log of zero or invalid element");
  return dlog_[x.code - 1];
}

Element Field::mul_poly(Element a, Element b) const {
  if (p_ == 2) {
    uint64_t prod = 0;
    uint64_t x = a.code;
    for (uint32_t y = b.code; y; y >>= 1, x <<= 1)
      if (y & 1) prod ^= x;
    uint64_t mod_bits = 0;
    for (unsigned i = 0; i <= m_; ++i)
      if (modulus_[i]) mod_bits |= uint64_t{1} << i;
    for (unsigned i = 2 * m_; i-- > m_;)
      if (prod >> i & 1) prod ^= mod_bits << (i - m_);
    return Element{static_cast<uint32_t>(prod)};
  }
  std::array<uint64_t, 64> prod{};
  std::array<uint32_t, 32> da{}, db{};
  uint32_t x = a.code, y = b.code;
  for (unsigned i = 0; i < m_; ++i) {
    da[i] = x % p_;
    db[i] = y % p_;
    x /= p_;
    y /= p_;
  }
  for (unsigned i = 0; i < m_; ++i) {
    if (!da[i]) continue;
    for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + uint64_t{da[i]} * db[j]) % p_;
  }
  // Reduce with the monic modulus: x^m = -(c_{m-1} x^{m-1} + ... + c_0).
  for (unsigned i = 2 * m_ - 1; i-- > m_;) {
    const uint64_t coef = prod[i] % p_;
    if (!coef) continue;
    prod[i] = 0;
    for (unsigned j = 0; j < m_; ++j)
      prod[i - m_ + j] = (prod[i - m_ + j] + (p_ - modulus_[j]) % p_ * coef) % p_;
  }
  uint64_t code = 0;
  for (unsigned i = m_; i-- > 0;) code = code * p_ + prod[i] % p_;
  return Element{static_cast<uint32_t>(code)};
}

Element Field::pow_poly(Element a, uint64_t e) const {
  Element r = one();
  while (e) {
    if (e & 1) r = mul_poly(r, a);
    a = mul_poly(a, a);
    e >>= 1;
  }
  return r;
}

uint32_t Field::trace(Element x) const {
  if (p_ == 2) return static_cast<uint32_t>(__builtin_popcount(x.code & trace_mask_) & 1);
  uint64_t acc = 0;
  uint32_t c = x.code;
  for (unsigned i = 0; i < m_; ++i) {
    acc += uint64_t{c % p_} * basis_trace_[i];
    c /= p_;
  }
  return static_cast<uint32_t>(acc % p_);
}

uint32_t Field::trace_definitional(Element x) const {
  Element sum = zero();
  Element power = x;
  for (unsigned i = 0; i < m_; ++i) {
    sum = add(sum, power);
    power = pow_poly(power, p_);
  }
  if (sum.code >= p_) throw Error(ErrorKind::PreconditionFailed, "trace left the prime field");
  return sum.code;
}

}  // namespace gpcode
