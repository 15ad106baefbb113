#pragma once

// GF(p^m) in the polynomial basis, with a discrete-log table base a
// primitive element omega.
//
// Elements are encoded canonically as sum(coeffs[i] * p^i) where coeffs are
// the polynomial-basis coordinates, so 0 is the zero element and 1 the unit.
// The modulus is the first monic irreducible polynomial of degree m when the
// lower coefficients (c_{m-1}, ..., c_0) are read as a base-p number in
// increasing order; omega is the smallest encoding of multiplicative order
// q - 1. Both choices are deterministic so tables are reproducible.

#include <compare>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gpcode {

struct Element {
  uint32_t code = 0;

  bool is_zero() const { return code == 0; }
  auto operator<=>(const Element&) const = default;
};

struct FieldOptions {
  /// Fields with q >= max_q are rejected.
  uint64_t max_q = uint64_t{1} << 32;
  /// Use this encoding as the primitive element instead of the default
  /// search. Must have order q - 1.
  std::optional<uint32_t> omega;
  /// Directory for the optional discrete-log cache.
  std::optional<std::filesystem::path> cache_dir;
};

class Field {
 public:
  static Field build(uint32_t p, unsigned m, const FieldOptions& options = {});

  uint32_t p() const { return p_; }
  unsigned m() const { return m_; }
  uint64_t q() const { return q_; }
  /// q - 1, the order of the multiplicative group.
  uint32_t group_order() const { return static_cast<uint32_t>(q_ - 1); }

  /// Monic modulus, coefficients from x^0 up to x^m.
  std::span<const uint32_t> modulus() const { return modulus_; }
  Element omega() const { return omega_; }
  Element zero() const { return {0}; }
  Element one() const { return {1}; }
  /// The element -1 (encoding p - 1).
  Element minus_one() const { return {p_ - 1}; }

  Element element(uint64_t code) const;
  std::vector<uint32_t> coeffs(Element x) const;
  Element from_coeffs(std::span<const uint32_t> coeffs) const;

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;

  // Table-driven multiplication through the discrete logarithm.
  Element mul(Element a, Element b) const;
  Element pow(Element a, uint64_t e) const;
  Element inv(Element a) const;

  // Polynomial multiplication modulo the modulus. Never touches the log
  // tables, so it can serve as an independent route in oracles.
  Element mul_poly(Element a, Element b) const;
  Element pow_poly(Element a, uint64_t e) const;

  /// Discrete log base omega of a nonzero element, in [0, q-2].
  uint32_t log(Element x) const;
  /// omega^j for any j (reduced mod q-1).
  Element exp(uint64_t j) const { return {exp_[j % (q_ - 1)]}; }

  /// Tr_{q/p}(x) as a linear functional on the polynomial coordinates.
  uint32_t trace(Element x) const;
  /// Tr_{q/p}(x) = x + x^p + ... + x^{p^{m-1}} evaluated literally.
  uint32_t trace_definitional(Element x) const;

  /// dlog_table()[code - 1] = log(code); length q - 1.
  std::span<const uint32_t> dlog_table() const { return dlog_; }
  /// trace_by_log()[j] = Tr(omega^j); length q - 1.
  std::span<const uint32_t> trace_by_log() const { return trace_by_log_; }

  /// Canonical cache file name "gf_<p>_<m>.cache".
  std::string cache_name() const;
  /// True when the tables were read from a cache file.
  bool loaded_from_cache() const { return from_cache_; }

 private:
  Field() = default;

  void build_tables();
  bool load_cache(const std::filesystem::path& path);
  void store_cache(const std::filesystem::path& path) const;
  void derive_from_log();

  uint32_t p_ = 0;
  unsigned m_ = 0;
  uint64_t q_ = 0;
  std::vector<uint32_t> modulus_;
  std::vector<uint64_t> pow_p_;
  Element omega_{};
  std::vector<uint32_t> basis_trace_;
  uint32_t trace_mask_ = 0;  // p == 2 only
  std::vector<uint32_t> dlog_;
  std::vector<uint32_t> exp_;
  std::vector<uint32_t> trace_by_log_;
  bool from_cache_ = false;
};

/// True when the monic polynomial (coefficients x^0..x^m, p prime) is
/// irreducible over GF(p).
bool is_irreducible(std::span<const uint32_t> monic, uint32_t p);

}  // namespace gpcode
