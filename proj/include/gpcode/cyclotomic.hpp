#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gpcode {

/// An element sum_t c[t] * zeta_p^t of Z[zeta_p].
///
/// The only integer relation among 1, zeta, ..., zeta^{p-1} is their sum, so
/// two coefficient vectors denote the same number iff they differ by a
/// constant vector. The normal form subtracts the most frequent coefficient
/// (smallest one on ties) and keeps the remaining nonzero entries sorted by
/// exponent, which makes equality structural and stays sparse for the
/// typical trace-fibre count vectors.
class Cyclotomic {
 public:
  using Term = std::pair<uint32_t, int64_t>;  // (exponent, coefficient)

  Cyclotomic() = default;
  /// The rational integer v viewed in Z[zeta_p].
  static Cyclotomic integer(uint32_t p, int64_t v);
  /// From a dense coefficient vector of length p.
  static Cyclotomic from_counts(std::span<const int64_t> counts);
  static Cyclotomic from_counts(std::span<const uint64_t> counts);
  /// From sparse (exponent, coefficient) terms; repeated exponents add up.
  static Cyclotomic from_terms(uint32_t p, std::vector<Term> terms);

  uint32_t p() const { return p_; }
  /// Nonzero coefficients of the normal form.
  std::span<const Term> terms() const { return terms_; }
  std::vector<int64_t> dense() const;

  /// True when the value lies in Z.
  bool is_integer() const;
  std::optional<int64_t> as_integer() const;

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic operator*(int64_t k) const;

  bool operator==(const Cyclotomic&) const = default;
  /// Integers first, in decreasing value; then the rest by normal form.
  std::strong_ordering operator<=>(const Cyclotomic& o) const;

  /// "12" for integers, "[c0,c1,...]" (normal form, dense) otherwise.
  std::string to_string() const;

 private:
  void normalize();

  uint32_t p_ = 0;
  std::vector<Term> terms_;
};

}  // namespace gpcode
