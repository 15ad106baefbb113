#pragma once

// Rational points of Artin-Schreier curves y^p - y = beta x^k over F_q,
// counted with one point at infinity.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gpcode/code.hpp"
#include "gpcode/field.hpp"
#include "gpcode/integer.hpp"

namespace gpcode {

struct CurveCount {
  uint32_t p = 0;
  unsigned m = 0;
  uint64_t k = 0;
  Element beta;
  std::optional<BigInt> count_brute;
  /// p^{m+1} - p k w(c(beta)) + 1.
  BigInt count_weight_formula;
  /// 2p^m + k(p-1) lambda_beta; only when lambda_beta is an integer.
  std::optional<BigInt> count_alternative;
};

/// 1 + p #{x : Tr(beta x^k) = 0}. Throws NotADivisor, BudgetExceeded.
BigInt count_points_brute(const Field& f, uint64_t k, Element beta, uint64_t budget = uint64_t{1} << 31);

/// Counts pairs (x, y) with y^p - y = beta x^k directly (plus one point at
/// infinity) using polynomial arithmetic only: a literal double loop.
BigInt count_points_naive(const Field& f, uint64_t k, Element beta);

/// Same count through the image histogram of y -> y^p - y, which avoids the
/// trace criterion without the quadratic cost.
class ArtinSchreierCounter {
 public:
  explicit ArtinSchreierCounter(const Field& f);
  BigInt count(uint64_t k, Element beta) const;

 private:
  const Field* f_;
  std::vector<uint32_t> fibre_;  // fibre_[z] = #{y : y^p - y = z}
};

/// Full record for one beta; `with_brute` adds the trace-criterion count.
CurveCount curve_count(const Field& f, uint64_t k, Element beta, bool with_brute);

struct EigenvalueCount {
  BigInt derived;     // p^m + p + k(p-1) lambda
  BigInt alternative;  // 2p^m + k(p-1) lambda
};

/// Throws HypothesesFailed unless k | (q-1)/(p-1) and n is a primitive divisor.
EigenvalueCount count_points_from_eigenvalue(const CodeParams& params, int64_t lambda);

struct CurveReduction {
  uint64_t k = 0;
  unsigned m = 0;
  /// Weights of c(alpha_i) in C(u, p^a) and the curve counts over F_{p^a}.
  std::vector<uint64_t> base_weights;
  std::vector<BigInt> base_counts;
  /// p^{m+1} + 1 - p k sum w(c(alpha_i)).
  BigInt derived;
  /// (1/b) Psi_b(p^a) sum #C_i - (p+1) p^a Psi_{b-1}(p^a), exact rational.
  BigRational reduction_formula;
  /// derived appears among p^{m+1} + 1 - p k w over the composed table.
  bool in_count_set = false;
};

/// Throws HypothesesFailed when (p, a, b, c, u) do not decompose.
CurveReduction curve_reduction(uint32_t p, unsigned a, unsigned b, uint64_t u, const std::vector<Element>& alphas);

struct CongruenceCheck {
  std::string name;
  BigInt modulus;
  bool applicable = true;
  bool passed = false;
};

/// The congruences #C = (1/b) Psi_b sum C_i (mod p+1 and p^a), and
/// b #C = Psi_b sum C_i (mod p^a), b #C = p^{a(b-1)} sum C_i (mod Psi_{b-1}).
std::vector<CongruenceCheck> count_congruences(uint32_t p, unsigned a, unsigned b, const BigInt& count,
                                               const std::vector<BigInt>& base_counts);

}  // namespace gpcode
