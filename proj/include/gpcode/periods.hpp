#pragma once

// Gaussian periods eta_i^{(N,q)} = sum over the coset omega^i <omega^N> of
// zeta_p^{Tr(x)}, kept as exact trace-fibre counts.

#include <cstdint>
#include <optional>
#include <utility>
#include <string>
#include <vector>

#include "gpcode/cyclotomic.hpp"
#include "gpcode/field.hpp"
#include "gpcode/integer.hpp"

namespace gpcode {

/// counts[t] = #{x in the coset : Tr(x) = t}, stored sparsely as the
/// nonzero (t, count) pairs in increasing t.
struct CyclotomicCount {
  uint32_t p = 0;
  std::vector<std::pair<uint32_t, uint64_t>> nonzero;

  uint64_t count(uint32_t t) const;
  uint64_t total() const;
  std::vector<uint64_t> dense() const;
  Cyclotomic value() const;
};

/// One distinct period value and how many cosets realise it.
struct PeriodClass {
  Cyclotomic value;
  BigInt cosets;
  /// Contributing coset indices (computed sets).
  std::vector<uint64_t> indices;
  /// Contributing exponent tuples (sets obtained by reduction).
  std::vector<std::vector<unsigned>> tuples;
};

struct GaussPeriodSet {
  uint32_t p = 0;
  unsigned m = 0;
  BigInt q;
  BigInt N;
  /// Per-coset counts; empty for sets obtained by reduction.
  std::vector<CyclotomicCount> raw;
  /// Per-coset integer values, filled only when is_integral.
  std::vector<int64_t> values;
  bool is_integral = false;
  /// Distinct values, sorted (integers first, decreasing).
  std::vector<PeriodClass> classes;

  bool indexed() const { return !raw.empty(); }
  /// (q - 1) / N.
  BigInt coset_size() const { return (q - 1) / N; }
};

/// C_i = { omega^{i + jN} : 0 <= j < (q-1)/N }.
std::vector<Element> coset(const Field& f, uint64_t N, uint64_t i);

/// Periods for N | q - 1 in one pass over the log table. `workers` splits the
/// pass; the result does not depend on it.
GaussPeriodSet gaussian_periods(const Field& f, uint64_t N, unsigned workers = 1);

/// Rebuild `classes` from raw counts (merging equal values).
void refine_classes(GaussPeriodSet& s);

struct RelationCheck {
  std::string name;
  bool applicable = false;
  bool passed = false;
  std::string detail;
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  /// Sum of eta_i over all cosets (integral sets only).
  std::optional<BigInt> sum;
  /// Sum of eta_i * eta_{i+j} for j = 0..N-1 (indexed integral sets only;
  /// only j = 0 for reduced sets).
  std::vector<BigInt> shifted_sums;

  bool all_passed() const;
  std::vector<std::string> violations() const;
  const RelationCheck* find(const std::string& name) const;
};

/// Checks integrality, N*eta_i + 1 = 0 (mod p), sum eta_i = -1, the
/// correlation identities sum_i eta_i eta_{i+j} = q*theta_j - n, and the
/// trace-fibre partition identity. Identities whose hypotheses fail are
/// marked not applicable.
RelationReport check_relations(const GaussPeriodSet& s, const Field* f = nullptr);

}  // namespace gpcode
