#pragma once

// Irreducible cyclic codes C(k, q) = { (Tr(gamma omega^{ki}))_{i<n} : gamma in F_q }.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gpcode/field.hpp"
#include "gpcode/graph.hpp"
#include "gpcode/integer.hpp"

namespace gpcode {

struct CodeParams {
  uint32_t p = 0;
  unsigned m = 0;
  uint64_t q = 0;
  uint64_t k = 0;
  uint64_t n = 0;
  /// k | (q-1)/(p-1) and n a primitive divisor of q - 1: the weight <->
  /// eigenvalue correspondence applies.
  bool bridge_valid = false;
};

/// Throws NotADivisor unless k | q - 1.
CodeParams code_params(uint32_t p, unsigned m, uint64_t k);

struct IndexedTerm {
  std::vector<unsigned> exponents;
  BigInt weight;
  BigInt frequency;
};

struct WeightDistribution {
  enum class Source { brute, composed, closed_form, spectrum };

  uint64_t length = 0;
  uint32_t alphabet = 0;
  /// weight -> frequency, increasing weight.
  std::map<uint64_t, BigInt> table;
  Source source = Source::brute;
  /// Unmerged terms when the distribution came from a tuple formula.
  std::vector<IndexedTerm> indexed;

  BigInt total() const;
  BigInt frequency(uint64_t w) const;
  /// Smallest nonzero weight (0 if none).
  uint64_t min_distance() const;
  /// Same length, alphabet and table; source and indexed terms ignored.
  bool same_table(const WeightDistribution& o) const;
};

std::string_view to_string(WeightDistribution::Source s);

/// Coordinate i is Tr(gamma * omega^{k i}), i = 0..n-1.
std::vector<uint32_t> codeword(const Field& f, uint64_t k, Element gamma);

/// Hamming weight of c_gamma read off the trace-by-log table.
uint64_t codeword_weight(const Field& f, uint64_t k, Element gamma);

struct BruteOptions {
  /// Maximum number of coordinate evaluations.
  uint64_t budget = uint64_t{1} << 31;
  unsigned workers = 1;
  /// Evaluate one gamma per orbit of gamma -> gamma * omega^k (whose words
  /// are cyclic shifts of each other) and count it n times.
  bool shift_orbits = false;
};

/// Exact distribution over all gamma in F_q (gamma = 0 first, then by
/// discrete log). Throws NotADivisor, BudgetExceeded.
WeightDistribution brute_weight_distribution(const Field& f, uint64_t k, const BruteOptions& options = {});

/// w = (p-1)(n - lambda)/p. Throws BridgeHypothesisFailed, NonIntegralWeight.
WeightDistribution weights_from_spectrum(const Spectrum& s, const CodeParams& params);
/// lambda = n - p w/(p-1). Throws BridgeHypothesisFailed, NonIntegralWeight.
Spectrum eigenvalues_from_weights(const WeightDistribution& d, const CodeParams& params);

}  // namespace gpcode
