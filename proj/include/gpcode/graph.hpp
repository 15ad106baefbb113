#pragma once

// Generalized Paley graphs Gamma(k, q): the Cayley graph on GF(q) whose
// connection set is the k-th powers R_k = { x^k : x != 0 }.

#include <cstdint>
#include <optional>
#include <vector>

#include "gpcode/cyclotomic.hpp"
#include "gpcode/field.hpp"
#include "gpcode/integer.hpp"
#include "gpcode/periods.hpp"

namespace gpcode {

struct GraphSpec {
  uint32_t p = 0;
  unsigned m = 0;
  uint64_t q = 0;
  uint64_t k_input = 0;
  /// gcd(k_input, q - 1).
  uint64_t k = 0;
  /// Regularity degree (q - 1) / k.
  uint64_t n = 0;
  bool undirected = false;
  bool connected = false;
};

struct SpectrumEntry {
  Cyclotomic eigenvalue;
  BigInt multiplicity;

  bool operator==(const SpectrumEntry&) const = default;
};

/// Eigenvalues with multiplicities, sorted (integers first, decreasing).
struct Spectrum {
  std::vector<SpectrumEntry> entries;

  BigInt total() const;
  /// Sum of eigenvalue * multiplicity, i.e. the adjacency trace.
  Cyclotomic trace() const;
  std::optional<BigInt> multiplicity_of(int64_t eigenvalue) const;

  bool operator==(const Spectrum&) const = default;
};

/// Merges equal eigenvalues and sorts.
Spectrum make_spectrum(std::vector<SpectrumEntry> entries);

struct DecompositionWitness {
  unsigned a = 0;  // sub-degree, m = a*b
  unsigned b = 0;  // number of factors, > 1
  uint64_t c = 0;  // sub-regularity, n = b*c
  uint64_t u = 0;  // sub-exponent (p^a - 1) / c

  bool operator==(const DecompositionWitness&) const = default;
};

struct SemiprimitiveInfo {
  bool semiprimitive = false;
  /// Least t | m with k | p^t + 1 and m/t even.
  unsigned t = 0;
  /// (-1)^{m/(2t) + 1}.
  int sigma = 0;
};

GraphSpec graph_spec(uint32_t p, unsigned m, uint64_t k_input);

/// Spectrum via the Gaussian periods of (k, q): n once, then each coset
/// period with multiplicity n. Throws DirectedGraph.
Spectrum spectrum(const GraphSpec& g, const Field& f, unsigned workers = 1);

/// Spectrum by summing zeta_p^{Tr(gamma r)} over the connection set for
/// every gamma, using polynomial multiplication only. Throws
/// TooLargeForOracle when q > max_q.
Spectrum brute_spectrum_oracle(const GraphSpec& g, const Field& f, uint64_t max_q = 4096);

/// Witness for the smallest b > 1 (or every b when `all` is set) with
/// b | m, n = b*c and c a primitive divisor of p^{m/b} - 1.
std::vector<DecompositionWitness> find_decompositions(const GraphSpec& g, bool all);
std::optional<DecompositionWitness> find_decomposition(const GraphSpec& g);

/// Semiprimitivity with the exclusion k != p^{m/2} + 1. Needs k >= 2.
SemiprimitiveInfo is_semiprimitive_pair(uint32_t p, unsigned m, uint64_t k);
/// The same divisibility test without the k != p^{m/2} + 1 exclusion.
SemiprimitiveInfo semiprimitive_divisibility(uint32_t p, unsigned m, uint64_t k);

/// The divisor b > 1 of m with n = b (p^{m/b} - 1), if any; connected
/// graphs only.
std::optional<unsigned> is_hamming(const GraphSpec& g);

/// m even and k = (p^{m/2} + 1) / 2. Throws NotConnected.
bool check_complete_product(const GraphSpec& g);
/// Spectrum of K_{q'} x K_{q'}: {2q'-2, q'-2, -2} with multiplicities
/// {1, 2(q'-1), (q'-1)^2}.
Spectrum complete_product_spectrum(uint32_t p, uint64_t q_prime);

/// Spectrum of the b-fold cartesian power: eigenvalues l_1 x_1 + ... with
/// multinomial multiplicities.
Spectrum compose_spectrum(const Spectrum& base, unsigned b);

}  // namespace gpcode
