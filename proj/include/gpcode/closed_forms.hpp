#pragma once

// Closed-form weight distributions and period values for decomposable
// GP-graphs / irreducible cyclic codes: multinomial composition, simplex and
// semiprimitive towers, cubic and quartic towers, and period reduction.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gpcode/code.hpp"
#include "gpcode/graph.hpp"
#include "gpcode/integer.hpp"
#include "gpcode/periods.hpp"

namespace gpcode {

/// b-fold composition: weights l_1 w_1 + ... + l_s w_s with frequency
/// multinomial(b; l) * prod A_i^{l_i}. Indexed exponents run over the base
/// table in increasing weight (weight 0 first). Throws EmptyBase.
WeightDistribution compose(const WeightDistribution& base, unsigned b, bool keep_indexed = true);

/// Simplex code C(1, p^a): weight (p-1)p^{a-1} with frequency p^a - 1.
WeightDistribution simplex(uint32_t p, unsigned a);

/// C(Psi_b(p^a)/b, p^{ab}): weights l w, frequencies binom(b,l)(p^a-1)^l.
/// Throws DivisibilityFailed unless b | Psi_b(p^a).
WeightDistribution one_weight_tower(uint32_t p, unsigned a, unsigned b);

/// The two-weight code C(u, p^a) for u | p^t + 1, a/t even. Accepts
/// u = p^{a/2} + 1, where w1 collapses to 0. Throws NotSemiprimitive.
WeightDistribution semiprimitive_base(uint32_t p, unsigned a, uint64_t u);

/// b-fold tower over semiprimitive_base, merged table plus (l1, l2) terms.
/// Throws NotSemiprimitive, NotPrimitiveDivisor.
WeightDistribution semiprimitive_tower(uint32_t p, unsigned a, uint64_t u, unsigned b);

/// binom(b,l1) binom(b-l1,l2) c^{l1+l2} (u-1)^{l1}, kept for comparison. The
/// tower uses the composed frequency, which has (u-1)^{l2}; the two agree
/// only for u = 2.
BigInt semiprimitive_frequency_variant(uint64_t c, uint64_t u, unsigned b, unsigned l1, unsigned l2);

struct DiophantineSolution {
  enum class Kind { cubic, quartic };
  int64_t a = 0;
  int64_t b = 0;  // >= 0
  Kind kind = Kind::cubic;
};

/// 4p^t = a^2 + 27b^2, a = 1 (mod 3), gcd(a, p) = 1, b >= 0.
/// Throws PreconditionFailed unless p = 1 (mod 3); NoSolution when zero or
/// several solutions are found.
DiophantineSolution solve_cubic_diophantine(uint32_t p, unsigned t);
/// p^{2t} = a^2 + 4b^2, a = 1 (mod 4), gcd(a, p) = 1, b >= 0.
DiophantineSolution solve_quartic_diophantine(uint32_t p, unsigned t);

/// C(3, p^{3t}) for p = 1 (mod 3).
WeightDistribution cubic_base(uint32_t p, unsigned t);
/// C(3 Psi_r(q)/r, q^r), q = p^{3t}, indexed by (l1, l2, l3).
/// Throws PreconditionFailed naming the violated clause.
WeightDistribution cubic_tower(uint32_t p, unsigned t, unsigned r);
/// Same with an explicit solution, e.g. (a, -b) for the symmetry check.
WeightDistribution cubic_tower_with(uint32_t p, unsigned t, unsigned r, const DiophantineSolution& s);

/// C(4, p^{4t}) for p = 1 (mod 4).
WeightDistribution quartic_base(uint32_t p, unsigned t);
/// C(4 Psi_r(q)/r, q^r), q = p^{4t}, indexed by (l1, l2, l3, l4).
WeightDistribution quartic_tower(uint32_t p, unsigned t, unsigned r);

/// Period set of Gamma(k, p^{ab}) from the periods of (u, p^a): values
/// c l_0 + sum l_j eta_j over tuples summing to b other than (b, 0, ...).
/// Classes carry the contributing tuples. Throws HypothesesFailed.
GaussPeriodSet reduce_periods(const GaussPeriodSet& base, unsigned b);

/// The same for a semiprimitive base without computing it:
/// l0 c + l1((u-1) sigma sqrt(p^a) - 1)/u - l2 (sigma sqrt(p^a) + 1)/u.
/// Throws NotSemiprimitive, HypothesesFailed.
GaussPeriodSet reduce_periods_semiprimitive(uint32_t p, unsigned a, unsigned b, uint64_t u);

/// Letters (a)-(f) of the classical sufficient conditions for b | Psi_b(x)
/// that pattern-match; informational only.
std::vector<char> psi_divisibility_cases(const BigInt& x, unsigned b, uint32_t p);

struct ClosedFormResult {
  WeightDistribution distribution;
  /// "simplex", "semiprimitive", "one-weight tower", "semiprimitive tower",
  /// "cubic", "cubic tower", "quartic", "quartic tower", "composed".
  std::string route;
  std::optional<DecompositionWitness> witness;
};

struct ClosedFormOptions {
  /// Budget for a brute base when no formula covers C(u, p^a).
  BruteOptions base_brute;
  bool allow_brute_base = true;
};

/// Weight distribution of C(k, p^m) without enumerating F_{p^m}.
/// Throws PreconditionFailed when no route applies.
ClosedFormResult closed_form_distribution(uint32_t p, unsigned m, uint64_t k, const ClosedFormOptions& options = {});

}  // namespace gpcode
