#pragma once

// Self-verification suites: every closed form against an independent
// brute-force route, over exhaustive parameter sweeps.

#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace gpcode {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  /// Number of individual cases behind the checks.
  uint64_t cases = 0;

  bool passed() const;
  std::size_t failures() const;
};

struct VerifyOptions {
  unsigned workers = 1;
  std::optional<std::filesystem::path> cache_dir;
  /// Progress lines go here when set.
  std::ostream* log = nullptr;
};

/// Reference tables: C(42799, 2^21), C(434, 5^6), the semiprimitive tower
/// rows at p = 5 and 11, the cubic tower C(516, 7^6), and the periods of
/// (434, 5^6).
SuiteReport verify_reference_tables(const VerifyOptions& o = {});
/// Field construction invariants for every q <= 2^12.
SuiteReport verify_field(const VerifyOptions& o = {});
/// Spectrum-derived weights against brute force, p in {2,3,5,7}, q <= 2^14.
SuiteReport verify_bridge(const VerifyOptions& o = {});
/// Period spectrum against the character-sum oracle, every undirected
/// Gamma(k, q) with q <= 2^12.
SuiteReport verify_spectrum(const VerifyOptions& o = {});
/// Composition against brute force for every decomposition witness with
/// p^{ab} <= 2^20, plus every closed-form route in that range.
SuiteReport verify_composition(const VerifyOptions& o = {});
/// Curve counts: trace criterion, fibre histogram, naive loop and the
/// weight formula; the alternative eigenvalue formula; the (3, 7) extension.
SuiteReport verify_curves(const VerifyOptions& o = {});
/// Period relations and partition identities over the sweeps.
SuiteReport verify_relations(const VerifyOptions& o = {});

/// Suite names accepted by run_suite.
const std::vector<std::string>& suite_names();
/// One suite by name, or every suite for "all". Empty for unknown names.
std::vector<SuiteReport> run_suite(const std::string& name, const VerifyOptions& o = {});

}  // namespace gpcode
