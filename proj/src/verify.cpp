#include "gpcode/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <unistd.h>

#include "gpcode/closed_forms.hpp"
#include "gpcode/curves.hpp"
#include "gpcode/error.hpp"
#include "gpcode/format.hpp"

namespace gpcode {

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

namespace {

// Aggregates many individual comparisons under a handful of named checks,
// keeping the first failure of each.
class Tally {
 public:
  Tally(std::string suite, const VerifyOptions& o) : o_(o), start_(std::chrono::steady_clock::now()) {
    report_.suite = std::move(suite);
  }

  template <class Detail>
  bool expect(const std::string& check, bool ok, Detail&& detail) {
    auto it = index_.find(check);
    if (it == index_.end()) {
      it = index_.emplace(check, report_.checks.size()).first;
      report_.checks.push_back({check, true, ""});
      counts_.push_back(0);
    }
    ++counts_[it->second];
    ++report_.cases;
    Check& c = report_.checks[it->second];
    if (!ok && c.passed) {
      c.passed = false;
      c.detail = detail();
    }
    return ok;
  }

  bool expect(const std::string& check, bool ok) {
    return expect(check, ok, [] { return std::string("mismatch"); });
  }

  // Runs `body`, turning an unexpected exception into a failed check.
  template <class Body>
  void guarded(const std::string& check, const std::string& where, Body&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      expect(check, false, [&] { return where + ": " + e.what(); });
    }
  }

  void progress(const std::string& line) {
    if (o_.log) *o_.log << "  [" << report_.suite << "] " << line << std::endl;
  }

  SuiteReport finish() {
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    for (std::size_t i = 0; i < report_.checks.size(); ++i) {
      auto& c = report_.checks[i];
      if (c.passed) c.detail = std::to_string(counts_[i]) + " cases";
    }
    progress("done in " + std::to_string(secs) + " s");
    return std::move(report_);
  }

 private:
  const VerifyOptions& o_;
  std::chrono::steady_clock::time_point start_;
  SuiteReport report_;
  std::map<std::string, std::size_t> index_;
  std::vector<uint64_t> counts_;
};

struct PrimePower {
  uint32_t p;
  unsigned m;
  uint64_t q;
};

// Every prime power p^m <= max_q (m >= min_m), by increasing p then m;
// `primes` restricts p when non-empty.
std::vector<PrimePower> prime_powers(uint64_t max_q, std::vector<uint32_t> primes = {}, unsigned min_m = 1) {
  std::vector<PrimePower> out;
  for (uint64_t p = 2; p <= max_q; ++p) {
    if (!primes.empty() && std::find(primes.begin(), primes.end(), p) == primes.end()) continue;
    if (!is_prime(p)) continue;
    uint64_t q = p;
    for (unsigned m = 1; q <= max_q; ++m, q *= p)
      if (m >= min_m) out.push_back({static_cast<uint32_t>(p), m, q});
    if (p * p > max_q && min_m >= 2) break;
  }
  return out;
}

Field make_field(uint32_t p, unsigned m, const VerifyOptions& o) {
  FieldOptions fo;
  fo.cache_dir = o.cache_dir;
  return Field::build(p, m, fo);
}

std::string label(uint32_t p, unsigned m, uint64_t k) {
  return "(p,m,k) = (" + std::to_string(p) + "," + std::to_string(m) + "," + std::to_string(k) + ")";
}

std::string table_string(const WeightDistribution& d) {
  std::string s;
  for (const auto& [w, a] : d.table) s += (s.empty() ? "" : " ") + std::to_string(w) + ":" + a.str();
  return s;
}

using ClassMultiset = std::map<Cyclotomic, BigInt>;

ClassMultiset class_multiset(const GaussPeriodSet& s) {
  ClassMultiset out;
  for (const auto& c : s.classes) out[c.value] += c.cosets;
  return out;
}

const BruteOptions kFullBrute{uint64_t{1} << 40, 1, false};
const BruteOptions kOrbitBrute{uint64_t{1} << 40, 1, true};

}  // namespace

// ---------------------------------------------------------------------------

SuiteReport verify_reference_tables(const VerifyOptions& o) {
  Tally t("paper-tables", o);

  t.guarded("one-weight tower C(42799, 2^21)", "example", [&] {
    t.expect("one-weight tower C(42799, 2^21)", psi(8, 7) == 299593 && psi(8, 7) / 7 == 42799);
    const Field f = make_field(2, 21, o);
    const auto brute = brute_weight_distribution(f, 42799, {uint64_t{1} << 31, o.workers, false});
    const std::map<uint64_t, BigInt> expected{{0, 1},      {4, 49},      {8, 1029},    {12, 12005},
                                              {16, 84035}, {20, 352947}, {24, 823543}, {28, 823543}};
    t.expect("one-weight tower C(42799, 2^21)", brute.table == expected, [&] { return table_string(brute); });
    const auto tower = one_weight_tower(2, 3, 7);
    t.expect("one-weight tower C(42799, 2^21)", tower.same_table(brute), [&] { return table_string(tower); });
    t.expect("one-weight tower C(42799, 2^21)", compose(simplex(2, 3), 7).same_table(brute));
    const auto hamming = is_hamming(graph_spec(2, 21, 42799));
    t.expect("one-weight tower C(42799, 2^21)", hamming && *hamming == 7);
  });

  t.guarded("semiprimitive tower C(434, 5^6)", "example", [&] {
    const Field f = make_field(5, 6, o);
    const auto brute = brute_weight_distribution(f, 434);
    const std::map<uint64_t, BigInt> expected{{0, 1},    {8, 36},    {12, 36},   {16, 432}, {20, 864},
                                              {24, 2160}, {28, 5184}, {32, 5184}, {36, 1728}};
    t.expect("semiprimitive tower C(434, 5^6)", brute.table == expected, [&] { return table_string(brute); });
    t.expect("semiprimitive tower C(434, 5^6)", semiprimitive_tower(5, 2, 2, 3).same_table(brute));
    t.expect("semiprimitive tower C(434, 5^6)", compose(semiprimitive_base(5, 2, 2), 3).same_table(brute));
    t.expect("semiprimitive tower C(434, 5^6)",
             brute.length == 36 && brute.min_distance() == 8 && brute.total() == ipow(BigInt(5), 6));
  });

  for (uint32_t p : {5u, 11u}) {
    const std::string name = "semiprimitive table, p = " + std::to_string(p);
    t.guarded(name, "symbolic", [&] {
      const BigInt c = BigInt(p * p - 1) / 2;
      const BigInt pm1 = p - 1;
      // (l1, l2) -> (weight, frequency) as tabulated.
      const std::map<std::pair<unsigned, unsigned>, std::pair<BigInt, BigInt>> rows{
          {{0, 0}, {0, 1}},
          {{1, 0}, {pm1 * pm1 / 2, 3 * c}},
          {{2, 0}, {pm1 * pm1, 3 * c * c}},
          {{3, 0}, {3 * pm1 * pm1 / 2, c * c * c}},
          {{0, 1}, {c, 3 * c}},
          {{0, 2}, {BigInt(p * p - 1), 3 * c * c}},
          {{0, 3}, {3 * c, c * c * c}},
          {{1, 1}, {BigInt(p) * pm1, 6 * c * c}},
          {{2, 1}, {pm1 * (3 * p - 1) / 2, 3 * c * c * c}},
          {{1, 2}, {pm1 * (3 * p + 1) / 2, 3 * c * c * c}}};
      const auto tower = semiprimitive_tower(p, 2, 2, 3);
      t.expect(name, tower.indexed.size() == rows.size());
      for (const auto& term : tower.indexed) {
        const auto it = rows.find({term.exponents[0], term.exponents[1]});
        const bool ok = it != rows.end() && it->second.first == term.weight && it->second.second == term.frequency;
        t.expect(name, ok, [&] { return "row (" + std::to_string(term.exponents[0]) + "," +
                                        std::to_string(term.exponents[1]) + ")"; });
        t.expect(name, semiprimitive_frequency_variant(static_cast<uint64_t>(c), 2, 3, term.exponents[0],
                                                       term.exponents[1]) == term.frequency);
      }
      t.expect(name, tower.total() == ipow(BigInt(p), 6));
    });
  }

  t.guarded("cubic tower C(516, 7^6)", "example", [&] {
    const auto s = solve_cubic_diophantine(7, 1);
    t.expect("cubic tower C(516, 7^6)", s.a == 1 && s.b == 1);
    const BigInt c2 = BigInt(114) * 114;
    const std::map<std::vector<unsigned>, std::pair<BigInt, BigInt>> rows{
        {{0, 0, 0}, {0, 1}},       {{1, 0, 0}, {96, 228}},    {{0, 1, 0}, {108, 228}},   {{0, 0, 1}, {90, 228}},
        {{2, 0, 0}, {192, c2}},    {{0, 2, 0}, {216, c2}},    {{0, 0, 2}, {180, c2}},    {{1, 1, 0}, {204, 2 * c2}},
        {{1, 0, 1}, {186, 2 * c2}}, {{0, 1, 1}, {198, 2 * c2}}};
    const auto tower = cubic_tower(7, 1, 2);
    t.expect("cubic tower C(516, 7^6)", tower.indexed.size() == rows.size());
    for (const auto& term : tower.indexed) {
      const auto it = rows.find(term.exponents);
      t.expect("cubic tower C(516, 7^6)",
               it != rows.end() && it->second.first == term.weight && it->second.second == term.frequency);
      const int64_t h = term.exponents[0] + term.exponents[1] + term.exponents[2];
      const int64_t special = 2 * (49 * h - term.exponents[0] + 5 * int64_t(term.exponents[1]) - 4 * int64_t(term.exponents[2]));
      t.expect("cubic tower C(516, 7^6)", term.weight == special);
    }
    const Field f = make_field(7, 6, o);
    const auto brute = brute_weight_distribution(f, 516, {uint64_t{1} << 31, o.workers, false});
    t.expect("cubic tower C(516, 7^6)", tower.same_table(brute), [&] { return table_string(brute); });
    const auto w = find_decomposition(graph_spec(7, 6, 516));
    t.expect("cubic tower C(516, 7^6)", w && *w == DecompositionWitness{3, 2, 114, 3});
  });

  t.guarded("periods (434, 5^6)", "example", [&] {
    const Field f = make_field(5, 6, o);
    const auto s = gaussian_periods(f, 434, o.workers);
    const ClassMultiset expected{{Cyclotomic::integer(5, 26), 1},   {Cyclotomic::integer(5, 21), 1},
                                 {Cyclotomic::integer(5, 16), 12},  {Cyclotomic::integer(5, 11), 24},
                                 {Cyclotomic::integer(5, 6), 60},   {Cyclotomic::integer(5, 1), 144},
                                 {Cyclotomic::integer(5, -4), 144}, {Cyclotomic::integer(5, -9), 48}};
    t.expect("periods (434, 5^6)", class_multiset(s) == expected);
    const auto rep = check_relations(s, &f);
    t.expect("periods (434, 5^6)", rep.all_passed(), [&] { return rep.violations().front(); });
    t.expect("periods (434, 5^6)", rep.sum && *rep.sum == -1);
    t.expect("periods (434, 5^6)", rep.shifted_sums.size() == 434 && rep.shifted_sums[0] == 15589);
    bool shifted = true;
    for (std::size_t j = 1; j < rep.shifted_sums.size(); ++j) shifted = shifted && rep.shifted_sums[j] == -36;
    t.expect("periods (434, 5^6)", shifted);
    const auto closed = reduce_periods_semiprimitive(5, 2, 3, 2);
    t.expect("periods (434, 5^6)", class_multiset(closed) == expected);
    const Field f25 = make_field(5, 2, o);
    const auto reduced = reduce_periods(gaussian_periods(f25, 2), 3);
    t.expect("periods (434, 5^6)", class_multiset(reduced) == expected);
    // The value 6 arises from two tuples.
    for (const auto& cls : closed.classes)
      if (cls.value.as_integer() == 6) t.expect("periods (434, 5^6)", cls.tuples.size() == 2);
    const Spectrum paley = spectrum(graph_spec(5, 2, 2), f25);
    t.expect("periods (434, 5^6)",
             paley == make_spectrum({{Cyclotomic::integer(5, 12), 1}, {Cyclotomic::integer(5, 2), 12},
                                     {Cyclotomic::integer(5, -3), 12}}));
    const Spectrum big = spectrum(graph_spec(5, 6, 434), f);
    t.expect("periods (434, 5^6)", big.multiplicity_of(36) == BigInt(1) && big.multiplicity_of(6) == BigInt(2160));
  });

  return t.finish();
}

// ---------------------------------------------------------------------------

SuiteReport verify_field(const VerifyOptions& o) {
  Tally t("field", o);
  for (const auto& pp : prime_powers(4096)) {
    t.guarded("construction", "q = " + std::to_string(pp.q), [&] {
      const Field f = make_field(pp.p, pp.m, o);
      t.expect("modulus irreducible", is_irreducible(f.modulus(), pp.p));
      const uint64_t order = pp.q - 1;
      bool primitive = f.pow_poly(f.omega(), order) == f.one();
      for (uint64_t r : prime_factors(order)) primitive = primitive && f.pow_poly(f.omega(), order / r) != f.one();
      t.expect("omega has order q - 1", primitive, [&] { return "q = " + std::to_string(pp.q); });

      std::vector<char> seen(order, 0);
      bool round_trip = true, bijective = true, trace_agree = true;
      std::vector<uint64_t> fibre(pp.p, 0);
      fibre[0] = 1;
      for (uint64_t x = 1; x < pp.q; ++x) {
        const Element e{static_cast<uint32_t>(x)};
        const uint32_t l = f.log(e);
        round_trip = round_trip && f.exp(l) == e && f.pow_poly(f.omega(), l) == e;
        bijective = bijective && !seen[l];
        seen[l] = 1;
        const uint32_t tr = f.trace(e);
        trace_agree = trace_agree && tr == f.trace_definitional(e);
        ++fibre[tr];
      }
      t.expect("dlog round trip", round_trip, [&] { return "q = " + std::to_string(pp.q); });
      t.expect("dlog bijective", bijective);
      t.expect("trace functional = definitional", trace_agree, [&] { return "q = " + std::to_string(pp.q); });
      t.expect("trace balanced", std::all_of(fibre.begin(), fibre.end(), [&](uint64_t c) { return c == pp.q / pp.p; }));

      // Table multiplication against polynomial multiplication.
      const uint64_t pairs = std::min<uint64_t>(pp.q * pp.q, 4096);
      bool mul_agree = true;
      for (uint64_t i = 0; i < pairs; ++i) {
        const Element a{static_cast<uint32_t>((i * 2654435761u) % pp.q)};
        const Element b{static_cast<uint32_t>((i * 40503u + 7) % pp.q)};
        mul_agree = mul_agree && f.mul(a, b) == f.mul_poly(a, b);
        if (!a.is_zero()) mul_agree = mul_agree && f.mul(a, f.inv(a)) == f.one();
      }
      t.expect("table mul = polynomial mul", mul_agree, [&] { return "q = " + std::to_string(pp.q); });
    });
  }

  t.guarded("fixtures", "small fields", [&] {
    const Field f2 = make_field(2, 1, o);
    t.expect("fixtures", f2.omega() == f2.one() && f2.dlog_table().size() == 1 && f2.dlog_table()[0] == 0);
    const Field f4 = make_field(2, 2, o);
    t.expect("fixtures", f4.trace(f4.omega()) == 1);
    const Field f343 = make_field(7, 3, o);
    t.expect("fixtures", f343.q() == 343 && f343.pow_poly(f343.omega(), 342) == f343.one());
    t.expect("fixtures", psi(8, 7) == 299593 && psi(343, 2) == 344 && psi(17, 1) == 1);
    t.expect("fixtures", is_primitive_divisor(3, 2, 2) && is_primitive_divisor(36, 5, 6) && !is_primitive_divisor(7, 2, 6));
  });

  for (uint64_t x = 2; x <= 40; ++x)
    for (unsigned b = 1; b <= 12; ++b) t.expect("psi identity", psi(x, b) * (x - 1) == ipow(BigInt(x), b) - 1);
  for (uint32_t p : {2u, 3u, 5u, 7u})
    for (unsigned m = 1; m <= 8; ++m)
      for (uint64_t n = 1; n <= 400; ++n)
        t.expect("primitive divisor: order = scan", is_primitive_divisor(n, p, m) == is_primitive_divisor_scan(n, p, m),
                 [&] { return "n = " + std::to_string(n); });

  t.guarded("cache round trip", "cache", [&] {
    namespace fs = std::filesystem;
    const fs::path dir = o.cache_dir ? *o.cache_dir
                                     : fs::temp_directory_path() / ("gpcode-verify-" + std::to_string(::getpid()));
    const bool temporary = !o.cache_dir;
    fs::create_directories(dir);
    for (auto [p, m] : std::vector<std::pair<uint32_t, unsigned>>{{2, 10}, {3, 7}, {5, 4}, {7, 3}, {4093, 1}}) {
      FieldOptions fo;
      fo.cache_dir = dir;
      const Field plain = Field::build(p, m);
      const Field first = Field::build(p, m, fo);
      const Field second = Field::build(p, m, fo);
      const bool same = std::ranges::equal(plain.dlog_table(), second.dlog_table()) &&
                        std::ranges::equal(plain.trace_by_log(), second.trace_by_log()) &&
                        std::ranges::equal(plain.modulus(), second.modulus()) && plain.omega() == second.omega();
      t.expect("cache round trip", second.loaded_from_cache() && same && fs::exists(dir / plain.cache_name()),
               [&] { return plain.cache_name(); });
      (void)first;
    }
    if (temporary) fs::remove_all(dir);
  });
  return t.finish();
}

// ---------------------------------------------------------------------------

SuiteReport verify_bridge(const VerifyOptions& o) {
  Tally t("bridge", o);
  for (const auto& pp : prime_powers(1 << 14, {2, 3, 5, 7})) {
    const Field f = make_field(pp.p, pp.m, o);
    for (uint64_t k : divisors((pp.q - 1) / (pp.p - 1))) {
      const CodeParams cp = code_params(pp.p, pp.m, k);
      if (!cp.bridge_valid) continue;
      t.guarded("spectrum weights = brute weights", label(pp.p, pp.m, k), [&] {
        const GraphSpec g = graph_spec(pp.p, pp.m, k);
        const Spectrum s = spectrum(g, f, o.workers);
        const WeightDistribution from_spectrum = weights_from_spectrum(s, cp);
        const WeightDistribution brute = brute_weight_distribution(f, k, {uint64_t{1} << 40, o.workers, false});
        t.expect("spectrum weights = brute weights", from_spectrum.same_table(brute),
                 [&] { return label(pp.p, pp.m, k) + ": " + table_string(from_spectrum) + " vs " + table_string(brute); });
        t.expect("eigenvalues round trip", eigenvalues_from_weights(brute, cp) == s,
                 [&] { return label(pp.p, pp.m, k); });
        t.expect("total = q", brute.total() == pp.q);

        if (pp.q <= 256) {
          // Cyclic shift of c_gamma is c_{gamma omega^k}; gamma -> c_gamma injective.
          std::set<std::vector<uint32_t>> words;
          bool shifted = true, weights = true;
          for (uint64_t x = 0; x < pp.q; ++x) {
            const Element gamma{static_cast<uint32_t>(x)};
            auto w = codeword(f, k, gamma);
            weights = weights && static_cast<uint64_t>(std::count_if(w.begin(), w.end(), [](uint32_t v) { return v; })) ==
                                     codeword_weight(f, k, gamma);
            auto next = codeword(f, k, f.mul(gamma, f.exp(k)));
            std::rotate(w.begin(), w.begin() + 1, w.end());
            shifted = shifted && w == next;
            words.insert(codeword(f, k, gamma));
          }
          t.expect("cyclic shift invariance", shifted, [&] { return label(pp.p, pp.m, k); });
          t.expect("codeword weights consistent", weights);
          t.expect("encoding injective (dimension m)", words.size() == pp.q, [&] { return label(pp.p, pp.m, k); });
        }
      });
    }
    t.progress("q = " + std::to_string(pp.q));
  }
  return t.finish();
}

// ---------------------------------------------------------------------------

SuiteReport verify_spectrum(const VerifyOptions& o) {
  Tally t("spectrum", o);
  for (const auto& pp : prime_powers(4096)) {
    const Field f = make_field(pp.p, pp.m, o);
    for (uint64_t k : divisors(pp.q - 1)) {
      const GraphSpec g = graph_spec(pp.p, pp.m, k);
      if (!g.undirected) {
        bool refused = false;
        try {
          (void)spectrum(g, f);
        } catch (const Error& e) {
          refused = e.kind() == ErrorKind::DirectedGraph;
        }
        t.expect("directed graphs refused", refused, [&] { return label(pp.p, pp.m, k); });
        continue;
      }
      t.guarded("period spectrum = oracle", label(pp.p, pp.m, k), [&] {
        const Spectrum s = spectrum(g, f, o.workers);
        const Spectrum oracle = brute_spectrum_oracle(g, f, 4096);
        t.expect("period spectrum = oracle", s == oracle, [&] {
          return label(pp.p, pp.m, k) + ": " + spectrum_notation(s) + " vs " + spectrum_notation(oracle);
        });
        t.expect("total = q, trace = 0", s.total() == pp.q && s.trace() == Cyclotomic::integer(pp.p, 0),
                 [&] { return label(pp.p, pp.m, k); });
        // n appears with multiplicity = number of components.
        const auto comps = s.multiplicity_of(static_cast<int64_t>(g.n));
        t.expect("trivial eigenvalue multiplicity", comps && (*comps == 1) == g.connected,
                 [&] { return label(pp.p, pp.m, k); });
        if (is_hamming(g)) t.expect("Hamming graphs connected", g.connected);
        if (g.connected && check_complete_product(g)) {
          const uint64_t root = ipow_u64(pp.p, pp.m / 2);
          t.expect("complete product spectrum", s == complete_product_spectrum(pp.p, root),
                   [&] { return label(pp.p, pp.m, k); });
        }
        if (g.connected) {
          for (const auto& w : find_decompositions(g, true)) {
            const Field base = make_field(pp.p, w.a, o);
            const Spectrum s0 = spectrum(graph_spec(pp.p, w.a, w.u), base);
            t.expect("spectrum composes over witnesses", compose_spectrum(s0, w.b) == s,
                     [&] { return label(pp.p, pp.m, k) + " b = " + std::to_string(w.b); });
          }
        }
      });
    }
    if (pp.q > 1000) t.progress("q = " + std::to_string(pp.q));
  }
  t.guarded("fixtures", "small graphs", [&] {
    const Field f9 = make_field(3, 2, o);
    const Spectrum p9 = brute_spectrum_oracle(graph_spec(3, 2, 2), f9);
    t.expect("fixtures", p9 == make_spectrum({{Cyclotomic::integer(3, 4), 1}, {Cyclotomic::integer(3, 1), 4},
                                              {Cyclotomic::integer(3, -2), 4}}));
    t.expect("fixtures", check_complete_product(graph_spec(3, 2, 2)) && !check_complete_product(graph_spec(5, 2, 4)));
    const auto h = is_hamming(graph_spec(3, 2, 2));
    t.expect("fixtures", h && *h == 2 && !is_hamming(graph_spec(5, 2, 2)));
    const Field f4 = make_field(2, 2, o);
    t.expect("fixtures", brute_spectrum_oracle(graph_spec(2, 2, 1), f4) ==
                             make_spectrum({{Cyclotomic::integer(2, 3), 1}, {Cyclotomic::integer(2, -1), 3}}));
    const auto w = find_decomposition(graph_spec(5, 6, 434));
    t.expect("fixtures", w && *w == DecompositionWitness{2, 3, 12, 2});
    t.expect("fixtures", !find_decomposition(graph_spec(13, 1, 2)));
    const auto sp = is_semiprimitive_pair(5, 6, 2);
    t.expect("fixtures", sp.semiprimitive && sp.t == 1 && sp.sigma == 1 && !is_semiprimitive_pair(7, 3, 3).semiprimitive);
  });
  return t.finish();
}

// ---------------------------------------------------------------------------

SuiteReport verify_composition(const VerifyOptions& o) {
  Tally t("composition", o);
  const uint64_t max_q = uint64_t{1} << 20;
  uint64_t witnesses = 0;
  for (const auto& pp : prime_powers(max_q, {}, 2)) {
    const Field f = make_field(pp.p, pp.m, o);
    std::map<unsigned, std::optional<Field>> bases;
    for (uint64_t k : divisors(pp.q - 1)) {
      const GraphSpec g = graph_spec(pp.p, pp.m, k);
      if (!g.undirected || !g.connected) continue;
      const auto ws = find_decompositions(g, true);
      if (ws.empty()) continue;
      t.guarded("compose(base, b) = brute", label(pp.p, pp.m, k), [&] {
        const WeightDistribution brute = brute_weight_distribution(f, k, kOrbitBrute);
        if (BigInt(pp.q) * g.n <= (uint64_t{1} << 24))
          t.expect("orbit brute = full brute", brute.same_table(brute_weight_distribution(f, k, kFullBrute)),
                   [&] { return label(pp.p, pp.m, k); });
        for (const auto& w : ws) {
          ++witnesses;
          auto& base_field = bases[w.a];
          if (!base_field) base_field.emplace(make_field(pp.p, w.a, o));
          const WeightDistribution base = brute_weight_distribution(*base_field, w.u, kFullBrute);
          const WeightDistribution composed = compose(base, w.b, false);
          t.expect("compose(base, b) = brute", composed.same_table(brute), [&] {
            return label(pp.p, pp.m, k) + " b = " + std::to_string(w.b) + ": " + table_string(composed) + " vs " +
                   table_string(brute);
          });
          t.expect("compose preserves totals", composed.total() == ipow(base.total(), w.b));
        }
        ClosedFormOptions co;
        co.allow_brute_base = false;
        try {
          const auto cf = closed_form_distribution(pp.p, pp.m, k, co);
          t.expect("closed forms = brute", cf.distribution.same_table(brute),
                   [&] { return label(pp.p, pp.m, k) + " via " + cf.route; });
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::PreconditionFailed) throw;
        }
      });
    }
    if (pp.q > 100000) t.progress("q = " + std::to_string(pp.q));
  }
  t.expect("witnesses found", witnesses > 0, [] { return std::string("none"); });

  // Closed-form bases and towers against brute force at small size.
  for (const auto& pp : prime_powers(1 << 14, {}, 2)) {
    if (pp.m % 2 != 0) continue;
    const Field f = make_field(pp.p, pp.m, o);
    for (uint64_t u : divisors(pp.q - 1)) {
      if (u < 2 || !semiprimitive_divisibility(pp.p, pp.m, u).semiprimitive) continue;
      t.guarded("semiprimitive base = brute", label(pp.p, pp.m, u), [&] {
        t.expect("semiprimitive base = brute",
                 semiprimitive_base(pp.p, pp.m, u).same_table(brute_weight_distribution(f, u, kFullBrute)),
                 [&] { return label(pp.p, pp.m, u); });
      });
    }
  }
  t.guarded("cubic and quartic bases = brute", "bases", [&] {
    for (auto [p, t3] : std::vector<std::pair<uint32_t, unsigned>>{{7, 1}, {13, 1}, {19, 1}}) {
      const Field f = make_field(p, 3 * t3, o);
      t.expect("cubic and quartic bases = brute", cubic_base(p, t3).same_table(brute_weight_distribution(f, 3, kFullBrute)),
               [&] { return "cubic p = " + std::to_string(p); });
    }
    for (auto [p, t4] : std::vector<std::pair<uint32_t, unsigned>>{{5, 1}, {13, 1}}) {
      const Field f = make_field(p, 4 * t4, o);
      t.expect("cubic and quartic bases = brute",
               quartic_base(p, t4).same_table(brute_weight_distribution(f, 4, kOrbitBrute)),
               [&] { return "quartic p = " + std::to_string(p); });
    }
  });
  t.guarded("towers = composition", "towers", [&] {
    t.expect("towers = composition", quartic_tower(5, 1, 3).same_table(compose(quartic_base(5, 1), 3)));
    t.expect("towers = composition", cubic_tower(7, 1, 2).same_table(compose(cubic_base(7, 1), 2)));
    t.expect("towers = composition", cubic_tower(13, 1, 2).same_table(compose(cubic_base(13, 1), 2)));
    for (uint32_t p : {2u, 3u, 5u})
      for (unsigned a = 1; a <= 3; ++a)
        for (unsigned b = 2; b <= 7; ++b)
          if (psi(ipow(BigInt(p), a), b) % b == 0)
            t.expect("towers = composition", one_weight_tower(p, a, b).same_table(compose(simplex(p, a), b)));
    for (auto [p, a, u, b] : std::vector<std::tuple<uint32_t, unsigned, uint64_t, unsigned>>{
             {5, 2, 2, 3}, {11, 2, 2, 3}, {2, 2, 3, 3}, {3, 4, 5, 2}, {2, 4, 5, 5}})
      try {
        t.expect("towers = composition",
                 semiprimitive_tower(p, a, u, b).same_table(compose(semiprimitive_base(p, a, u), b)),
                 [&] { return label(p, a, u); });
      } catch (const Error& e) {
        t.expect("towers = composition", e.kind() == ErrorKind::NotPrimitiveDivisor,
                 [&] { return std::string(e.what()); });
      }
  });
  t.guarded("composition associative", "assoc", [&] {
    const WeightDistribution bases[] = {simplex(2, 2), simplex(3, 1), semiprimitive_base(5, 2, 2), cubic_base(7, 1)};
    for (const auto& d : bases)
      for (unsigned b1 = 1; b1 <= 3; ++b1)
        for (unsigned b2 = 1; b2 <= 3; ++b2)
          t.expect("composition associative", compose(compose(d, b1), b2).same_table(compose(d, b1 * b2)));
  });
  t.guarded("cubic sign symmetry", "cubic", [&] {
    for (auto [p, r] : std::vector<std::pair<uint32_t, unsigned>>{{7, 2}, {13, 2}, {19, 2}, {31, 2}}) {
      auto s = solve_cubic_diophantine(p, 1);
      const auto plus = cubic_tower_with(p, 1, r, s);
      s.b = -s.b;
      t.expect("cubic sign symmetry", plus.same_table(cubic_tower_with(p, 1, r, s)));
    }
  });
  t.guarded("diophantine uniqueness", "solvers", [&] {
    for (uint64_t p = 7; p < 400; ++p) {
      if (!is_prime(p)) continue;
      for (unsigned tt = 1; tt <= 2; ++tt) {
        if (p % 3 == 1) {
          const auto s = solve_cubic_diophantine(static_cast<uint32_t>(p), tt);
          t.expect("diophantine uniqueness", 4 * BigInt(ipow_u64(p, tt)) == BigInt(s.a) * s.a + 27 * BigInt(s.b) * s.b);
        }
        if (p % 4 == 1) {
          const auto s = solve_quartic_diophantine(static_cast<uint32_t>(p), tt);
          t.expect("diophantine uniqueness", BigInt(ipow_u64(p, 2 * tt)) == BigInt(s.a) * s.a + 4 * BigInt(s.b) * s.b);
        }
      }
    }
    const auto c13 = solve_cubic_diophantine(13, 1);
    const auto c72 = solve_cubic_diophantine(7, 2);
    const auto q51 = solve_quartic_diophantine(5, 1);
    const auto q131 = solve_quartic_diophantine(13, 1);
    const auto q52 = solve_quartic_diophantine(5, 2);
    t.expect("diophantine uniqueness", c13.a == -5 && c13.b == 1 && c72.a == 13 && c72.b == 1);
    t.expect("diophantine uniqueness", q51.a == -3 && q51.b == 2 && q131.a == 5 && q131.b == 6 && q52.a == -7 && q52.b == 12);
  });
  return t.finish();
}

// ---------------------------------------------------------------------------

SuiteReport verify_curves(const VerifyOptions& o) {
  Tally t("curves", o);
  for (const auto& pp : prime_powers(1 << 16)) {
    const Field f = make_field(pp.p, pp.m, o);
    const ArtinSchreierCounter counter(f);
    const uint64_t order = pp.q - 1;
    for (uint64_t k : divisors(order / (pp.p - 1))) {
      const CodeParams cp = code_params(pp.p, pp.m, k);
      if (!cp.bridge_valid) continue;
      t.guarded("trace count = weight formula", label(pp.p, pp.m, k), [&] {
        // One beta per orbit beta -> beta omega^k (all counts in an orbit
        // agree since x -> omega x permutes F_q), plus beta = 0.
        std::map<BigInt, BigInt> counts;
        std::vector<Element> reps{f.zero()};
        for (uint64_t g = 0; g < k; ++g) reps.push_back(f.exp(g));
        for (Element beta : reps) {
          const CurveCount c = curve_count(f, k, beta, true);
          t.expect("trace count = weight formula", *c.count_brute == c.count_weight_formula,
                   [&] { return label(pp.p, pp.m, k); });
          t.expect("fibre histogram = trace count", counter.count(k, beta) == *c.count_brute,
                   [&] { return label(pp.p, pp.m, k); });
          if (!beta.is_zero()) {
            const Element other = f.mul(beta, f.exp(k * (cp.n / 2 + 1)));
            t.expect("orbit invariance", count_points_brute(f, k, other) == *c.count_brute);
          }
          if (c.count_alternative) {
            const uint64_t w = codeword_weight(f, k, beta);
            const int64_t lambda = static_cast<int64_t>(cp.n) - static_cast<int64_t>(pp.p * w / (pp.p - 1));
            const auto ev = count_points_from_eigenvalue(cp, lambda);
            t.expect("eigenvalue formula (derived) = count", ev.derived == c.count_weight_formula);
            t.expect("alternative formula differs exactly when m > 1",
                     (*c.count_alternative == c.count_weight_formula) == (pp.m == 1),
                     [&] { return label(pp.p, pp.m, k); });
          }
          counts[c.count_weight_formula] += beta.is_zero() ? BigInt(1) : BigInt(cp.n);
        }
        // Counts over all beta correspond to the weight distribution.
        const WeightDistribution d = brute_weight_distribution(f, k, kOrbitBrute);
        std::map<BigInt, BigInt> mapped;
        for (const auto& [w, a] : d.table) mapped[BigInt(pp.q) * pp.p - BigInt(pp.p) * k * w + 1] += a;
        t.expect("count multiset = weight distribution", counts == mapped, [&] { return label(pp.p, pp.m, k); });

        if (pp.q <= 4096) {
          bool all = true;
          for (uint64_t x = 0; x < pp.q && all; ++x) {
            const Element beta{static_cast<uint32_t>(x)};
            all = count_points_brute(f, k, beta) ==
                  BigInt(pp.q) * pp.p - BigInt(pp.p) * k * codeword_weight(f, k, beta) + 1;
          }
          t.expect("every beta (q <= 2^12)", all, [&] { return label(pp.p, pp.m, k); });
        }
        if (pp.q <= 1024) {
          std::vector<Element> sample;
          if (pp.q <= 64) {
            for (uint64_t x = 0; x < pp.q; ++x) sample.push_back({static_cast<uint32_t>(x)});
          } else {
            sample = {f.zero(), f.one(), f.omega(), f.exp(k - 1)};
          }
          for (Element beta : sample)
            t.expect("naive (x, y) loop = trace count", count_points_naive(f, k, beta) == count_points_brute(f, k, beta),
                     [&] { return label(pp.p, pp.m, k); });
        }
      });
    }
    if (pp.m > 1 && pp.q > 10000) t.progress("q = " + std::to_string(pp.q));
  }

  t.guarded("fixtures", "small curves", [&] {
    const Field f25 = make_field(5, 2, o);
    const Element nonsquare = f25.omega();
    const CurveCount c = curve_count(f25, 2, nonsquare, true);
    const CodeParams cp = code_params(5, 2, 2);
    const auto ev = count_points_from_eigenvalue(cp, 2);
    const auto ev_nonsquare = count_points_from_eigenvalue(cp, -3);
    t.expect("fixtures", ev.derived == 46 && ev.alternative == 66);
    t.expect("fixtures", *c.count_brute == c.count_weight_formula &&
                             (c.count_weight_formula == ev.derived || c.count_weight_formula == ev_nonsquare.derived));
    t.expect("fixtures", codeword_weight(f25, 2, nonsquare) == 12 || codeword_weight(f25, 2, nonsquare) == 8);
    t.expect("fixtures", count_points_brute(f25, 2, f25.zero()) == 126);
    for (unsigned a = 2; a <= 6; ++a) {
      const Field f = make_field(2, a, o);
      for (uint64_t x = 1; x < f.q(); ++x) {
        const BigInt n = count_points_brute(f, 1, Element{static_cast<uint32_t>(x)});
        t.expect("fixtures", n == (uint64_t{1} << (a + 1)) + 1 || n == (uint64_t{1} << a) + 1);
      }
    }
  });

  t.guarded("extension example (a, b) = (3, 7)", "example", [&] {
    const Field f = make_field(2, 21, o);
    const uint64_t k = 42799;
    std::set<BigInt> predicted;
    for (unsigned l = 0; l <= 7; ++l) predicted.insert((BigInt(1) << 22) + 1 - BigInt(k) * l * 8);
    std::set<BigInt> from_weights;
    for (const auto& [w, a] : one_weight_tower(2, 3, 7).table) from_weights.insert((BigInt(1) << 22) + 1 - BigInt(2) * k * w);
    t.expect("extension example (a, b) = (3, 7)", predicted == from_weights);
    for (uint64_t i = 0; i < 64; ++i) {
      const Element beta = f.exp(i * 32749 + 3);
      t.expect("extension example (a, b) = (3, 7)", predicted.count(count_points_brute(f, k, beta)) == 1);
    }
    t.expect("extension example (a, b) = (3, 7)", count_points_brute(f, k, f.zero()) == *predicted.rbegin());
  });

  // Reduction over every decomposition with p^{ab} <= 2^16: for every
  // composed tuple the two count formulas agree and the congruences hold.
  for (const auto& pp : prime_powers(1 << 16, {}, 2)) {
    for (uint64_t k : divisors(pp.q - 1)) {
      const GraphSpec g = graph_spec(pp.p, pp.m, k);
      if (!g.undirected || !g.connected) continue;
      for (const auto& w : find_decompositions(g, true)) {
        t.guarded("reduction formulas agree", label(pp.p, pp.m, k), [&] {
          const Field base = make_field(pp.p, w.a, o);
          const WeightDistribution d0 = brute_weight_distribution(base, w.u, kFullBrute);
          // One alpha per base weight.
          std::vector<std::pair<uint64_t, Element>> alpha_of;
          for (const auto& [wt, a] : d0.table) {
            for (uint64_t x = 0; x < base.q(); ++x)
              if (codeword_weight(base, w.u, Element{static_cast<uint32_t>(x)}) == wt) {
                alpha_of.push_back({wt, Element{static_cast<uint32_t>(x)}});
                break;
              }
          }
          const auto composed = compose(d0, w.b);
          for (const auto& term : composed.indexed) {
            std::vector<Element> alphas;
            for (std::size_t i = 0; i < term.exponents.size(); ++i)
              for (unsigned c = 0; c < term.exponents[i]; ++c) alphas.push_back(alpha_of[i].second);
            const CurveReduction r = curve_reduction(pp.p, w.a, w.b, w.u, alphas);
            t.expect("reduction formulas agree", BigRational(r.derived) == r.reduction_formula && r.in_count_set,
                     [&] { return label(pp.p, pp.m, k); });
            for (const auto& c : count_congruences(pp.p, w.a, w.b, r.derived, r.base_counts))
              t.expect("congruences", !c.applicable || c.passed, [&] { return label(pp.p, pp.m, k) + " " + c.name; });
          }
        });
      }
    }
  }
  t.guarded("congruences", "extension example", [&] {
    const Field f8 = make_field(2, 3, o);
    for (uint64_t i = 0; i < 40; ++i) {
      std::vector<Element> alphas;
      for (unsigned j = 0; j < 7; ++j) alphas.push_back(Element{static_cast<uint32_t>((i * 7 + j * j * 3 + i * j) % 8)});
      const CurveReduction r = curve_reduction(2, 3, 7, 1, alphas);
      t.expect("reduction formulas agree", BigRational(r.derived) == r.reduction_formula && r.in_count_set && r.k == 42799);
      for (const auto& c : count_congruences(2, 3, 7, r.derived, r.base_counts))
        t.expect("congruences", c.applicable && c.passed);
    }
    const auto edge = count_congruences(5, 2, 1, 126, {126});
    t.expect("congruences", !edge.back().applicable);
    (void)f8;
  });
  return t.finish();
}

// ---------------------------------------------------------------------------

SuiteReport verify_relations(const VerifyOptions& o) {
  Tally t("relations", o);
  auto check_set = [&](const GaussPeriodSet& s, const Field* f, const std::string& where) {
    const RelationReport rep = check_relations(s, f);
    t.expect("relations hold", rep.all_passed(), [&] { return where + ": " + rep.violations().front(); });
    const bool divides = ((s.q - 1) / (s.p - 1)) % s.N == 0;
    if (divides && s.is_integral) {
      const auto* c = rep.find("correlation");
      t.expect("correlation checked", c && c->applicable);
      t.expect("sum = -1", rep.sum && *rep.sum == -1, [&] { return where; });
    }
    if (s.indexed()) {
      const auto* part = rep.find("partition");
      t.expect("partition identity", part && part->applicable && part->passed, [&] { return where; });
    }
    if (divides) t.expect("integral when N | (q-1)/(p-1)", s.is_integral, [&] { return where; });
  };

  for (const auto& pp : prime_powers(4096)) {
    const Field f = make_field(pp.p, pp.m, o);
    for (uint64_t N : divisors(pp.q - 1)) {
      t.guarded("relations hold", label(pp.p, pp.m, N), [&] {
        check_set(gaussian_periods(f, N, o.workers), &f, "(N, q) = (" + std::to_string(N) + ", " + std::to_string(pp.q) + ")");
      });
    }
  }
  for (const auto& pp : prime_powers(1 << 14, {2, 3, 5, 7})) {
    if (pp.q <= 4096) continue;
    const Field f = make_field(pp.p, pp.m, o);
    for (uint64_t k : divisors((pp.q - 1) / (pp.p - 1))) {
      if (!code_params(pp.p, pp.m, k).bridge_valid) continue;
      t.guarded("relations hold", label(pp.p, pp.m, k), [&] { check_set(gaussian_periods(f, k, o.workers), &f, label(pp.p, pp.m, k)); });
    }
  }

  // Reduced sets against computed ones.
  for (const auto& pp : prime_powers(1 << 20, {}, 2)) {
    std::optional<Field> f;
    for (uint64_t k : divisors(pp.q - 1)) {
      const GraphSpec g = graph_spec(pp.p, pp.m, k);
      if (!g.undirected || !g.connected) continue;
      for (const auto& w : find_decompositions(g, true)) {
        t.guarded("reduced periods = computed", label(pp.p, pp.m, k), [&] {
          if (!f) f.emplace(make_field(pp.p, pp.m, o));
          const Field base = make_field(pp.p, w.a, o);
          const GaussPeriodSet reduced = reduce_periods(gaussian_periods(base, w.u), w.b);
          const GaussPeriodSet computed = gaussian_periods(*f, k, o.workers);
          t.expect("reduced periods = computed", class_multiset(reduced) == class_multiset(computed),
                   [&] { return label(pp.p, pp.m, k); });
          check_set(reduced, nullptr, "reduced " + label(pp.p, pp.m, k));
          if (w.a % 2 == 0 && semiprimitive_divisibility(pp.p, w.a, w.u).semiprimitive)
            t.expect("semiprimitive closed form = reduced",
                     class_multiset(reduce_periods_semiprimitive(pp.p, w.a, w.b, w.u)) == class_multiset(reduced),
                     [&] { return label(pp.p, pp.m, k); });
        });
      }
    }
  }

  // Relabelling omega permutes the indexing but not the multiset.
  for (auto [p, m] : std::vector<std::pair<uint32_t, unsigned>>{{5, 2}, {3, 4}, {2, 8}, {7, 3}, {5, 6}}) {
    t.guarded("multiset independent of omega", label(p, m, 0), [&] {
      const Field f = make_field(p, m, o);
      const uint64_t order = f.group_order();
      uint64_t j = 2;
      while (std::gcd(j, order) != 1) ++j;
      FieldOptions alt;
      alt.omega = f.exp(j).code;
      const Field g = Field::build(p, m, alt);
      for (uint64_t N : divisors(order)) {
        const auto a = gaussian_periods(f, N), b = gaussian_periods(g, N);
        t.expect("multiset independent of omega", class_multiset(a) == class_multiset(b), [&] { return label(p, m, N); });
      }
    });
  }
  return t.finish();
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"paper-tables", "field",  "bridge",    "spectrum",
                                              "composition",  "curves", "relations", "all"};
  return names;
}

std::vector<SuiteReport> run_suite(const std::string& name, const VerifyOptions& o) {
  using Fn = SuiteReport (*)(const VerifyOptions&);
  static const std::vector<std::pair<std::string, Fn>> suites{
      {"paper-tables", verify_reference_tables}, {"field", verify_field},   {"bridge", verify_bridge},
      {"spectrum", verify_spectrum},         {"composition", verify_composition}, {"curves", verify_curves},
      {"relations", verify_relations}};
  std::vector<SuiteReport> out;
  for (const auto& [n, fn] : suites)
    if (name == "all" || name == n) out.push_back(fn(o));
  return out;
}

}  // namespace gpcode
