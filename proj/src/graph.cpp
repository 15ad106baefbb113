#include "gpcode/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "gpcode/error.hpp"

namespace gpcode {

BigInt Spectrum::total() const {
  BigInt t = 0;
  for (const auto& e : entries) t += e.multiplicity;
  return t;
}

Cyclotomic Spectrum::trace() const {
  Cyclotomic t;
  for (const auto& e : entries) t += e.eigenvalue * static_cast<int64_t>(e.multiplicity);
  return t;
}

std::optional<BigInt> Spectrum::multiplicity_of(int64_t eigenvalue) const {
  for (const auto& e : entries)
    if (e.eigenvalue.as_integer() == eigenvalue) return e.multiplicity;
  return std::nullopt;
}

Spectrum make_spectrum(std::vector<SpectrumEntry> entries) {
  std::map<Cyclotomic, BigInt> merged;
  for (auto& e : entries) merged[e.eigenvalue] += e.multiplicity;
  Spectrum s;
  for (auto& [v, mult] : merged)
    if (mult != 0) s.entries.push_back({v, mult});
  return s;
}

GraphSpec graph_spec(uint32_t p, unsigned m, uint64_t k_input) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (m == 0) throw Error(ErrorKind::PreconditionFailed, "extension degree must be at least 1");
  if (k_input == 0) throw Error(ErrorKind::PreconditionFailed, "k must be positive");
  GraphSpec g;
  g.p = p;
  g.m = m;
  g.q = ipow_u64(p, m);
  if (g.q > (uint64_t{1} << 32))
    throw Error(ErrorKind::FieldTooLarge, "q = " + std::to_string(g.q) + " exceeds 2^32");
  g.k_input = k_input;
  g.k = std::gcd(k_input, g.q - 1);
  g.n = (g.q - 1) / g.k;
  g.undirected = p == 2 || ((g.q - 1) / 2) % g.k == 0;
  g.connected = is_primitive_divisor(g.n, p, m);
  return g;
}

namespace {

void require_matching_field(const GraphSpec& g, const Field& f) {
  if (f.p() != g.p || f.m() != g.m)
    throw Error(ErrorKind::PreconditionFailed, "field does not match the graph parameters");
}

}  // namespace

Spectrum spectrum(const GraphSpec& g, const Field& f, unsigned workers) {
  require_matching_field(g, f);
  if (!g.undirected)
    throw Error(ErrorKind::DirectedGraph,
                "Gamma(" + std::to_string(g.k) + ", " + std::to_string(g.q) + ") is directed (k does not divide (q-1)/2)");
  const GaussPeriodSet periods = gaussian_periods(f, g.k, workers);
  std::vector<SpectrumEntry> entries;
  entries.push_back({Cyclotomic::integer(g.p, static_cast<int64_t>(g.n)), 1});
  for (const auto& cls : periods.classes) entries.push_back({cls.value, cls.cosets * g.n});
  return make_spectrum(std::move(entries));
}

Spectrum brute_spectrum_oracle(const GraphSpec& g, const Field& f, uint64_t max_q) {
  require_matching_field(g, f);
  if (g.q > max_q)
    throw Error(ErrorKind::TooLargeForOracle,
                "q = " + std::to_string(g.q) + " exceeds the oracle bound " + std::to_string(max_q));
  if (!g.undirected) throw Error(ErrorKind::DirectedGraph, "oracle needs an undirected graph");

  // Connection set R_k by direct powering.
  std::vector<char> in_set(g.q, 0);
  std::vector<Element> connection;
  for (uint64_t x = 1; x < g.q; ++x) {
    const Element y = f.pow_poly(Element{static_cast<uint32_t>(x)}, g.k);
    if (!in_set[y.code]) {
      in_set[y.code] = 1;
      connection.push_back(y);
    }
  }

  // Tr(gamma r) is linear in the coordinates of r: with t_i = Tr(gamma x^i)
  // (evaluated literally), Tr(gamma r) = sum_i r_i t_i mod p.
  const unsigned m = g.m;
  std::vector<uint32_t> digits(connection.size() * m);
  for (std::size_t j = 0; j < connection.size(); ++j) {
    uint32_t c = connection[j].code;
    for (unsigned i = 0; i < m; ++i, c /= g.p) digits[j * m + i] = c % g.p;
  }
  std::vector<Element> basis(m);
  for (unsigned i = 0; i < m; ++i) basis[i] = f.element(ipow_u64(g.p, i));

  // Count vectors with the same total n denote the same number iff they are
  // equal, so they can key the tally directly.
  std::map<std::vector<uint32_t>, uint64_t> tally;
  std::vector<uint32_t> counts(g.p, 0);
  std::vector<uint64_t> t(m);
  for (uint64_t gamma = 0; gamma < g.q; ++gamma) {
    const Element ge{static_cast<uint32_t>(gamma)};
    uint32_t mask = 0;
    for (unsigned i = 0; i < m; ++i) {
      t[i] = f.trace_definitional(f.mul_poly(ge, basis[i]));
      mask |= static_cast<uint32_t>(t[i]) << i;
    }
    std::fill(counts.begin(), counts.end(), 0);
    if (g.p == 2) {
      for (Element r : connection) ++counts[std::popcount(r.code & mask) & 1];
    } else if (m == 1) {
      for (Element r : connection) ++counts[r.code * t[0] % g.p];
    } else {
      for (std::size_t j = 0; j < connection.size(); ++j) {
        const uint32_t* d = &digits[j * m];
        uint64_t acc = 0;
        for (unsigned i = 0; i < m; ++i) acc += d[i] * t[i];
        ++counts[acc % g.p];
      }
    }
    ++tally[counts];
  }
  std::map<Cyclotomic, BigInt> eigen;
  for (const auto& [c, mult] : tally) eigen[Cyclotomic::from_counts(std::vector<uint64_t>(c.begin(), c.end()))] += mult;
  std::vector<SpectrumEntry> entries;
  for (auto& [v, mult] : eigen) entries.push_back({v, mult});
  return make_spectrum(std::move(entries));
}

std::vector<DecompositionWitness> find_decompositions(const GraphSpec& g, bool all) {
  if (!g.undirected) throw Error(ErrorKind::DirectedGraph, "decomposition needs an undirected graph");
  if (!g.connected) throw Error(ErrorKind::NotConnected, "decomposition needs a connected graph");
  std::vector<DecompositionWitness> out;
  for (uint64_t b : divisors(g.m)) {
    if (b < 2 || g.n % b != 0) continue;
    const unsigned a = g.m / static_cast<unsigned>(b);
    const uint64_t c = g.n / b;
    const uint64_t pa1 = ipow_u64(g.p, a) - 1;
    if (pa1 % c != 0 || !is_primitive_divisor(c, g.p, a)) continue;
    out.push_back({a, static_cast<unsigned>(b), c, pa1 / c});
    if (!all) break;
  }
  return out;
}

std::optional<DecompositionWitness> find_decomposition(const GraphSpec& g) {
  auto w = find_decompositions(g, false);
  if (w.empty()) return std::nullopt;
  return w.front();
}

SemiprimitiveInfo semiprimitive_divisibility(uint32_t p, unsigned m, uint64_t k) {
  SemiprimitiveInfo info;
  if (k < 2) return info;
  for (uint64_t t : divisors(m)) {
    if ((m / t) % 2 != 0) continue;
    if (powmod(p, t, k) != k - 1) continue;
    info.semiprimitive = true;
    info.t = static_cast<unsigned>(t);
    info.sigma = ((m / (2 * t)) + 1) % 2 == 0 ? 1 : -1;
    break;
  }
  return info;
}

SemiprimitiveInfo is_semiprimitive_pair(uint32_t p, unsigned m, uint64_t k) {
  SemiprimitiveInfo info = semiprimitive_divisibility(p, m, k);
  if (info.semiprimitive && m % 2 == 0) {
    bool excluded = false;
    try {
      excluded = k == ipow_u64(p, m / 2) + 1;
    } catch (const Error&) {
    }
    if (excluded) return {};
  }
  return info;
}

std::optional<unsigned> is_hamming(const GraphSpec& g) {
  // n = b(p^a - 1) alone is not enough: Gamma(10, 81) has n = 8 = 4 * 2 but
  // splits into copies of K_9, since 8 also divides 3^2 - 1.
  if (!g.connected) return std::nullopt;
  for (uint64_t b : divisors(g.m)) {
    if (b < 2) continue;
    const uint64_t sub = ipow_u64(g.p, g.m / static_cast<unsigned>(b)) - 1;
    if (g.n == b * sub) return static_cast<unsigned>(b);
  }
  return std::nullopt;
}

bool check_complete_product(const GraphSpec& g) {
  if (!g.connected) throw Error(ErrorKind::NotConnected, "complete-product check needs a connected graph");
  if (g.m % 2 != 0 || g.p == 2) return false;
  const uint64_t root = ipow_u64(g.p, g.m / 2);
  return g.k == (root + 1) / 2;
}

Spectrum complete_product_spectrum(uint32_t p, uint64_t q_prime) {
  const int64_t qp = static_cast<int64_t>(q_prime);
  return make_spectrum({{Cyclotomic::integer(p, 2 * qp - 2), 1},
                        {Cyclotomic::integer(p, qp - 2), BigInt(2 * (qp - 1))},
                        {Cyclotomic::integer(p, -2), BigInt(qp - 1) * (qp - 1)}});
}

Spectrum compose_spectrum(const Spectrum& base, unsigned b) {
  if (base.entries.empty()) throw Error(ErrorKind::EmptyBase, "empty base spectrum");
  const unsigned s = static_cast<unsigned>(base.entries.size());
  std::vector<SpectrumEntry> out;
  for_each_composition(b, s, [&](const std::vector<unsigned>& ell) {
    Cyclotomic value = Cyclotomic::integer(base.entries[0].eigenvalue.p(), 0);
    BigInt mult = multinomial(ell);
    for (unsigned i = 0; i < s; ++i) {
      if (!ell[i]) continue;
      value += base.entries[i].eigenvalue * ell[i];
      mult *= ipow(base.entries[i].multiplicity, ell[i]);
    }
    out.push_back({value, mult});
  });
  return make_spectrum(std::move(out));
}

}  // namespace gpcode
