#include "gpcode/code.hpp"

#include <thread>

#include "gpcode/error.hpp"

namespace gpcode {

CodeParams code_params(uint32_t p, unsigned m, uint64_t k) {
  const GraphSpec g = graph_spec(p, m, k);
  if (k == 0 || (g.q - 1) % k != 0)
    throw Error(ErrorKind::NotADivisor, std::to_string(k) + " does not divide q - 1 = " + std::to_string(g.q - 1));
  CodeParams c;
  c.p = p;
  c.m = m;
  c.q = g.q;
  c.k = k;
  c.n = g.n;
  c.bridge_valid = ((g.q - 1) / (p - 1)) % k == 0 && g.connected;
  return c;
}

BigInt WeightDistribution::total() const {
  BigInt t = 0;
  for (const auto& [w, a] : table) t += a;
  return t;
}

BigInt WeightDistribution::frequency(uint64_t w) const {
  auto it = table.find(w);
  return it == table.end() ? BigInt(0) : it->second;
}

uint64_t WeightDistribution::min_distance() const {
  for (const auto& [w, a] : table)
    if (w != 0 && a != 0) return w;
  return 0;
}

bool WeightDistribution::same_table(const WeightDistribution& o) const {
  return length == o.length && alphabet == o.alphabet && table == o.table;
}

std::string_view to_string(WeightDistribution::Source s) {
  switch (s) {
    case WeightDistribution::Source::brute: return "brute";
    case WeightDistribution::Source::composed: return "composed";
    case WeightDistribution::Source::closed_form: return "closed_form";
    case WeightDistribution::Source::spectrum: return "spectrum";
  }
  return "?";
}

namespace {

void require_divisor(const Field& f, uint64_t k) {
  if (k == 0 || f.group_order() % k != 0)
    throw Error(ErrorKind::NotADivisor,
                std::to_string(k) + " does not divide q - 1 = " + std::to_string(f.group_order()));
}

}  // namespace

std::vector<uint32_t> codeword(const Field& f, uint64_t k, Element gamma) {
  require_divisor(f, k);
  const uint64_t n = f.group_order() / k;
  std::vector<uint32_t> word(n, 0);
  if (gamma.is_zero()) return word;
  for (uint64_t i = 0; i < n; ++i) word[i] = f.trace(f.mul(gamma, f.exp(k * i)));
  return word;
}

uint64_t codeword_weight(const Field& f, uint64_t k, Element gamma) {
  require_divisor(f, k);
  if (gamma.is_zero()) return 0;
  const uint64_t order = f.group_order();
  const auto traces = f.trace_by_log();
  uint64_t idx = f.log(gamma), w = 0;
  for (uint64_t i = 0; i < order / k; ++i) {
    w += traces[idx] != 0;
    idx += k;
    if (idx >= order) idx -= order;
  }
  return w;
}

WeightDistribution brute_weight_distribution(const Field& f, uint64_t k, const BruteOptions& options) {
  require_divisor(f, k);
  const uint64_t order = f.group_order();
  const uint64_t n = order / k;
  const uint64_t gammas = options.shift_orbits ? k : order;
  const BigInt work = BigInt(gammas) * n;
  if (work > options.budget)
    throw Error(ErrorKind::BudgetExceeded, "needs " + work.str() + " coordinate evaluations, budget is " +
                                               std::to_string(options.budget));

  // Nonzero-trace flags along the log, doubled so every word is one
  // contiguous strided read.
  const auto traces = f.trace_by_log();
  std::vector<uint8_t> nonzero(2 * order);
  for (uint64_t j = 0; j < order; ++j) nonzero[j] = nonzero[j + order] = traces[j] != 0;

  const unsigned w = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(std::min<uint64_t>(gammas, 64))));
  std::vector<std::vector<uint64_t>> hist(w, std::vector<uint64_t>(n + 1, 0));
  auto run = [&](unsigned id, uint64_t begin, uint64_t end) {
    auto& h = hist[id];
    for (uint64_t g = begin; g < end; ++g) {
      const uint8_t* row = nonzero.data() + g;
      uint64_t weight = 0;
      for (uint64_t i = 0, off = 0; i < n; ++i, off += k) weight += row[off];
      ++h[weight];
    }
  };
  if (w == 1) {
    run(0, 0, gammas);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < w; ++id) pool.emplace_back(run, id, gammas * id / w, gammas * (id + 1) / w);
    for (auto& th : pool) th.join();
  }

  WeightDistribution d;
  d.length = n;
  d.alphabet = f.p();
  d.source = WeightDistribution::Source::brute;
  d.table[0] = 1;  // gamma = 0
  const uint64_t scale = options.shift_orbits ? n : 1;
  for (uint64_t weight = 0; weight <= n; ++weight) {
    uint64_t count = 0;
    for (const auto& h : hist) count += h[weight];
    if (count) d.table[weight] += BigInt(count) * scale;
  }
  return d;
}

WeightDistribution weights_from_spectrum(const Spectrum& s, const CodeParams& params) {
  if (!params.bridge_valid)
    throw Error(ErrorKind::BridgeHypothesisFailed,
                "k = " + std::to_string(params.k) + " needs k | (q-1)/(p-1) and a connected graph");
  WeightDistribution d;
  d.length = params.n;
  d.alphabet = params.p;
  d.source = WeightDistribution::Source::spectrum;
  for (const auto& e : s.entries) {
    const auto lambda = e.eigenvalue.as_integer();
    if (!lambda) throw Error(ErrorKind::NonIntegralWeight, "eigenvalue " + e.eigenvalue.to_string() + " is not an integer");
    const BigInt num = BigInt(params.p - 1) * (BigInt(params.n) - *lambda);
    if (num % params.p != 0 || num < 0)
      throw Error(ErrorKind::NonIntegralWeight, "eigenvalue " + std::to_string(*lambda) + " gives no integral weight");
    d.table[static_cast<uint64_t>(num / params.p)] += e.multiplicity;
  }
  return d;
}

Spectrum eigenvalues_from_weights(const WeightDistribution& d, const CodeParams& params) {
  if (!params.bridge_valid)
    throw Error(ErrorKind::BridgeHypothesisFailed,
                "k = " + std::to_string(params.k) + " needs k | (q-1)/(p-1) and a connected graph");
  std::vector<SpectrumEntry> entries;
  for (const auto& [w, a] : d.table) {
    const BigInt num = BigInt(params.p) * w;
    if (num % (params.p - 1) != 0)
      throw Error(ErrorKind::NonIntegralWeight, "weight " + std::to_string(w) + " gives no integral eigenvalue");
    const BigInt lambda = BigInt(params.n) - num / (params.p - 1);
    entries.push_back({Cyclotomic::integer(params.p, static_cast<int64_t>(lambda)), a});
  }
  return make_spectrum(std::move(entries));
}

}  // namespace gpcode
