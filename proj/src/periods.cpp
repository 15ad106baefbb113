#include "gpcode/periods.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "gpcode/error.hpp"

namespace gpcode {

uint64_t CyclotomicCount::count(uint32_t t) const {
  auto it = std::lower_bound(nonzero.begin(), nonzero.end(), std::pair<uint32_t, uint64_t>{t, 0});
  return it != nonzero.end() && it->first == t ? it->second : 0;
}

uint64_t CyclotomicCount::total() const {
  uint64_t s = 0;
  for (auto [t, c] : nonzero) s += c;
  return s;
}

std::vector<uint64_t> CyclotomicCount::dense() const {
  std::vector<uint64_t> out(p, 0);
  for (auto [t, c] : nonzero) out[t] = c;
  return out;
}

Cyclotomic CyclotomicCount::value() const {
  std::vector<Cyclotomic::Term> terms;
  terms.reserve(nonzero.size());
  for (auto [t, c] : nonzero) terms.emplace_back(t, static_cast<int64_t>(c));
  return Cyclotomic::from_terms(p, std::move(terms));
}

std::vector<Element> coset(const Field& f, uint64_t N, uint64_t i) {
  const uint64_t order = f.group_order();
  if (N == 0 || order % N != 0)
    throw Error(ErrorKind::NotADivisor, std::to_string(N) + " does not divide q - 1 = " + std::to_string(order));
  if (i >= N) throw Error(ErrorKind::PreconditionFailed, "coset index out of range");
  std::vector<Element> out;
  out.reserve(order / N);
  for (uint64_t j = i; j < order; j += N) out.push_back(f.exp(j));
  return out;
}

GaussPeriodSet gaussian_periods(const Field& f, uint64_t N, unsigned workers) {
  const uint64_t order = f.group_order();
  if (N == 0 || order % N != 0)
    throw Error(ErrorKind::NotADivisor, std::to_string(N) + " does not divide q - 1 = " + std::to_string(order));

  GaussPeriodSet s;
  s.p = f.p();
  s.m = f.m();
  s.q = f.q();
  s.N = N;
  s.raw.resize(N);

  const auto traces = f.trace_by_log();
  auto tally = [&](uint64_t begin, uint64_t end) {
    std::vector<uint64_t> scratch(f.p(), 0);
    std::vector<uint32_t> touched;
    for (uint64_t i = begin; i < end; ++i) {
      for (uint64_t j = i; j < order; j += N) {
        const uint32_t t = traces[j];
        if (scratch[t]++ == 0) touched.push_back(t);
      }
      std::sort(touched.begin(), touched.end());
      auto& out = s.raw[i];
      out.p = f.p();
      out.nonzero.reserve(touched.size());
      for (uint32_t t : touched) {
        out.nonzero.emplace_back(t, scratch[t]);
        scratch[t] = 0;
      }
      touched.clear();
    }
  };

  const unsigned w = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::min<uint64_t>(N, 64))));
  if (w == 1) {
    tally(0, N);
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < w; ++k) pool.emplace_back(tally, N * k / w, N * (k + 1) / w);
    for (auto& th : pool) th.join();
  }

  s.is_integral = true;
  for (const auto& c : s.raw) {
    if (!c.value().is_integer()) {
      s.is_integral = false;
      break;
    }
  }
  if (s.is_integral) {
    s.values.reserve(N);
    for (const auto& c : s.raw) s.values.push_back(*c.value().as_integer());
  }
  refine_classes(s);
  return s;
}

void refine_classes(GaussPeriodSet& s) {
  std::map<Cyclotomic, PeriodClass> merged;
  for (uint64_t i = 0; i < s.raw.size(); ++i) {
    Cyclotomic v = s.raw[i].value();
    auto [it, inserted] = merged.try_emplace(v);
    if (inserted) it->second.value = v;
    it->second.cosets += 1;
    it->second.indices.push_back(i);
  }
  s.classes.clear();
  for (auto& [v, cls] : merged) s.classes.push_back(std::move(cls));
}

bool RelationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return !c.applicable || c.passed; });
}

std::vector<std::string> RelationReport::violations() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (c.applicable && !c.passed) out.push_back(c.name + ": " + c.detail);
  return out;
}

const RelationCheck* RelationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

constexpr uint64_t kMaxCorrelationN = uint64_t{1} << 15;

}  // namespace

RelationReport check_relations(const GaussPeriodSet& s, const Field* f) {
  RelationReport report;
  const BigInt q = s.q;
  const BigInt n = s.coset_size();
  const bool divides = ((q - 1) / (s.p - 1)) % s.N == 0;

  {
    RelationCheck c{"integrality", divides, s.is_integral, ""};
    c.detail = s.is_integral ? "all periods rational integers" : "some periods are not in Z";
    report.checks.push_back(c);
  }

  {
    RelationCheck c{"congruence", s.is_integral, true, ""};
    if (s.is_integral) {
      for (const auto& cls : s.classes) {
        const BigInt lhs = s.N * BigInt(*cls.value.as_integer()) + 1;
        if (lhs % s.p != 0) {
          c.passed = false;
          c.detail = "N*" + cls.value.to_string() + " + 1 is not divisible by p";
          break;
        }
      }
      if (c.passed) c.detail = "N*eta + 1 = 0 mod " + std::to_string(s.p) + " for every period";
    } else {
      c.detail = "non-integral set";
    }
    report.checks.push_back(c);
  }

  {
    // Holds for every N: the cosets partition the nonzero elements.
    RelationCheck c{"sum", true, false, ""};
    Cyclotomic total;
    for (const auto& cls : s.classes) total += cls.value * static_cast<int64_t>(cls.cosets);
    c.passed = total == Cyclotomic::integer(s.p, -1);
    c.detail = "sum of periods = " + total.to_string();
    if (auto v = total.as_integer()) report.sum = BigInt(*v);
    report.checks.push_back(c);
  }

  {
    RelationCheck c{"correlation", divides && s.is_integral, true, ""};
    if (c.applicable) {
      bool theta0 = s.p == 2 || n % 2 == 0;
      if (s.indexed()) {
        const uint64_t N = static_cast<uint64_t>(s.N);
        uint64_t minus_one_coset = 0;
        if (f)
          minus_one_coset = f->log(f->minus_one()) % N;
        else if (s.p != 2)
          minus_one_coset = static_cast<uint64_t>(((q - 1) / 2) % N);
        const uint64_t shifts = N <= kMaxCorrelationN ? N : 1;
        for (uint64_t j = 0; j < shifts && c.passed; ++j) {
          __int128 acc = 0;
          for (uint64_t i = 0; i < N; ++i) acc += static_cast<__int128>(s.values[i]) * s.values[(i + j) % N];
          const BigInt expected = (j == minus_one_coset ? q : BigInt(0)) - n;
          const BigInt got = BigInt(static_cast<int64_t>(acc));
          report.shifted_sums.push_back(got);
          if (got != expected) {
            c.passed = false;
            c.detail = "shift " + std::to_string(j) + ": " + got.str() + " != " + expected.str();
          }
        }
        if (c.passed)
          c.detail = shifts == N ? "all " + std::to_string(N) + " shifts match q*theta_j - n"
                                 : "shift 0 matches (N too large for the full scan)";
      } else {
        BigInt acc = 0;
        for (const auto& cls : s.classes) {
          const BigInt v = *cls.value.as_integer();
          acc += cls.cosets * v * v;
        }
        const BigInt expected = (theta0 ? q : BigInt(0)) - n;
        report.shifted_sums.push_back(acc);
        c.passed = acc == expected;
        c.detail = "shift 0 (class level): " + acc.str() + (c.passed ? " = " : " != ") + expected.str();
      }
    } else {
      c.detail = "needs integral periods with N | (q-1)/(p-1)";
    }
    report.checks.push_back(c);
  }

  {
    RelationCheck c{"partition", s.indexed(), true, ""};
    if (c.applicable) {
      std::vector<uint64_t> fibre(s.p, 0);
      for (const auto& cc : s.raw)
        for (auto [t, k] : cc.nonzero) fibre[t] += k;
      const uint64_t full = static_cast<uint64_t>(q / s.p);
      for (uint32_t t = 0; t < s.p; ++t) {
        const uint64_t expected = t == 0 ? full - 1 : full;
        if (fibre[t] != expected) {
          c.passed = false;
          c.detail = "trace fibre " + std::to_string(t) + " has " + std::to_string(fibre[t]) + " elements";
          break;
        }
      }
      if (c.passed) c.detail = "trace fibres over all cosets are p^{m-1} (minus zero at t = 0)";
    } else {
      c.detail = "no per-coset counts";
    }
    report.checks.push_back(c);
  }
  return report;
}

}  // namespace gpcode
