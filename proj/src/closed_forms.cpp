#include "gpcode/closed_forms.hpp"

#include <map>
#include <numeric>

#include "gpcode/error.hpp"

namespace gpcode {

namespace {

uint64_t to_weight(const BigInt& w) {
  if (w < 0 || w > BigInt(std::numeric_limits<uint64_t>::max()))
    throw Error(ErrorKind::NonIntegralWeight, "weight " + w.str() + " out of range");
  return static_cast<uint64_t>(w);
}

uint64_t to_weight(const BigRational& w) {
  if (boost::multiprecision::denominator(w) != 1)
    throw Error(ErrorKind::NonIntegralWeight, "weight " + w.str() + " is not an integer");
  return to_weight(BigInt(boost::multiprecision::numerator(w)));
}

void finish_from_indexed(WeightDistribution& d) {
  d.table.clear();
  for (const auto& t : d.indexed) d.table[to_weight(t.weight)] += t.frequency;
}

int64_t mod_pos(int64_t a, int64_t m) { return ((a % m) + m) % m; }

}  // namespace

WeightDistribution compose(const WeightDistribution& base, unsigned b, bool keep_indexed) {
  if (base.table.empty()) throw Error(ErrorKind::EmptyBase, "base distribution has no weights");
  if (b == 0) throw Error(ErrorKind::PreconditionFailed, "composition needs b >= 1");
  std::vector<std::pair<uint64_t, BigInt>> slots(base.table.begin(), base.table.end());
  const unsigned s = static_cast<unsigned>(slots.size());

  WeightDistribution d;
  d.length = base.length * b;
  d.alphabet = base.alphabet;
  d.source = WeightDistribution::Source::composed;
  for_each_composition(b, s, [&](const std::vector<unsigned>& ell) {
    uint64_t w = 0;
    BigInt freq = multinomial(ell);
    for (unsigned i = 0; i < s; ++i) {
      if (!ell[i]) continue;
      w += ell[i] * slots[i].first;
      freq *= ipow(slots[i].second, ell[i]);
    }
    d.table[w] += freq;
    if (keep_indexed) d.indexed.push_back({ell, BigInt(w), freq});
  });
  return d;
}

WeightDistribution simplex(uint32_t p, unsigned a) {
  const uint64_t q = ipow_u64(p, a);
  WeightDistribution d;
  d.length = q - 1;
  d.alphabet = p;
  d.source = WeightDistribution::Source::closed_form;
  d.table[0] = 1;
  d.table[(p - 1) * (q / p)] += q - 1;
  return d;
}

WeightDistribution one_weight_tower(uint32_t p, unsigned a, unsigned b) {
  const uint64_t q = ipow_u64(p, a);
  const BigInt psib = psi(q, b);
  if (b < 2 || psib % b != 0)
    throw Error(ErrorKind::DivisibilityFailed,
                "b = " + std::to_string(b) + " does not divide Psi_b(" + std::to_string(q) + ") = " + psib.str());
  WeightDistribution d;
  d.length = static_cast<uint64_t>(b) * (q - 1);
  d.alphabet = p;
  d.source = WeightDistribution::Source::closed_form;
  const uint64_t w = (p - 1) * (q / p);
  for (unsigned l = 0; l <= b; ++l)
    d.indexed.push_back({{l}, BigInt(w) * l, binomial(b, l) * ipow(BigInt(q - 1), l)});
  finish_from_indexed(d);
  return d;
}

namespace {

struct SemiprimitiveWeights {
  uint64_t c = 0;
  int sigma = 0;
  uint64_t w1 = 0, w2 = 0;
};

SemiprimitiveWeights semiprimitive_weights(uint32_t p, unsigned a, uint64_t u) {
  if (u < 2 || a % 2 != 0)
    throw Error(ErrorKind::NotSemiprimitive, "needs u >= 2 and a even");
  const SemiprimitiveInfo info = semiprimitive_divisibility(p, a, u);
  if (!info.semiprimitive)
    throw Error(ErrorKind::NotSemiprimitive, "(" + std::to_string(u) + ", " + std::to_string(p) + "^" +
                                                 std::to_string(a) + ") is not a semiprimitive pair");
  const uint64_t q = ipow_u64(p, a);
  const BigInt s = ipow(BigInt(p), a / 2);
  const BigInt pre = BigInt(p - 1) * ipow(BigInt(p), a / 2 - 1);
  const BigInt n1 = pre * (s - info.sigma * BigInt(u - 1));
  const BigInt n2 = pre * (s + info.sigma);
  if (n1 % u != 0 || n2 % u != 0)
    throw Error(ErrorKind::NonIntegralWeight, "semiprimitive weights are not integral");
  return {(q - 1) / u, info.sigma, to_weight(BigInt(n1 / u)), to_weight(BigInt(n2 / u))};
}

}  // namespace

WeightDistribution semiprimitive_base(uint32_t p, unsigned a, uint64_t u) {
  const auto sw = semiprimitive_weights(p, a, u);
  WeightDistribution d;
  d.length = sw.c;
  d.alphabet = p;
  d.source = WeightDistribution::Source::closed_form;
  d.indexed.push_back({{0, 0}, 0, 1});
  d.indexed.push_back({{1, 0}, sw.w1, sw.c});
  d.indexed.push_back({{0, 1}, sw.w2, BigInt(sw.c) * (u - 1)});
  finish_from_indexed(d);
  return d;
}

BigInt semiprimitive_frequency_variant(uint64_t c, uint64_t u, unsigned b, unsigned l1, unsigned l2) {
  return binomial(b, l1) * binomial(b - l1, l2) * ipow(BigInt(c), l1 + l2) * ipow(BigInt(u - 1), l1);
}

WeightDistribution semiprimitive_tower(uint32_t p, unsigned a, uint64_t u, unsigned b) {
  const auto sw = semiprimitive_weights(p, a, u);
  const uint64_t n = b * sw.c;
  if (b < 1 || !is_primitive_divisor(n, p, a * b))
    throw Error(ErrorKind::NotPrimitiveDivisor,
                "n = " + std::to_string(n) + " is not a primitive divisor of " + std::to_string(p) + "^" +
                    std::to_string(a * b) + " - 1");
  WeightDistribution d;
  d.length = n;
  d.alphabet = p;
  d.source = WeightDistribution::Source::closed_form;
  for (unsigned l1 = 0; l1 <= b; ++l1)
    for (unsigned l2 = 0; l1 + l2 <= b; ++l2)
      d.indexed.push_back({{l1, l2},
                           BigInt(sw.w1) * l1 + BigInt(sw.w2) * l2,
                           binomial(b, l1) * binomial(b - l1, l2) * ipow(BigInt(sw.c), l1 + l2) *
                               ipow(BigInt(u - 1), l2)});
  finish_from_indexed(d);
  return d;
}

namespace {

std::vector<DiophantineSolution> search(uint64_t lhs, uint64_t coef, uint32_t p, int64_t modulus) {
  std::vector<DiophantineSolution> found;
  for (uint64_t b = 0; coef * b * b <= lhs; ++b) {
    const uint64_t rem = lhs - coef * b * b;
    uint64_t a = static_cast<uint64_t>(std::sqrt(static_cast<long double>(rem)));
    while (a * a > rem) --a;
    while ((a + 1) * (a + 1) <= rem) ++a;
    if (a * a != rem) continue;
    for (int64_t sa : {static_cast<int64_t>(a), -static_cast<int64_t>(a)}) {
      if (sa < 0 && a == 0) continue;
      if (mod_pos(sa, modulus) != 1 || std::gcd(a, static_cast<uint64_t>(p)) != 1) continue;
      found.push_back({sa, static_cast<int64_t>(b), DiophantineSolution::Kind::cubic});
    }
  }
  return found;
}

DiophantineSolution unique(std::vector<DiophantineSolution> found, const std::string& what) {
  if (found.size() != 1)
    throw Error(ErrorKind::NoSolution, what + " has " + std::to_string(found.size()) + " admissible solutions");
  return found.front();
}

}  // namespace

DiophantineSolution solve_cubic_diophantine(uint32_t p, unsigned t) {
  if (p % 3 != 1) throw Error(ErrorKind::PreconditionFailed, "p = 1 (mod 3) is required");
  auto s = unique(search(4 * ipow_u64(p, t), 27, p, 3), "4p^t = a^2 + 27b^2");
  s.kind = DiophantineSolution::Kind::cubic;
  return s;
}

DiophantineSolution solve_quartic_diophantine(uint32_t p, unsigned t) {
  if (p % 4 != 1) throw Error(ErrorKind::PreconditionFailed, "p = 1 (mod 4) is required");
  auto s = unique(search(ipow_u64(p, 2 * t), 4, p, 4), "p^{2t} = a^2 + 4b^2");
  s.kind = DiophantineSolution::Kind::quartic;
  return s;
}

namespace {

void check_tower_clauses(uint32_t p, unsigned r, unsigned e, const BigInt& q) {
  auto fail = [](const std::string& clause) { throw Error(ErrorKind::PreconditionFailed, clause); };
  if (!is_prime(r)) fail("r = " + std::to_string(r) + " is not prime");
  if (r == p) fail("r must differ from p");
  if (std::gcd(e, r) != 1) fail("gcd(" + std::to_string(e) + ", r) = 1 fails");
  if (q % r != 1) fail("q = 1 (mod r) fails");
}

// Shared body of the cubic and quartic towers: h slots split over `s`
// nonzero base weights given by `weight(ell, h)`, frequency
// binom(r,h) multinomial(h; ell) c^h.
template <class Weight>
WeightDistribution tuple_tower(uint32_t p, unsigned r, unsigned s, const BigInt& c, Weight&& weight) {
  WeightDistribution d;
  d.length = static_cast<uint64_t>(r * c);
  d.alphabet = p;
  d.source = WeightDistribution::Source::closed_form;
  for (unsigned h = 0; h <= r; ++h) {
    for_each_composition(h, s, [&](const std::vector<unsigned>& ell) {
      const BigRational w = weight(ell, h);
      d.indexed.push_back({ell, BigInt(to_weight(w)), binomial(r, h) * multinomial(ell) * ipow(c, h)});
    });
  }
  finish_from_indexed(d);
  return d;
}

WeightDistribution cubic_terms(uint32_t p, unsigned t, unsigned r, const DiophantineSolution& s) {
  const BigInt q = ipow(BigInt(p), 3 * t);
  const BigInt pt = ipow(BigInt(p), t);
  const BigRational scale = BigRational(BigInt(p - 1)) / BigInt(3 * p);
  return tuple_tower(p, r, 3, (q - 1) / 3, [&](const std::vector<unsigned>& l, unsigned h) {
    const BigRational inner = BigRational(s.a) * (BigRational(l[1] + l[2]) / 2 - l[0]) +
                              BigRational(9 * s.b) / 2 * (int64_t(l[1]) - int64_t(l[2]));
    return scale * (BigRational(q) * h + inner * BigRational(pt));
  });
}

WeightDistribution quartic_terms(uint32_t p, unsigned t, unsigned r, const DiophantineSolution& s) {
  const BigInt q = ipow(BigInt(p), 4 * t);
  const BigInt root = ipow(BigInt(p), 2 * t);
  const BigInt pt = ipow(BigInt(p), t);
  const BigRational scale = BigRational(BigInt(p - 1)) / BigInt(4 * p);
  return tuple_tower(p, r, 4, (q - 1) / 4, [&](const std::vector<unsigned>& l, unsigned h) {
    const int64_t l1 = l[0], l2 = l[1], l3 = l[2], l4 = l[3];
    const BigInt inner = BigInt(q) * h + BigInt(l1 + l2 - l3 - l4) * root +
                         (BigInt(2 * s.a * (l1 - l2)) + BigInt(4 * s.b * (l3 - l4))) * pt;
    return scale * BigRational(inner);
  });
}

}  // namespace

WeightDistribution cubic_base(uint32_t p, unsigned t) { return cubic_terms(p, t, 1, solve_cubic_diophantine(p, t)); }

WeightDistribution cubic_tower(uint32_t p, unsigned t, unsigned r) {
  return cubic_tower_with(p, t, r, solve_cubic_diophantine(p, t));
}

WeightDistribution cubic_tower_with(uint32_t p, unsigned t, unsigned r, const DiophantineSolution& s) {
  if (p % 3 != 1) throw Error(ErrorKind::PreconditionFailed, "p = 1 (mod 3) fails");
  check_tower_clauses(p, r, 3, ipow(BigInt(p), 3 * t));
  return cubic_terms(p, t, r, s);
}

WeightDistribution quartic_base(uint32_t p, unsigned t) {
  return quartic_terms(p, t, 1, solve_quartic_diophantine(p, t));
}

WeightDistribution quartic_tower(uint32_t p, unsigned t, unsigned r) {
  if (p % 4 != 1) throw Error(ErrorKind::PreconditionFailed, "p = 1 (mod 4) fails");
  check_tower_clauses(p, r, 4, ipow(BigInt(p), 4 * t));
  return quartic_terms(p, t, r, solve_quartic_diophantine(p, t));
}

namespace {

struct BasePeriod {
  Cyclotomic value;
  BigInt cosets;
};

GaussPeriodSet reduce(uint32_t p, unsigned a, uint64_t u, const std::vector<BasePeriod>& base, unsigned b) {
  if (b == 0) throw Error(ErrorKind::HypothesesFailed, "b must be at least 1");
  const uint64_t pa = ipow_u64(p, a);
  if ((pa - 1) % u != 0) throw Error(ErrorKind::HypothesesFailed, "u does not divide p^a - 1");
  const uint64_t c = (pa - 1) / u;
  const uint64_t n = b * c;
  if (!is_primitive_divisor(c, p, a))
    throw Error(ErrorKind::HypothesesFailed, "c = " + std::to_string(c) + " is not a primitive divisor of p^a - 1");
  if (!is_primitive_divisor(n, p, a * b))
    throw Error(ErrorKind::HypothesesFailed, "n = bc = " + std::to_string(n) + " is not a primitive divisor of p^m - 1");

  GaussPeriodSet s;
  s.p = p;
  s.m = a * b;
  s.q = ipow(BigInt(p), a * b);
  s.N = (s.q - 1) / n;
  const unsigned slots = 1 + static_cast<unsigned>(base.size());
  std::map<Cyclotomic, PeriodClass> merged;
  for_each_composition(b, slots, [&](const std::vector<unsigned>& ell) {
    if (ell[0] == b) return;
    Cyclotomic value = Cyclotomic::integer(p, static_cast<int64_t>(c) * ell[0]);
    BigInt mult = multinomial(ell);
    for (unsigned j = 1; j < slots; ++j) {
      if (!ell[j]) continue;
      value += base[j - 1].value * ell[j];
      mult *= ipow(BigInt(c) * base[j - 1].cosets, ell[j]);
    }
    if (mult % n != 0) throw Error(ErrorKind::HypothesesFailed, "multiplicity not divisible by n");
    auto [it, inserted] = merged.try_emplace(value);
    if (inserted) it->second.value = value;
    it->second.cosets += mult / n;
    it->second.tuples.push_back(ell);
  });
  s.is_integral = true;
  for (auto& [v, cls] : merged) {
    s.is_integral = s.is_integral && v.is_integer();
    s.classes.push_back(std::move(cls));
  }
  return s;
}

}  // namespace

GaussPeriodSet reduce_periods(const GaussPeriodSet& base, unsigned b) {
  std::vector<BasePeriod> periods;
  for (const auto& cls : base.classes) periods.push_back({cls.value, cls.cosets});
  return reduce(base.p, base.m, static_cast<uint64_t>(base.N), periods, b);
}

GaussPeriodSet reduce_periods_semiprimitive(uint32_t p, unsigned a, unsigned b, uint64_t u) {
  if (u < 2 || a % 2 != 0) throw Error(ErrorKind::NotSemiprimitive, "needs u >= 2 and a even");
  const SemiprimitiveInfo info = semiprimitive_divisibility(p, a, u);
  if (!info.semiprimitive) throw Error(ErrorKind::NotSemiprimitive, "not a semiprimitive pair");
  const int64_t s = static_cast<int64_t>(ipow_u64(p, a / 2));
  const int64_t su = static_cast<int64_t>(u);
  const int64_t num0 = (su - 1) * info.sigma * s - 1;
  const int64_t num1 = -(info.sigma * s + 1);
  if (num0 % su != 0 || num1 % su != 0) throw Error(ErrorKind::HypothesesFailed, "base periods not integral");
  std::vector<BasePeriod> base{{Cyclotomic::integer(p, num0 / su), 1}, {Cyclotomic::integer(p, num1 / su), u - 1}};
  return reduce(p, a, u, base, b);
}

std::vector<char> psi_divisibility_cases(const BigInt& x, unsigned b, uint32_t p) {
  std::vector<char> out;
  if (b < 2) return out;
  const auto fac = factorize(b);
  auto xmod = [&](uint64_t mod) { return static_cast<uint64_t>(x % mod); };
  auto coprime_to = [&](uint64_t v) { return xmod(v) != 0 && std::gcd(xmod(v), v) == 1; };
  const bool squarefree = std::all_of(fac.begin(), fac.end(), [](auto f) { return f.second == 1; });
  const bool avoids_p = std::all_of(fac.begin(), fac.end(), [&](auto f) { return f.first != p; });

  if (fac.size() == 1 && fac[0].second == 1 && b != p && xmod(b) == 1) out.push_back('a');
  if (b % 2 == 0 && b / 2 > 2 && is_prime(b / 2) && coprime_to(b)) {
    const uint64_t r = b / 2, xr = xmod(r);
    if (xr == 1 || xr == r - 1) out.push_back('b');
  }
  if (fac.size() == 2 && squarefree && fac[0].first > 2 && (fac[1].first - 1) % fac[0].first != 0 && xmod(b) == 1)
    out.push_back('c');
  if (squarefree && avoids_p && xmod(fac[0].first) == 1) {
    bool ok = true;
    for (std::size_t i = 1; i < fac.size() && ok; ++i) {
      const uint64_t r = fac[i].first;
      ok = powmod(xmod(r), b / r, r) == 1;
    }
    if (ok) out.push_back('d');
  }
  auto order_is_prime_power_below = [&](uint64_t r, unsigned t) {
    const uint64_t mod = ipow_u64(r, t);
    if (!coprime_to(mod)) return false;
    uint64_t ord = multiplicative_order(xmod(mod), mod);
    for (unsigned h = 0; h < t; ++h) {
      if (ord == 1) return true;
      if (ord % r != 0) return false;
      ord /= r;
    }
    return false;
  };
  if (fac.size() == 1 && order_is_prime_power_below(fac[0].first, fac[0].second)) out.push_back('e');
  if (avoids_p && std::all_of(fac.begin(), fac.end(), [&](auto f) {
        return order_is_prime_power_below(f.first, f.second);
      }))
    out.push_back('f');
  return out;
}

ClosedFormResult closed_form_distribution(uint32_t p, unsigned m, uint64_t k, const ClosedFormOptions& options) {
  const CodeParams cp = code_params(p, m, k);
  ClosedFormResult r;
  auto done = [&](WeightDistribution d, std::string route) {
    d.source = WeightDistribution::Source::closed_form;
    r.distribution = std::move(d);
    r.route = std::move(route);
    return r;
  };
  if (k == 1) return done(simplex(p, m), "simplex");
  if (m % 2 == 0 && semiprimitive_divisibility(p, m, k).semiprimitive)
    return done(semiprimitive_base(p, m, k), "semiprimitive");
  if (k == 3 && m % 3 == 0 && p % 3 == 1) return done(cubic_base(p, m / 3), "cubic");
  if (k == 4 && m % 4 == 0 && p % 4 == 1) return done(quartic_base(p, m / 4), "quartic");

  const GraphSpec g = graph_spec(p, m, k);
  if (g.undirected && g.connected) {
    for (const auto& w : find_decompositions(g, true)) {
      if (!r.witness) r.witness = w;
      if (w.u == 1) return done(one_weight_tower(p, w.a, w.b), "one-weight tower");
      if (w.a % 2 == 0 && semiprimitive_divisibility(p, w.a, w.u).semiprimitive)
        return done(semiprimitive_tower(p, w.a, w.u, w.b), "semiprimitive tower");
      if (w.u == 3 && p % 3 == 1 && w.a % 3 == 0) {
        try {
          return done(cubic_tower(p, w.a / 3, w.b), "cubic tower");
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::PreconditionFailed) throw;
          return done(compose(cubic_base(p, w.a / 3), w.b), "cubic tower");
        }
      }
      if (w.u == 4 && p % 4 == 1 && w.a % 4 == 0) {
        try {
          return done(quartic_tower(p, w.a / 4, w.b), "quartic tower");
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::PreconditionFailed) throw;
          return done(compose(quartic_base(p, w.a / 4), w.b), "quartic tower");
        }
      }
    }
    if (r.witness && options.allow_brute_base) {
      const auto& w = *r.witness;
      const Field base = Field::build(p, w.a);
      auto d = compose(brute_weight_distribution(base, w.u, options.base_brute), w.b);
      d.source = WeightDistribution::Source::composed;
      r.distribution = std::move(d);
      r.route = "composed";
      return r;
    }
  }
  (void)cp;
  throw Error(ErrorKind::PreconditionFailed, "no closed form covers C(" + std::to_string(k) + ", " +
                                                 std::to_string(p) + "^" + std::to_string(m) + ")");
}

}  // namespace gpcode
