#include "gpcode/curves.hpp"

#include "gpcode/closed_forms.hpp"
#include "gpcode/error.hpp"

namespace gpcode {

namespace {

void require_divisor(const Field& f, uint64_t k) {
  if (k == 0 || f.group_order() % k != 0)
    throw Error(ErrorKind::NotADivisor,
                std::to_string(k) + " does not divide q - 1 = " + std::to_string(f.group_order()));
}

}  // namespace

BigInt count_points_brute(const Field& f, uint64_t k, Element beta, uint64_t budget) {
  require_divisor(f, k);
  if (f.q() > budget)
    throw Error(ErrorKind::BudgetExceeded, "q = " + std::to_string(f.q()) + " exceeds the budget");
  const uint64_t order = f.group_order();
  uint64_t zeros = 1;  // x = 0
  if (beta.is_zero()) {
    zeros = f.q();
  } else {
    const auto traces = f.trace_by_log();
    uint64_t idx = f.log(beta);
    const uint64_t step = k % order;
    for (uint64_t j = 0; j < order; ++j) {
      zeros += traces[idx] == 0;
      idx += step;
      if (idx >= order) idx -= order;
    }
  }
  return BigInt(1) + BigInt(f.p()) * zeros;
}

BigInt count_points_naive(const Field& f, uint64_t k, Element beta) {
  require_divisor(f, k);
  const uint64_t q = f.q();
  std::vector<Element> lhs(q);
  for (uint64_t y = 0; y < q; ++y) {
    const Element ye{static_cast<uint32_t>(y)};
    lhs[y] = f.sub(f.pow_poly(ye, f.p()), ye);
  }
  uint64_t affine = 0;
  for (uint64_t x = 0; x < q; ++x) {
    const Element rhs = f.mul_poly(beta, f.pow_poly(Element{static_cast<uint32_t>(x)}, k));
    for (uint64_t y = 0; y < q; ++y) affine += lhs[y] == rhs;
  }
  return BigInt(affine) + 1;
}

ArtinSchreierCounter::ArtinSchreierCounter(const Field& f) : f_(&f), fibre_(f.q(), 0) {
  for (uint64_t y = 0; y < f.q(); ++y) {
    const Element ye{static_cast<uint32_t>(y)};
    ++fibre_[f.sub(f.pow(ye, f.p()), ye).code];
  }
}

BigInt ArtinSchreierCounter::count(uint64_t k, Element beta) const {
  require_divisor(*f_, k);
  const uint64_t order = f_->group_order();
  uint64_t affine = fibre_[0];  // x = 0
  if (beta.is_zero()) {
    affine = fibre_[0] * f_->q();
  } else {
    uint64_t idx = f_->log(beta);
    const uint64_t step = k % order;
    for (uint64_t j = 0; j < order; ++j) {
      affine += fibre_[f_->exp(idx).code];
      idx += step;
      if (idx >= order) idx -= order;
    }
  }
  return BigInt(affine) + 1;
}

CurveCount curve_count(const Field& f, uint64_t k, Element beta, bool with_brute) {
  const CodeParams params = code_params(f.p(), f.m(), k);
  CurveCount c;
  c.p = f.p();
  c.m = f.m();
  c.k = k;
  c.beta = beta;
  const uint64_t w = codeword_weight(f, k, beta);
  c.count_weight_formula = BigInt(f.q()) * f.p() - BigInt(f.p()) * k * w + 1;
  if (params.bridge_valid && (BigInt(f.p()) * w) % (f.p() - 1) == 0) {
    const BigInt lambda = BigInt(params.n) - BigInt(f.p()) * w / (f.p() - 1);
    c.count_alternative = count_points_from_eigenvalue(params, static_cast<int64_t>(lambda)).alternative;
  }
  if (with_brute) c.count_brute = count_points_brute(f, k, beta);
  return c;
}

EigenvalueCount count_points_from_eigenvalue(const CodeParams& params, int64_t lambda) {
  if (!params.bridge_valid)
    throw Error(ErrorKind::HypothesesFailed, "needs k | (q-1)/(p-1) and n a primitive divisor of q - 1");
  const BigInt q = params.q;
  const BigInt tail = BigInt(params.k) * (params.p - 1) * lambda;
  return {q + params.p + tail, 2 * q + tail};
}

CurveReduction curve_reduction(uint32_t p, unsigned a, unsigned b, uint64_t u, const std::vector<Element>& alphas) {
  if (b == 0 || alphas.size() != b)
    throw Error(ErrorKind::PreconditionFailed, "expected b = " + std::to_string(b) + " elements alpha_i");
  const uint64_t pa = ipow_u64(p, a);
  if (u == 0 || (pa - 1) % u != 0) throw Error(ErrorKind::HypothesesFailed, "u does not divide p^a - 1");
  const uint64_t c = (pa - 1) / u;
  const uint64_t n = b * c;
  if (!is_primitive_divisor(c, p, a) || !is_primitive_divisor(n, p, a * b))
    throw Error(ErrorKind::HypothesesFailed, "c or n = bc is not a primitive divisor");

  const Field fa = Field::build(p, a);
  const BigInt x = pa;
  const BigInt psib = psi(x, b);
  CurveReduction r;
  r.m = a * b;
  const BigInt k = BigInt(u) * psib / b;
  if (BigInt(u) * psib % b != 0) throw Error(ErrorKind::HypothesesFailed, "k = u Psi_b / b is not an integer");
  r.k = static_cast<uint64_t>(k);

  BigInt wsum = 0, csum = 0;
  for (Element alpha : alphas) {
    const uint64_t w = codeword_weight(fa, u, alpha);
    const BigInt count = BigInt(pa) * p + 1 - BigInt(p) * u * w;
    r.base_weights.push_back(w);
    r.base_counts.push_back(count);
    wsum += w;
    csum += count;
  }
  const BigInt qm1 = ipow(BigInt(p), r.m + 1);
  r.derived = qm1 + 1 - BigInt(p) * k * wsum;
  r.reduction_formula = BigRational(psib * csum) / b - BigRational((p + 1) * x * psi(x, b - 1));

  const WeightDistribution composed = compose(brute_weight_distribution(fa, u), b, false);
  for (const auto& [w, freq] : composed.table)
    if (qm1 + 1 - BigInt(p) * k * w == r.derived) r.in_count_set = true;
  return r;
}

std::vector<CongruenceCheck> count_congruences(uint32_t p, unsigned a, unsigned b, const BigInt& count,
                                               const std::vector<BigInt>& base_counts) {
  const BigInt x = ipow(BigInt(p), a);
  BigInt sum = 0;
  for (const auto& c : base_counts) sum += c;
  const BigInt psib = psi(x, b);
  std::vector<CongruenceCheck> out;

  const BigRational diff = BigRational(count) - BigRational(psib * sum) / b;
  for (const BigInt& mod : {BigInt(p + 1), x}) {
    CongruenceCheck c{"#C = (1/b) Psi_b(p^a) sum #C_i", mod, true, false};
    c.passed = boost::multiprecision::denominator(diff) == 1 && boost::multiprecision::numerator(diff) % mod == 0;
    out.push_back(c);
  }
  {
    CongruenceCheck c{"b #C = Psi_b(p^a) sum #C_i", x, true, false};
    c.passed = (BigInt(b) * count - psib * sum) % x == 0;
    out.push_back(c);
  }
  {
    const BigInt mod = psi(x, b - 1);
    CongruenceCheck c{"b #C = p^{a(b-1)} sum #C_i", mod, b >= 2, false};
    if (c.applicable) c.passed = (BigInt(b) * count - ipow(x, b - 1) * sum) % mod == 0;
    out.push_back(c);
  }
  return out;
}

}  // namespace gpcode
