#include "gpcode/cyclotomic.hpp"

#include <algorithm>
#include <map>

#include "gpcode/error.hpp"

namespace gpcode {

Cyclotomic Cyclotomic::integer(uint32_t p, int64_t v) { return from_terms(p, {{0u, v}}); }

Cyclotomic Cyclotomic::from_counts(std::span<const int64_t> counts) {
  std::vector<Term> terms;
  for (std::size_t t = 0; t < counts.size(); ++t)
    if (counts[t]) terms.emplace_back(static_cast<uint32_t>(t), counts[t]);
  return from_terms(static_cast<uint32_t>(counts.size()), std::move(terms));
}

Cyclotomic Cyclotomic::from_counts(std::span<const uint64_t> counts) {
  std::vector<Term> terms;
  for (std::size_t t = 0; t < counts.size(); ++t)
    if (counts[t]) terms.emplace_back(static_cast<uint32_t>(t), static_cast<int64_t>(counts[t]));
  return from_terms(static_cast<uint32_t>(counts.size()), std::move(terms));
}

Cyclotomic Cyclotomic::from_terms(uint32_t p, std::vector<Term> terms) {
  if (p == 0) throw Error(ErrorKind::PreconditionFailed, "cyclotomic order must be positive");
  Cyclotomic r;
  r.p_ = p;
  std::sort(terms.begin(), terms.end());
  for (auto& [t, c] : terms) {
    if (t >= p) throw Error(ErrorKind::PreconditionFailed, "exponent out of range");
    if (!r.terms_.empty() && r.terms_.back().first == t)
      r.terms_.back().second += c;
    else
      r.terms_.emplace_back(t, c);
  }
  r.normalize();
  return r;
}

void Cyclotomic::normalize() {
  // Frequency of each coefficient value over all p positions.
  std::map<int64_t, uint64_t> freq;
  uint64_t explicit_positions = 0;
  for (auto& [t, c] : terms_) {
    ++freq[c];
    ++explicit_positions;
  }
  freq[0] += p_ - explicit_positions;
  int64_t mode = 0;
  uint64_t best = 0;
  for (auto [value, n] : freq) {
    if (n > best) {
      best = n;
      mode = value;
    }
  }
  if (mode == 0) {
    std::erase_if(terms_, [](const Term& term) { return term.second == 0; });
    return;
  }
  std::vector<Term> out;
  std::size_t k = 0;
  for (uint32_t t = 0; t < p_; ++t) {
    int64_t c = 0;
    if (k < terms_.size() && terms_[k].first == t) c = terms_[k++].second;
    if (c - mode != 0) out.emplace_back(t, c - mode);
  }
  terms_ = std::move(out);
}

std::vector<int64_t> Cyclotomic::dense() const {
  std::vector<int64_t> out(p_, 0);
  for (auto [t, c] : terms_) out[t] = c;
  return out;
}

bool Cyclotomic::is_integer() const {
  if (p_ == 0) return false;
  if (p_ <= 2) return true;
  // Integers normalise to a lone constant term.
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

std::optional<int64_t> Cyclotomic::as_integer() const {
  if (!is_integer()) return std::nullopt;
  int64_t c0 = 0, c1 = 0;
  for (auto [t, c] : terms_) {
    if (t == 0) c0 = c;
    if (t == 1) c1 = c;
  }
  return p_ == 1 ? c0 : c0 - c1;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  Cyclotomic r = *this;
  r += o;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (p_ == 0) return *this = o;
  if (o.p_ == 0) return *this;
  if (o.p_ != p_) throw Error(ErrorKind::PreconditionFailed, "cyclotomic order mismatch");
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      merged.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      merged.push_back(o.terms_[j++]);
    } else {
      merged.emplace_back(terms_[i].first, terms_[i].second + o.terms_[j].second);
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  normalize();
  return *this;
}

Cyclotomic Cyclotomic::operator*(int64_t k) const {
  Cyclotomic r = *this;
  for (auto& term : r.terms_) term.second *= k;
  r.normalize();
  return r;
}

std::strong_ordering Cyclotomic::operator<=>(const Cyclotomic& o) const {
  const auto a = as_integer();
  const auto b = o.as_integer();
  if (a && b) return *b <=> *a;
  if (a) return std::strong_ordering::less;
  if (b) return std::strong_ordering::greater;
  if (p_ != o.p_) return p_ <=> o.p_;
  return terms_ <=> o.terms_;
}

std::string Cyclotomic::to_string() const {
  if (auto v = as_integer()) return std::to_string(*v);
  std::string s = "[";
  const auto d = dense();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(d[i]);
  }
  return s + "]";
}

}  // namespace gpcode
