#include <partrec/exponent_stream.hpp>

#include <algorithm>

namespace partrec {

ExponentStream::ExponentStream(std::vector<Term> terms, std::int64_t bound) : bound_(bound) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  for (const Term& t : terms) {
    if (t.exponent > bound) break;
    if (!terms_.empty() && terms_.back().exponent == t.exponent) {
      terms_.back().coefficient += t.coefficient;
    } else {
      terms_.push_back(t);
    }
  }
  std::erase_if(terms_, [](const Term& t) { return t.coefficient == 0; });
}

std::int64_t ExponentStream::coefficient_at(std::int64_t e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, std::int64_t v) { return t.exponent < v; });
  return (it != terms_.end() && it->exponent == e) ? it->coefficient : 0;
}

std::vector<std::int64_t> ExponentStream::exponents() const {
  std::vector<std::int64_t> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) out.push_back(t.exponent);
  return out;
}

ExponentStream ExponentStream::negated() const {
  std::vector<Term> out = terms_;
  for (Term& t : out) t.coefficient = -t.coefficient;
  return ExponentStream(std::move(out), bound_);
}

ExponentStream merge(const ExponentStream& a, const ExponentStream& b) {
  std::vector<Term> all(a.terms_.begin(), a.terms_.end());
  all.insert(all.end(), b.terms_.begin(), b.terms_.end());
  return ExponentStream(std::move(all), std::min(a.bound_, b.bound_));
}

}  // namespace partrec
