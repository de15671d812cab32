#ifndef PARTREC_EXPONENT_STREAM_HPP
#define PARTREC_EXPONENT_STREAM_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace partrec {

/// One signed term c·x^e of a sparse theta-like series.
struct Term {
  std::int64_t exponent = 0;
  std::int64_t coefficient = 0;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse series given as (exponent, coefficient) pairs.
///
/// Construction normalizes the input: terms are sorted by exponent, equal
/// exponents are merged by summing their coefficients, zero coefficients are
/// dropped, and everything above `bound` is clipped. After construction the
/// exponents are strictly increasing and all lie in [0, bound].
class ExponentStream {
 public:
  ExponentStream() = default;
  ExponentStream(std::vector<Term> terms, std::int64_t bound);

  std::int64_t bound() const noexcept { return bound_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }

  /// Coefficient attached to exponent `e` (0 when absent).
  std::int64_t coefficient_at(std::int64_t e) const;

  /// Exponents only, in increasing order.
  std::vector<std::int64_t> exponents() const;

  /// The same stream with every term negated.
  ExponentStream negated() const;

  /// Union of two streams, merging coincident exponents; the bound is the
  /// smaller of the two.
  friend ExponentStream merge(const ExponentStream& a, const ExponentStream& b);

  friend bool operator==(const ExponentStream& a, const ExponentStream& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::vector<Term> terms_;
  std::int64_t bound_ = -1;
};

}  // namespace partrec

#endif  // PARTREC_EXPONENT_STREAM_HPP
