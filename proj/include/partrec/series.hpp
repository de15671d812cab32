#ifndef PARTREC_SERIES_HPP
#define PARTREC_SERIES_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <partrec/bigint.hpp>
#include <partrec/exponent_stream.hpp>

namespace partrec {

/// Truncated formal power series a_0 + a_1 x + ... + a_N x^N with exact
/// integer coefficients.
///
/// The order N is fixed when the value is built and every coefficient up to
/// and including x^N is stored. Binary operations on series of different
/// orders truncate to the smaller one. Values are immutable once built.
class Series {
 public:
  /// The zero series of the given order.
  explicit Series(std::size_t order);

  /// Takes ownership of `coeffs`; the order is coeffs.size() - 1.
  explicit Series(std::vector<BigInt> coeffs);

  Series(std::initializer_list<long> coeffs);

  static Series one(std::size_t order);

  /// c·x^k, truncated (k > order gives the zero series).
  static Series monomial(std::size_t order, std::size_t k, const BigInt& c = 1);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const BigInt& operator[](std::size_t i) const { return coeffs_[i]; }
  std::span<const BigInt> coeffs() const noexcept { return coeffs_; }

  bool is_zero() const;

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

std::string to_string(const Series& s);

// Ring operations; results have order min(a.order(), b.order()).
Series series_add(const Series& a, const Series& b);
Series series_sub(const Series& a, const Series& b);
Series series_mul(const Series& a, const Series& b);
Series scale(const Series& a, const BigInt& c);

inline Series operator+(const Series& a, const Series& b) { return series_add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return series_sub(a, b); }
inline Series operator*(const Series& a, const Series& b) { return series_mul(a, b); }
inline Series operator*(const BigInt& c, const Series& a) { return scale(a, c); }

/// Thrown by series_invert when the constant term is not ±1.
class NonInvertibleSeries : public std::domain_error {
 public:
  NonInvertibleSeries() : std::domain_error("non-invertible series") {}
};

/// Multiplicative inverse over the integers. Requires a_0 = ±1.
Series series_invert(const Series& a);

/// a(-x).
Series substitute_neg(const Series& a);

/// a(x^m) truncated to a's order. Requires m >= 1.
Series substitute_power(const Series& a, std::size_t m);

/// x^k · a(x), truncated to a's order.
Series shift_up(const Series& a, std::size_t k);

/// (a(x) - a(0) - ... - a_{k-1} x^{k-1}) / x^k. The order drops by k.
Series shift_down(const Series& a, std::size_t k);

Series truncate(const Series& a, std::size_t order);

/// (a(x) + a(-x)) / 2 and (a(x) - a(-x)) / 2. The halving is checked to be
/// exact and throws std::logic_error otherwise.
Series even_part(const Series& a);
Series odd_part(const Series& a);

/// One factor (1 + sign·x^(stride·k + offset))^exponent of an infinite
/// product over k >= 1.
struct Factor {
  std::int64_t stride = 1;
  std::int64_t offset = 0;
  int sign = -1;
  int exponent = 1;
};

/// Infinite product ∏_{k>=1} ∏_f (1 + s_f x^(a_f k + b_f))^(e_f).
class FactorSpec {
 public:
  FactorSpec() = default;
  FactorSpec(std::initializer_list<Factor> factors) : factors_(factors) {}

  FactorSpec& times(std::int64_t stride, std::int64_t offset, int sign, int exponent = 1) {
    factors_.push_back({stride, offset, sign, exponent});
    return *this;
  }

  std::span<const Factor> factors() const noexcept { return factors_; }

 private:
  std::vector<Factor> factors_;
};

/// Truncated expansion of an infinite product. Factors with negative
/// exponents are collected, expanded with positive exponents and inverted
/// as a block. Throws std::invalid_argument for a malformed factor
/// (stride < 1, stride + offset < 1, sign not ±1, or exponent 0).
Series expand_product(const FactorSpec& spec, std::size_t order);

/// Dense form of a sparse stream, truncated at `order`.
Series theta_series(const ExponentStream& stream, std::size_t order);

}  // namespace partrec

#endif  // PARTREC_SERIES_HPP
