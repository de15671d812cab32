#ifndef PARTREC_TESTS_TEST_SUPPORT_HPP
#define PARTREC_TESTS_TEST_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include <partrec/oracle.hpp>
#include <partrec/series.hpp>

namespace partrec::testing {

// Schoolbook Cauchy product on plain coefficient vectors, kept apart from
// series_mul's sparse path.
inline Series naive_mul(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<BigInt> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) c[i] += a[j] * b[i - j];
  }
  return Series(std::move(c));
}

inline Series random_series(std::mt19937_64& rng, std::size_t order, int lo = -9, int hi = 9) {
  std::uniform_int_distribution<int> coef(lo, hi);
  std::vector<BigInt> c(order + 1);
  for (auto& x : c) x = coef(rng);
  return Series(std::move(c));
}

inline Series random_unit_series(std::mt19937_64& rng, std::size_t order) {
  const Series base = random_series(rng, order);
  std::vector<BigInt> c(base.coeffs().begin(), base.coeffs().end());
  std::bernoulli_distribution flip(0.5);
  c[0] = flip(rng) ? 1 : -1;
  return Series(std::move(c));
}

// Oracle counts f(0..n) as a series.
inline Series oracle_series(oracle::ConstraintKind kind, int n) {
  std::vector<BigInt> c;
  for (int i = 0; i <= n; ++i) c.emplace_back(static_cast<unsigned long>(oracle::count_partitions(i, kind)));
  return Series(std::move(c));
}

inline std::vector<BigInt> big(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace partrec::testing

#endif  // PARTREC_TESTS_TEST_SUPPORT_HPP
