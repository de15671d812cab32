#include <partrec/series.hpp>

#include <algorithm>
#include <sstream>
#include <utility>

namespace partrec {

namespace {

// Indices of the nonzero coefficients of `s` up to `limit`.
std::vector<std::size_t> support(const Series& s, std::size_t limit) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i <= limit; ++i) {
    if (sgn(s[i]) != 0) idx.push_back(i);
  }
  return idx;
}

// acc += c * v, using the ui variants when c is small.
inline void add_product(BigInt& acc, const BigInt& c, const BigInt& v) {
  if (c.fits_slong_p()) {
    const long cs = c.get_si();
    if (cs >= 0) {
      mpz_addmul_ui(acc.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(cs));
    } else {
      mpz_submul_ui(acc.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(-cs));
    }
    return;
  }
  mpz_addmul(acc.get_mpz_t(), c.get_mpz_t(), v.get_mpz_t());
}

// In-place multiplication of `c` by (1 + sign·x^m).
void multiply_binomial(std::vector<BigInt>& c, std::size_t m, int sign) {
  if (m >= c.size()) return;
  for (std::size_t i = c.size() - 1; i >= m; --i) {
    if (sign > 0) {
      c[i] += c[i - m];
    } else {
      c[i] -= c[i - m];
    }
    if (i == m) break;
  }
}

void validate(const Factor& f) {
  if (f.stride < 1 || f.stride + f.offset < 1 || (f.sign != 1 && f.sign != -1) ||
      f.exponent == 0) {
    std::ostringstream os;
    os << "malformed factor (stride=" << f.stride << ", offset=" << f.offset
       << ", sign=" << f.sign << ", exponent=" << f.exponent << ")";
    throw std::invalid_argument(os.str());
  }
}

// Expansion of ∏ (1 + s x^(a k + b))^|e| over the given factors.
std::vector<BigInt> expand_positive(std::span<const Factor> factors, std::size_t order,
                                    bool negative_block) {
  std::vector<BigInt> c(order + 1);
  c[0] = 1;
  for (const Factor& f : factors) {
    if ((f.exponent < 0) != negative_block) continue;
    const int reps = f.exponent < 0 ? -f.exponent : f.exponent;
    for (std::int64_t k = 1;; ++k) {
      const std::int64_t m = f.stride * k + f.offset;
      if (m > static_cast<std::int64_t>(order)) break;
      for (int r = 0; r < reps; ++r) {
        multiply_binomial(c, static_cast<std::size_t>(m), f.sign);
      }
    }
  }
  return c;
}

}  // namespace

Series::Series(std::size_t order) : coeffs_(order + 1) {}

Series::Series(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
}

Series::Series(std::initializer_list<long> coeffs) {
  if (coeffs.size() == 0) throw std::invalid_argument("series needs at least one coefficient");
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
}

Series Series::one(std::size_t order) {
  Series s(order);
  s.coeffs_[0] = 1;
  return s;
}

Series Series::monomial(std::size_t order, std::size_t k, const BigInt& c) {
  Series s(order);
  if (k <= order) s.coeffs_[k] = c;
  return s;
}

bool Series::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c == 0; });
}

std::string to_string(const Series& s) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i <= s.order(); ++i) {
    if (s[i] == 0) continue;
    BigInt c = s[i];
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      c = abs(c);
    } else if (c < 0) {
      os << "-";
      c = abs(c);
    }
    first = false;
    if (i == 0 || c != 1) os << c.get_str();
    if (i > 0) {
      if (c != 1) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  os << " + O(x^" << s.order() + 1 << ")";
  return os.str();
}

Series series_add(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<BigInt> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) c[i] = a[i] + b[i];
  return Series(std::move(c));
}

Series series_sub(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<BigInt> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) c[i] = a[i] - b[i];
  return Series(std::move(c));
}

Series scale(const Series& a, const BigInt& k) {
  std::vector<BigInt> c(a.order() + 1);
  for (std::size_t i = 0; i <= a.order(); ++i) c[i] = a[i] * k;
  return Series(std::move(c));
}

Series series_mul(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.order(), b.order());
  auto sa = support(a, n);
  auto sb = support(b, n);
  // Iterate over the sparser operand; theta series are very sparse.
  const bool swap = sb.size() < sa.size();
  const Series& sparse = swap ? b : a;
  const Series& dense = swap ? a : b;
  const auto& idx = swap ? sb : sa;

  std::vector<BigInt> c(n + 1);
  for (std::size_t i : idx) {
    const BigInt& ai = sparse[i];
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (sgn(dense[j]) == 0) continue;
      add_product(c[i + j], ai, dense[j]);
    }
  }
  return Series(std::move(c));
}

Series series_invert(const Series& a) {
  if (a[0] != 1 && a[0] != -1) throw NonInvertibleSeries();
  const std::size_t n = a.order();
  const bool neg = a[0] < 0;
  std::vector<std::size_t> idx = support(a, n);

  // b_0 = 1/a_0, b_k = -(1/a_0) Σ_{i>=1} a_i b_{k-i}.
  std::vector<BigInt> b(n + 1);
  b[0] = a[0];
  BigInt acc;
  for (std::size_t k = 1; k <= n; ++k) {
    acc = 0;
    for (std::size_t i : idx) {
      if (i == 0) continue;
      if (i > k) break;
      add_product(acc, a[i], b[k - i]);
    }
    if (neg) {
      b[k] = acc;
    } else {
      b[k] = -acc;
    }
  }
  return Series(std::move(b));
}

Series substitute_neg(const Series& a) {
  std::vector<BigInt> c(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return Series(std::move(c));
}

Series substitute_power(const Series& a, std::size_t m) {
  if (m == 0) throw std::invalid_argument("substitute_power needs m >= 1");
  const std::size_t n = a.order();
  std::vector<BigInt> c(n + 1);
  for (std::size_t i = 0; i * m <= n; ++i) c[i * m] = a[i];
  return Series(std::move(c));
}

Series shift_up(const Series& a, std::size_t k) {
  const std::size_t n = a.order();
  std::vector<BigInt> c(n + 1);
  for (std::size_t i = k; i <= n; ++i) c[i] = a[i - k];
  return Series(std::move(c));
}

Series shift_down(const Series& a, std::size_t k) {
  if (k > a.order()) throw std::invalid_argument("shift_down past the truncation order");
  return Series(std::vector<BigInt>(a.coeffs().begin() + static_cast<std::ptrdiff_t>(k),
                                    a.coeffs().end()));
}

Series truncate(const Series& a, std::size_t order) {
  const std::size_t n = std::min(order, a.order());
  return Series(std::vector<BigInt>(a.coeffs().begin(),
                                    a.coeffs().begin() + static_cast<std::ptrdiff_t>(n + 1)));
}

Series even_part(const Series& a) {
  // (a(x) + a(-x)) / 2: the sum at even i is 2·a_i, at odd i it is 0.
  Series sum = series_add(a, substitute_neg(a));
  std::vector<BigInt> c(sum.order() + 1);
  for (std::size_t i = 0; i <= sum.order(); ++i) {
    if (!mpz_even_p(sum[i].get_mpz_t())) throw std::logic_error("even_part: odd numerator");
    mpz_divexact_ui(c[i].get_mpz_t(), sum[i].get_mpz_t(), 2);
  }
  return Series(std::move(c));
}

Series odd_part(const Series& a) {
  Series diff = series_sub(a, substitute_neg(a));
  std::vector<BigInt> c(diff.order() + 1);
  for (std::size_t i = 0; i <= diff.order(); ++i) {
    if (!mpz_even_p(diff[i].get_mpz_t())) throw std::logic_error("odd_part: odd numerator");
    mpz_divexact_ui(c[i].get_mpz_t(), diff[i].get_mpz_t(), 2);
  }
  return Series(std::move(c));
}

Series expand_product(const FactorSpec& spec, std::size_t order) {
  bool has_negative = false;
  for (const Factor& f : spec.factors()) {
    validate(f);
    has_negative = has_negative || f.exponent < 0;
  }
  Series positive(expand_positive(spec.factors(), order, false));
  if (!has_negative) return positive;
  Series denominator(expand_positive(spec.factors(), order, true));
  return series_mul(positive, series_invert(denominator));
}

Series theta_series(const ExponentStream& stream, std::size_t order) {
  std::vector<BigInt> c(order + 1);
  for (const Term& t : stream) {
    if (t.exponent < 0) continue;
    if (static_cast<std::size_t>(t.exponent) > order) break;
    c[static_cast<std::size_t>(t.exponent)] += t.coefficient;
  }
  return Series(std::move(c));
}

}  // namespace partrec
