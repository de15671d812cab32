#include <partrec/sequences.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace partrec {

namespace {

inline std::int64_t alternating(std::int64_t j) { return (j % 2 == 0) ? 1 : -1; }

// Appends coef(j)·x^{value(j)} for j = 0, 1, -1, 2, -2, ... while the values
// stay within bound. `value` must be increasing in |j| on both sides for
// |j| >= 1, which holds for every quadratic a j² + b j + c here
// (|b| < 2a).
template <class Value, class Coef>
void bilateral(std::int64_t bound, Value value, Coef coef, std::vector<Term>& out) {
  if (bound < 0) return;
  if (const std::int64_t v = value(0); v <= bound) out.push_back({v, coef(0)});
  for (std::int64_t m = 1;; ++m) {
    const std::int64_t up = value(m);
    const std::int64_t down = value(-m);
    if (up > bound && down > bound) break;
    if (up <= bound) out.push_back({up, coef(m)});
    if (down <= bound) out.push_back({down, coef(-m)});
  }
}

// 1 + Σ_{j>=1} c(j) x^{value(j)}, for value increasing in j.
template <class Value, class Coef>
void unilateral(std::int64_t bound, Value value, Coef coef, std::vector<Term>& out) {
  if (bound < 0) return;
  for (std::int64_t j = 1;; ++j) {
    const std::int64_t v = value(j);
    if (v > bound) break;
    out.push_back({v, coef(j)});
  }
}

}  // namespace

ExponentStream gen_pentagonal(std::int64_t bound) {
  std::vector<Term> t;
  bilateral(bound, [](std::int64_t k) { return k * (3 * k - 1) / 2; }, alternating, t);
  return ExponentStream(std::move(t), bound);
}

std::int64_t generalized_pentagonal(std::int64_t j) {
  if (j < 0) throw std::invalid_argument("generalized_pentagonal needs j >= 0");
  // Multiply the closed form through by 16 to stay in integers.
  const std::int64_t parity = (j % 2 == 0) ? 1 : -1;
  const std::int64_t sixteen_times = 6 * j * j + 2 * (3 - parity) * j + (1 - parity);
  return sixteen_times / 16;
}

ExponentStream gen_triangular(std::int64_t bound) {
  std::vector<Term> t;
  if (bound >= 0) t.push_back({0, 1});
  unilateral(bound, [](std::int64_t n) { return n * (n + 1) / 2; },
             [](std::int64_t) { return std::int64_t{1}; }, t);
  return ExponentStream(std::move(t), bound);
}

std::int64_t parity_triangular(Parity parity, std::int64_t i) {
  if (i < 1) throw std::invalid_argument("parity_triangular is 1-based");
  const std::int64_t m = 2 * i - 1;
  const std::int64_t s = (i % 2 == 0) ? 1 : -1;
  return parity == Parity::even ? m * (m + s) / 2 : m * (m - s) / 2;
}

ExponentStream gen_triangular_parity(Parity parity, std::int64_t bound) {
  std::vector<Term> t;
  for (std::int64_t i = 1;; ++i) {
    const std::int64_t v = parity_triangular(parity, i);
    if (v > bound) break;
    t.push_back({v, 1});
  }
  return ExponentStream(std::move(t), bound);
}

ExponentStream gen_squares_and_doubles(std::int64_t bound) {
  std::vector<Term> t;
  if (bound >= 0) t.push_back({0, 1});
  unilateral(bound, [](std::int64_t j) { return j * j; }, alternating, t);
  unilateral(bound, [](std::int64_t j) { return 2 * j * j; }, alternating, t);
  return ExponentStream(std::move(t), bound);
}

ExponentStream gen_phi_signed(std::int64_t bound) {
  std::vector<Term> t;
  if (bound >= 0) t.push_back({0, 1});
  unilateral(bound, [](std::int64_t j) { return j * j; },
             [](std::int64_t j) { return 2 * alternating(j); }, t);
  return ExponentStream(std::move(t), bound);
}

ExponentStream gen_phi(std::int64_t bound) {
  std::vector<Term> t;
  if (bound >= 0) t.push_back({0, 1});
  unilateral(bound, [](std::int64_t j) { return j * j; },
             [](std::int64_t) { return std::int64_t{2}; }, t);
  return ExponentStream(std::move(t), bound);
}

ExponentStream gen_ewell(std::int64_t bound) {
  std::vector<Term> t;
  bilateral(bound, [](std::int64_t j) { return j * (2 * j - 1); }, alternating, t);
  return ExponentStream(std::move(t), bound);
}

ExponentStream gen_heptagonal(std::int64_t bound) {
  std::vector<Term> t;
  bilateral(bound, [](std::int64_t j) { return j * (5 * j - 3) / 2; }, alternating, t);
  return ExponentStream(std::move(t), bound);
}

ExponentStream gen_octagonal(std::int64_t bound) {
  std::vector<Term> t;
  bilateral(bound, [](std::int64_t j) { return j * (3 * j - 2); }, alternating, t);
  return ExponentStream(std::move(t), bound);
}

std::int64_t rs_value(RsFamily family, std::int64_t i) {
  switch (family) {
    case RsFamily::r_even: return 60 * i * i - 8 * i;
    case RsFamily::r_odd: return 60 * i * i + 52 * i + 11;
    case RsFamily::s_even: return 60 * i * i + 32 * i + 4;
    case RsFamily::s_odd: return 60 * i * i - 28 * i + 3;
  }
  throw std::invalid_argument("unknown r/s family");
}

ExponentStream gen_thm3_rs(RsFamily family, std::int64_t bound) {
  std::vector<Term> t;
  bilateral(bound, [family](std::int64_t i) { return rs_value(family, i); },
            [](std::int64_t) { return std::int64_t{1}; }, t);
  return ExponentStream(std::move(t), bound);
}

ExponentStream rs_quintuple_stream(std::int64_t bound) {
  return merge(merge(gen_thm3_rs(RsFamily::r_even, bound),
                     gen_thm3_rs(RsFamily::s_even, bound).negated()),
               merge(gen_thm3_rs(RsFamily::r_odd, bound).negated(),
                     gen_thm3_rs(RsFamily::s_odd, bound)));
}

ExponentStream gen_lemma2_exponents(Parity part, std::int64_t bound) {
  std::vector<Term> t;
  const auto plus = [](std::int64_t) { return std::int64_t{1}; };
  const auto minus = [](std::int64_t) { return std::int64_t{-1}; };
  if (part == Parity::odd) {
    bilateral(bound, [](std::int64_t j) { return 24 * j * j + 26 * j + 7; }, plus, t);
    bilateral(bound, [](std::int64_t j) { return 24 * j * j - 10 * j + 1; }, minus, t);
  } else {
    bilateral(bound, [](std::int64_t j) { return 24 * j * j + 2 * j; }, plus, t);
    bilateral(bound, [](std::int64_t j) { return 24 * j * j + 14 * j + 2; }, minus, t);
  }
  return ExponentStream(std::move(t), bound);
}

bool is_triangular(std::int64_t n) {
  if (n < 0) return false;
  const std::int64_t d = 8 * n + 1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(d)));
  while (r * r > d) --r;
  while ((r + 1) * (r + 1) <= d) ++r;
  return r * r == d;
}

}  // namespace partrec
