#include <partrec/verify.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include <partrec/sequences.hpp>
#include <partrec/series.hpp>

namespace partrec::verify {

namespace {

using Index = std::int64_t;

// Keeps the failure with the smallest index across the side-identities of
// one check; ties go to whichever was offered first.
class FirstFailure {
 public:
  void offer(Index n, BigInt lhs, BigInt rhs, std::string detail) {
    if (best_ && best_->n <= n) return;
    best_ = Failure{n, std::move(lhs), std::move(rhs), std::move(detail)};
  }
  // Pointwise identities stop scanning past the current best.
  Index horizon(Index bound) const { return best_ ? std::min(bound, best_->n) : bound; }
  std::optional<Failure> take() { return std::move(best_); }

 private:
  std::optional<Failure> best_;
};

Index as_index(std::size_t n) { return static_cast<Index>(n); }

// Σ_e c_e · f(n - e) over a signed stream.
BigInt stream_dot(const ExponentStream& s, const PartitionTable& f, Index n) {
  BigInt acc = 0;
  for (const Term& t : s) {
    if (t.exponent > n) break;
    const BigInt& v = f.at(n - t.exponent);
    if (t.coefficient >= 0) {
      mpz_addmul_ui(acc.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(t.coefficient));
    } else {
      mpz_submul_ui(acc.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(-t.coefficient));
    }
  }
  return acc;
}

// Σ_{t in stream, t <= n, t ≡ n mod d} f((n - t)/d)·scale, stream exponents
// multiplied by `stretch` first.
BigInt folded_sum(const ExponentStream& s, const PartitionTable& f, Index n, Index stretch,
                  Index divisor) {
  BigInt acc = 0;
  for (const Term& t : s) {
    const Index shift = stretch * t.exponent;
    if (shift > n) break;
    if ((n - shift) % divisor != 0) continue;
    const BigInt& v = f.at((n - shift) / divisor);
    if (t.coefficient >= 0) {
      mpz_addmul_ui(acc.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(t.coefficient));
    } else {
      mpz_submul_ui(acc.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(-t.coefficient));
    }
  }
  return acc;
}

void compare_series(const Series& lhs, const Series& rhs, const std::string& detail,
                    FirstFailure& ff) {
  const std::size_t n = std::min(lhs.order(), rhs.order());
  for (std::size_t i = 0; i <= n; ++i) {
    if (lhs[i] != rhs[i]) {
      ff.offer(as_index(i), lhs[i], rhs[i], detail);
      return;
    }
  }
}

void compare_series_mod2(const Series& lhs, const Series& rhs, const std::string& detail,
                         FirstFailure& ff) {
  const std::size_t n = std::min(lhs.order(), rhs.order());
  for (std::size_t i = 0; i <= n; ++i) {
    if (mpz_odd_p(lhs[i].get_mpz_t()) != mpz_odd_p(rhs[i].get_mpz_t())) {
      ff.offer(as_index(i), lhs[i], rhs[i], detail);
      return;
    }
  }
}

template <class Lhs, class Rhs>
void compare_pointwise(Index bound, Lhs lhs, Rhs rhs, const std::string& detail, FirstFailure& ff) {
  const Index stop = ff.horizon(bound);
  for (Index n = 0; n <= stop; ++n) {
    BigInt l = lhs(n);
    BigInt r = rhs(n);
    if (l != r) {
      ff.offer(n, std::move(l), std::move(r), detail);
      return;
    }
  }
}

template <class Lhs, class Rhs>
void compare_pointwise_mod2(Index bound, Lhs lhs, Rhs rhs, const std::string& detail,
                            FirstFailure& ff) {
  const Index stop = ff.horizon(bound);
  for (Index n = 0; n <= stop; ++n) {
    BigInt l = lhs(n);
    BigInt r = rhs(n);
    if (mpz_odd_p(l.get_mpz_t()) != mpz_odd_p(r.get_mpz_t())) {
      ff.offer(n, std::move(l), std::move(r), detail);
      return;
    }
  }
}

CheckResult finish(std::string name, std::size_t bound, FirstFailure& ff) {
  return CheckResult{std::move(name), bound, ff.take()};
}

Series theta(const ExponentStream& s, std::size_t order) { return theta_series(s, order); }

Series euler_product(std::size_t order) { return expand_product(FactorSpec{{1, 0, -1, 1}}, order); }

Series partition_gf(std::size_t order) {
  return expand_product(FactorSpec{{1, 0, -1, -1}}, order);
}

// ---------------------------------------------------------------------------
// Recurrence checks. Each compares a signed stream applied to the p table
// with the closed right-hand side, pointwise for 0 <= n <= bound.

CheckResult check_euler(const TableSet& t, std::size_t bound) {
  FirstFailure ff;
  const Index N = as_index(bound);
  const ExponentStream pent = gen_pentagonal(N);
  compare_pointwise(
      N, [&](Index n) { return stream_dot(pent, t.p, n); },
      [](Index n) { return BigInt(n == 0 ? 1 : 0); }, "pentagonal recurrence", ff);
  return finish("euler", bound, ff);
}

CheckResult check_ewell(const TableSet& t, std::size_t bound) {
  FirstFailure ff;
  const Index N = as_index(bound);
  const ExponentStream shifts = gen_ewell(N);
  compare_pointwise(
      N, [&](Index n) { return stream_dot(shifts, t.p, n); },
      [&](Index n) { return n % 2 ? BigInt(0) : t.q.at(n / 2); }, "triangular recurrence", ff);
  return finish("ewell", bound, ff);
}

CheckResult check_thm1(const TableSet& t, std::size_t bound) {
  FirstFailure ff;
  const Index N = as_index(bound);
  const ExponentStream shifts = gen_squares_and_doubles(N);
  compare_pointwise(
      N, [&](Index n) { return stream_dot(shifts, t.p, n); },
      [&](Index n) { return n % 2 ? BigInt(0) : t.qq.at(n); }, "squares-and-doubles recurrence",
      ff);
  return finish("thm1", bound, ff);
}

CheckResult check_thm2(const TableSet& t, std::size_t bound) {
  FirstFailure ff;
  const Index N = as_index(bound);
  const ExponentStream shifts = gen_phi_signed(N);
  compare_pointwise(
      N, [&](Index n) { return stream_dot(shifts, t.p, n); },
      [&](Index n) { return n % 2 ? BigInt(-t.qq.at(n)) : t.qq.at(n); }, "signed squares recurrence",
      ff);
  return finish("thm2", bound, ff);
}

// Right-hand side: for even n, Σ p((n - r_e)/2) - Σ p((n - s_e)/2); for odd
// n, -Σ p((n - r_o)/2) + Σ p((n - s_o)/2). These are the signs of
// Σ_j (-1)^j (x^{15j²-4j} + x^{15j²+14j+3}) split by exponent parity, so the
// right side is the coefficient of x^n in P(x²)·rs_quintuple_stream.
CheckResult check_thm3(const TableSet& t, std::size_t bound) {
  FirstFailure ff;
  const Index N = as_index(bound);
  const ExponentStream hept = gen_heptagonal(N);
  const ExponentStream re = gen_thm3_rs(RsFamily::r_even, N);
  const ExponentStream ro = gen_thm3_rs(RsFamily::r_odd, N);
  const ExponentStream se = gen_thm3_rs(RsFamily::s_even, N);
  const ExponentStream so = gen_thm3_rs(RsFamily::s_odd, N);
  compare_pointwise(
      N, [&](Index n) { return stream_dot(hept, t.p, n); },
      [&](Index n) -> BigInt {
        if (n % 2 == 0) return folded_sum(re, t.p, n, 1, 2) - folded_sum(se, t.p, n, 1, 2);
        return folded_sum(so, t.p, n, 1, 2) - folded_sum(ro, t.p, n, 1, 2);
      },
      "heptagonal recurrence", ff);
  return finish("thm3", bound, ff);
}

CheckResult check_thm4(const TableSet& t, std::size_t bound) {
  FirstFailure ff;
  const Index N = as_index(bound);
  const ExponentStream oct = gen_octagonal(N);
  const ExponentStream te = gen_triangular_parity(Parity::even, N);
  const ExponentStream to = gen_triangular_parity(Parity::odd, N);
  compare_pointwise(
      N, [&](Index n) { return stream_dot(oct, t.p, n); },
      [&](Index n) { return folded_sum(n % 2 ? to : te, t.p, n, 3, 2); }, "octagonal recurrence",
      ff);
  return finish("thm4", bound, ff);
}

void lemma1_identity(const TableSet& t, std::size_t order, int sign, FirstFailure& ff) {
  const Series P = truncate(t.p.as_series(), order);
  const Series psi = theta(gen_triangular(as_index(order)), order);
  const Series P2 = substitute_power(P, 2);
  Series lhs = sign > 0 ? P + substitute_neg(P) : P - substitute_neg(P);
  Series rhs = P2 * P2 * (sign > 0 ? psi + substitute_neg(psi) : psi - substitute_neg(psi));
  compare_series(lhs, rhs, sign > 0 ? "P(x)+P(-x) = P(x^2)^2 (psi(x)+psi(-x))"
                                    : "P(x)-P(-x) = P(x^2)^2 (psi(x)-psi(-x))",
                 ff);
}

CheckResult check_thm5(const TableSet& t, std::size_t bound) {
  FirstFailure ff;
  const Index N = as_index(bound);
  const ExponentStream te = gen_triangular_parity(Parity::even, N);
  const ExponentStream to = gen_triangular_parity(Parity::odd, N);
  compare_pointwise(
      N, [&](Index n) { return t.p.at(n); },
      [&](Index n) { return folded_sum(n % 2 ? to : te, t.p2, n, 1, 2); },
      "two-color triangular recurrence", ff);
  lemma1_identity(t, bound, +1, ff);
  lemma1_identity(t, bound, -1, ff);
  return finish("thm5", bound, ff);
}

CheckResult check_thm6(const TableSet& t, std::size_t bound) {
  FirstFailure ff;
  const Index N = as_index(bound);
  compare_pointwise(
      N, [&](Index n) { return t.v.at(n); },
      [&](Index n) { return n % 2 ? t.opr.at((n - 1) / 2) : t.op.at(n / 2); },
      "v(2m) = op(m), v(2m+1) = opr(m)", ff);

  const Series V = truncate(t.v.as_series(), bound);
  compare_series(V * theta(gen_squares_and_doubles(N), bound), Series::one(bound),
                 "V(x) (phi(-x)+phi(-x^2))/2 = 1", ff);
  const Series even_product = expand_product(FactorSpec{{2, 0, +1, 1}, {2, 0, -1, -1}}, bound);
  compare_series(even_part(V), even_product, "even part of V = prod (1+x^2k)/(1-x^2k)", ff);
  const Series odd_product = shift_up(
      expand_product(FactorSpec{{4, 0, +1, 1}, {16, -2, +1, 2}, {16, -14, +1, 2}, {2, 0, -1, -1}},
                     bound),
      1);
  compare_series(odd_part(V), odd_product,
                 "odd part of V = x prod (1+x^4k)(1+x^(16k-2))^2(1+x^(16k-14))^2/(1-x^2k)", ff);
  return finish("thm6", bound, ff);
}

CheckResult check_thm7(const TableSet& t, std::size_t bound) {
  FirstFailure ff;
  const Index N = as_index(bound);
  std::vector<Index> shifts;
  for (Index j = 0;; ++j) {
    const Index s = 4 * generalized_pentagonal(j);
    if (s > N) break;
    shifts.push_back(s);
  }
  compare_pointwise_mod2(
      N,
      [&](Index n) {
        BigInt acc = 0;
        for (Index s : shifts) {
          if (s > n) break;
          acc += t.p.at(n - s);
        }
        return acc;
      },
      [](Index n) { return BigInt(is_triangular(n) ? 1 : 0); },
      "sum p(n - 4 pi_j) = [n triangular] (mod 2)", ff);
  return finish("thm7", bound, ff);
}

CheckResult check_macmahon(const TableSet& t, std::size_t bound) {
  FirstFailure ff;
  const Index N = as_index(bound);
  const ExponentStream tri = gen_triangular(N);
  auto quarter_sum = [&](Index n) { return folded_sum(tri, t.p, n, 1, 4); };
  compare_pointwise(N, quarter_sum, [&](Index n) { return t.qq.at(n); },
                    "sum_{t in T(n)} p((n-t)/4) = qq(n)", ff);
  compare_pointwise_mod2(N, [&](Index n) { return t.p.at(n); }, quarter_sum,
                         "p(n) = sum_{t in T(n)} p((n-t)/4) (mod 2)", ff);
  return finish("macmahon", bound, ff);
}

// ---------------------------------------------------------------------------
// Series identities, coefficientwise at order `bound`.

CheckResult check_pentagonal(const TableSet&, std::size_t bound) {
  FirstFailure ff;
  compare_series(euler_product(bound), theta(gen_pentagonal(as_index(bound)), bound),
                 "prod (1-x^k) = sum (-1)^k x^(k(3k-1)/2)", ff);
  return finish("pentagonal", bound, ff);
}

CheckResult check_phi_product(const TableSet&, std::size_t bound) {
  FirstFailure ff;
  compare_series(expand_product(FactorSpec{{2, -1, +1, 2}, {2, 0, -1, 1}}, bound),
                 theta(gen_phi(as_index(bound)), bound), "prod (1+x^(2k-1))^2 (1-x^2k) = phi(x)",
                 ff);
  return finish("phi_product", bound, ff);
}

CheckResult check_psi_product(const TableSet&, std::size_t bound) {
  FirstFailure ff;
  compare_series(expand_product(FactorSpec{{2, 0, -1, 1}, {2, -1, -1, -1}}, bound),
                 theta(gen_triangular(as_index(bound)), bound),
                 "prod (1-x^2k)/(1-x^(2k-1)) = psi(x)", ff);
  return finish("psi_product", bound, ff);
}

CheckResult check_jacobi_heptagonal(const TableSet&, std::size_t bound) {
  FirstFailure ff;
  compare_series(expand_product(FactorSpec{{5, 0, -1, 1}, {5, -4, -1, 1}, {5, -1, -1, 1}}, bound),
                 theta(gen_heptagonal(as_index(bound)), bound),
                 "prod (1-x^5k)(1-x^(5k-4))(1-x^(5k-1)) = sum (-1)^j x^(j(5j-3)/2)", ff);
  return finish("jacobi_heptagonal", bound, ff);
}

CheckResult check_jacobi_octagonal(const TableSet&, std::size_t bound) {
  FirstFailure ff;
  compare_series(expand_product(FactorSpec{{6, 0, -1, 1}, {6, -5, -1, 1}, {6, -1, -1, 1}}, bound),
                 theta(gen_octagonal(as_index(bound)), bound),
                 "prod (1-x^6k)(1-x^(6k-5))(1-x^(6k-1)) = sum (-1)^j x^(j(3j-2))", ff);
  return finish("jacobi_octagonal", bound, ff);
}

Series quintuple_heptagonal_product(std::size_t order) {
  return expand_product(
      FactorSpec{{10, 0, -1, 1}, {20, -16, -1, 1}, {20, -4, -1, 1}, {10, -7, +1, 1}, {10, -3, +1, 1}},
      order);
}

CheckResult check_quintuple_heptagonal(const TableSet&, std::size_t bound) {
  FirstFailure ff;
  compare_series(quintuple_heptagonal_product(bound),
                 theta(rs_quintuple_stream(as_index(bound)), bound),
                 "prod (1-x^10k)(1-x^(20k-16))(1-x^(20k-4))(1+x^(10k-7))(1+x^(10k-3)) = "
                 "sum (-1)^j (x^(15j^2-4j) + x^(15j^2+14j+3))",
                 ff);
  return finish("quintuple_heptagonal", bound, ff);
}

CheckResult check_quintuple_lemma2_odd(const TableSet&, std::size_t bound) {
  FirstFailure ff;
  const Series prod = expand_product(
      FactorSpec{{16, -6, -1, 1}, {16, -10, -1, 1}, {16, 0, -1, 1}, {32, -4, -1, 1}, {32, -28, -1, 1}},
      bound);
  compare_series(scale(shift_up(prod, 1), -1),
                 theta(gen_lemma2_exponents(Parity::odd, as_index(bound)), bound),
                 "-x prod (1-x^(16k-6))(1-x^(16k-10))(1-x^16k)(1-x^(32k-4))(1-x^(32k-28)) = "
                 "sum (x^(24j^2+26j+7) - x^(24j^2-10j+1))",
                 ff);
  return finish("quintuple_lemma2_odd", bound, ff);
}

CheckResult check_quintuple_lemma2_even(const TableSet&, std::size_t bound) {
  FirstFailure ff;
  const Series prod = expand_product(
      FactorSpec{{16, -2, -1, 1}, {16, -14, -1, 1}, {16, 0, -1, 1}, {32, -12, -1, 1}, {32, -20, -1, 1}},
      bound);
  compare_series(prod, theta(gen_lemma2_exponents(Parity::even, as_index(bound)), bound),
                 "prod (1-x^(16k-2))(1-x^(16k-14))(1-x^16k)(1-x^(32k-12))(1-x^(32k-20)) = "
                 "sum (x^(24j^2+2j) - x^(24j^2+14j+2))",
                 ff);
  return finish("quintuple_lemma2_even", bound, ff);
}

CheckResult check_heptagonal_product(const TableSet&, std::size_t bound) {
  FirstFailure ff;
  const Series P = partition_gf(bound);
  const Series lhs = P * theta(gen_heptagonal(as_index(bound)), bound);
  const Series quotient = expand_product(FactorSpec{{5, -2, -1, -1}, {5, -3, -1, -1}}, bound);
  const Series rewritten = series_mul(quintuple_heptagonal_product(bound),
                                      expand_product(FactorSpec{{2, 0, -1, -1}}, bound));
  const Series split = substitute_power(P, 2) * theta(rs_quintuple_stream(as_index(bound)), bound);
  compare_series(lhs, quotient, "P(x) H(x) = prod 1/((1-x^(5k-2))(1-x^(5k-3)))", ff);
  compare_series(quotient, rewritten, "quotient = quintuple product / prod (1-x^2k)", ff);
  compare_series(rewritten, split, "quintuple product / prod (1-x^2k) = P(x^2) Q(x)", ff);
  return finish("heptagonal_product", bound, ff);
}

CheckResult check_octagonal_product(const TableSet&, std::size_t bound) {
  FirstFailure ff;
  const Index N = as_index(bound);
  const Series P = partition_gf(bound);
  const Series lhs = P * theta(gen_octagonal(N), bound);
  const Series quotient =
      expand_product(FactorSpec{{6, -4, -1, -1}, {6, -3, -1, -1}, {6, -2, -1, -1}}, bound);
  const Series rewritten = expand_product(
      FactorSpec{{12, 0, -1, 1}, {12, -9, +1, 1}, {12, -3, +1, 1}, {2, 0, -1, -1}}, bound);
  const Series split = substitute_power(P, 2) * substitute_power(theta(gen_triangular(N), bound), 3);
  compare_series(lhs, quotient, "P(x) O(x) = prod 1/((1-x^(6k-4))(1-x^(6k-3))(1-x^(6k-2)))", ff);
  compare_series(quotient, rewritten, "quotient = prod (1-x^12k)(1+x^(12k-9))(1+x^(12k-3))/(1-x^2k)",
                 ff);
  compare_series(rewritten, split, "... = P(x^2) psi(x^3)", ff);
  return finish("octagonal_product", bound, ff);
}

CheckResult check_macmahon_product(const TableSet&, std::size_t bound) {
  FirstFailure ff;
  const Series odd_distinct = expand_product(FactorSpec{{2, -1, +1, 1}}, bound);
  const Series split = substitute_power(partition_gf(bound), 4) *
                       theta(gen_triangular(as_index(bound)), bound);
  compare_series(odd_distinct, split, "prod (1+x^(2k-1)) = P(x^4) psi(x)", ff);
  compare_series_mod2(partition_gf(bound), odd_distinct, "P(x) = prod (1+x^(2k-1)) (mod 2)", ff);
  return finish("macmahon_product", bound, ff);
}

CheckResult check_parity_product(const TableSet&, std::size_t bound) {
  FirstFailure ff;
  const Index N = as_index(bound);
  const Series psi = theta(gen_triangular(N), bound);
  const Series lifted = expand_product(FactorSpec{{2, 0, +1, 1}, {2, -1, -1, -1}}, bound);
  const Series doubled = expand_product(FactorSpec{{1, 0, +1, 1}, {2, 0, +1, 1}}, bound);
  const Series split =
      partition_gf(bound) * substitute_power(theta(gen_pentagonal(N), bound), 4);
  compare_series_mod2(psi, lifted, "psi(x) = prod (1+x^2k)/(1-x^(2k-1)) (mod 2)", ff);
  compare_series(lifted, doubled, "prod (1+x^2k)/(1-x^(2k-1)) = prod (1+x^k)(1+x^2k)", ff);
  compare_series(doubled, split, "prod (1+x^k)(1+x^2k) = P(x) sum (-1)^j x^(6j^2-2j)", ff);
  return finish("parity_product", bound, ff);
}

CheckResult check_lemma1_plus(const TableSet& t, std::size_t bound) {
  FirstFailure ff;
  lemma1_identity(t, bound, +1, ff);
  return finish("lemma1_plus", bound, ff);
}

CheckResult check_lemma1_minus(const TableSet& t, std::size_t bound) {
  FirstFailure ff;
  lemma1_identity(t, bound, -1, ff);
  return finish("lemma1_minus", bound, ff);
}

CheckResult check_lemma2(const TableSet&, std::size_t bound, Parity part) {
  FirstFailure ff;
  const Index N = as_index(bound);
  const Series pent = theta(gen_pentagonal(N), bound);
  const Series side = part == Parity::odd ? odd_part(pent) : even_part(pent);
  compare_series(theta(gen_lemma2_exponents(part, N), bound), side,
                 part == Parity::odd ? "odd-power terms of the pentagonal series"
                                     : "even-power terms of the pentagonal series",
                 ff);
  return finish(part == Parity::odd ? "lemma2_odd" : "lemma2_even", bound, ff);
}

std::vector<CheckSpec> make_registry() {
  const std::size_t R = kRecurrenceBound;
  const std::size_t S = kIdentityBound;
  using F = Family;
  std::vector<CheckSpec> r = {
      {"euler", "recurrence",
       "sum_k (-1)^k p(n - k(3k-1)/2) = [n = 0], p from the inverted product", R, {F::p},
       check_euler},
      {"ewell", "recurrence",
       "sum_j (-1)^j p(n - j(2j-1)) = 0 for odd n, q(n/2) for even n", R, {F::p, F::q},
       check_ewell},
      {"thm1", "recurrence",
       "p(n) + sum_{j>=1} (-1)^j [p(n-j^2) + p(n-2j^2)] = 0 for odd n, qq(n) for even n", R,
       {F::p, F::qq}, check_thm1},
      {"thm2", "recurrence", "p(n) + 2 sum_{j>=1} (-1)^j p(n-j^2) = (-1)^n qq(n)", R,
       {F::p, F::qq}, check_thm2},
      {"thm3", "recurrence",
       "heptagonal shifts j(5j-/+3)/2 applied to p equal +p((n-r_e)/2) - p((n-s_e)/2) for even n "
       "and -p((n-r_o)/2) + p((n-s_o)/2) for odd n; signs taken from the parity split of "
       "sum (-1)^j (x^(15j^2-4j) + x^(15j^2+14j+3)), cross-checked by quintuple_heptagonal",
       R, {F::p}, check_thm3},
      {"thm4", "recurrence",
       "octagonal shifts j(3j-/+2) applied to p equal sum p((n-3t)/2) over triangular t of the "
       "parity of n",
       R, {F::p}, check_thm4},
      {"thm5", "recurrence",
       "p(n) = sum p2((n-t)/2) over triangular t of the parity of n, plus both "
       "P(x) +/- P(-x) = P(x^2)^2 (psi(x) +/- psi(-x)) identities",
       R, {F::p, F::p2}, check_thm5},
      {"thm6", "recurrence",
       "v(2m) = op(m) and v(2m+1) = opr(m), plus 1/V and the even/odd product forms of V", R,
       {F::v, F::op, F::opr}, check_thm6},
      {"thm7", "recurrence", "sum_{j>=0} p(n - 4 pi_j) = [n triangular] (mod 2)", R, {F::p},
       check_thm7},
      {"macmahon", "recurrence",
       "sum_{t in T(n)} p((n-t)/4) = qq(n) exactly and = p(n) (mod 2), T(n) the triangular "
       "t <= n with t = n (mod 4)",
       R, {F::p, F::qq}, check_macmahon},
      {"pentagonal", "products", "prod (1-x^k) = sum (-1)^k x^(k(3k-1)/2)", S, {},
       check_pentagonal},
      {"phi_product", "products", "phi(x) = prod (1+x^(2k-1))^2 (1-x^2k)", S, {},
       check_phi_product},
      {"psi_product", "products", "psi(x) = prod (1-x^2k)/(1-x^(2k-1))", S, {}, check_psi_product},
      {"jacobi_heptagonal", "products", "triple product instance for the heptagonal series", S, {},
       check_jacobi_heptagonal},
      {"jacobi_octagonal", "products", "triple product instance for the octagonal series", S, {},
       check_jacobi_octagonal},
      {"quintuple_heptagonal", "products", "quintuple product instance behind the r/s families", S,
       {}, check_quintuple_heptagonal},
      {"quintuple_lemma2_odd", "products",
       "quintuple product instance for the odd part of the pentagonal series", S, {},
       check_quintuple_lemma2_odd},
      {"quintuple_lemma2_even", "products",
       "quintuple product instance for the even part of the pentagonal series", S, {},
       check_quintuple_lemma2_even},
      {"heptagonal_product", "products",
       "P(x) H(x) rewritten as P(x^2) times the r/s quintuple series", S, {},
       check_heptagonal_product},
      {"octagonal_product", "products", "P(x) O(x) rewritten as P(x^2) psi(x^3)", S, {},
       check_octagonal_product},
      {"macmahon_product", "products",
       "prod (1+x^(2k-1)) = P(x^4) psi(x) and P(x) = prod (1+x^(2k-1)) (mod 2)", S, {},
       check_macmahon_product},
      {"parity_product", "products",
       "psi(x) = P(x) prod (1-x^4k) (mod 2) through prod (1+x^k)(1+x^2k)", S, {},
       check_parity_product},
      {"lemma1_plus", "lemma1", "P(x) + P(-x) = P(x^2)^2 (psi(x) + psi(-x))", S, {F::p},
       check_lemma1_plus},
      {"lemma1_minus", "lemma1", "P(x) - P(-x) = P(x^2)^2 (psi(x) - psi(-x))", S, {F::p},
       check_lemma1_minus},
      {"lemma2_odd", "lemma2",
       "odd part of the pentagonal series = sum (x^(24j^2+26j+7) - x^(24j^2-10j+1))", S, {},
       [](const TableSet& t, std::size_t n) { return check_lemma2(t, n, Parity::odd); }},
      {"lemma2_even", "lemma2",
       "even part of the pentagonal series = sum (x^(24j^2+2j) - x^(24j^2+14j+2))", S, {},
       [](const TableSet& t, std::size_t n) { return check_lemma2(t, n, Parity::even); }},
  };
  std::set<std::string> seen;
  for (const auto& c : r) {
    if (!seen.insert(c.name).second) throw std::logic_error("duplicate check name " + c.name);
  }
  return r;
}

}  // namespace

TableSet TableSet::build(std::size_t bound) {
  TableSet t;
  t.bound = bound;
  t.p = p_table_gf(bound);
  t.q = q_table(bound);
  t.qq = qq_table(bound);
  t.p2 = p2_table(bound, Method::gf);
  t.op = overp_table(bound);
  t.opr = overp_r_table(bound);
  t.v = v_table(bound, Method::recurrence);
  return t;
}

PartitionTable& TableSet::table(Family f) {
  return const_cast<PartitionTable&>(std::as_const(*this).table(f));
}

const PartitionTable& TableSet::table(Family f) const {
  switch (f) {
    case Family::p: return p;
    case Family::q: return q;
    case Family::qq: return qq;
    case Family::p2: return p2;
    case Family::op: return op;
    case Family::opr: return opr;
    case Family::v: return v;
  }
  throw std::invalid_argument("unknown family");
}

const std::vector<CheckSpec>& registry() {
  static const std::vector<CheckSpec> r = make_registry();
  return r;
}

const CheckSpec* find_check(std::string_view name) {
  for (const auto& c : registry()) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::vector<const CheckSpec*> select_checks(std::string_view selector) {
  std::vector<const CheckSpec*> out;
  for (const auto& c : registry()) {
    if (selector == "all" || c.name == selector || c.group == selector) out.push_back(&c);
  }
  return out;
}

CheckResult run_check(const CheckSpec& spec, const TableSet& tables, std::size_t bound) {
  if (tables.bound < bound) {
    throw std::invalid_argument("tables cover n <= " + std::to_string(tables.bound) +
                                ", check asked for " + std::to_string(bound));
  }
  return spec.evaluate(tables, bound);
}

std::vector<CheckResult> run_all(const TableSet& tables, std::size_t bound) {
  std::vector<CheckResult> out;
  out.reserve(registry().size());
  for (const auto& c : registry()) out.push_back(run_check(c, tables, bound));
  return out;
}

std::vector<CheckResult> run_all(std::size_t bound) { return run_all(TableSet::build(bound), bound); }

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed(); });
}

std::string to_json_line(const CheckResult& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["bound"] = r.bound;
  j["status"] = r.passed() ? "pass" : "fail";
  if (r.failure) {
    j["n"] = r.failure->n;
    j["lhs"] = r.failure->lhs.get_str();
    j["rhs"] = r.failure->rhs.get_str();
  }
  return j.dump();
}

std::string to_plain_line(const CheckResult& r) {
  std::ostringstream os;
  if (r.passed()) {
    os << "PASS " << r.name << " n<=" << r.bound;
  } else {
    os << "FAIL " << r.name << " n<=" << r.bound << " at n=" << r.failure->n
       << " lhs=" << r.failure->lhs.get_str() << " rhs=" << r.failure->rhs.get_str() << " ["
       << r.failure->detail << "]";
  }
  return os.str();
}

}  // namespace partrec::verify
