#ifndef PARTREC_SEQUENCES_HPP
#define PARTREC_SEQUENCES_HPP

#include <cstdint>

#include <partrec/exponent_stream.hpp>

namespace partrec {

// Signed exponent streams for the theta-like series that appear in the
// partition recurrences. Each generator returns every term with exponent
// <= bound. Bilateral families walk j = 0, 1, -1, 2, -2, ... and stop once
// both directions have passed the bound.

/// Σ_{k∈Z} (-1)^k x^{k(3k-1)/2}: 0:+, 1:-, 2:-, 5:+, 7:+, 12:-, 15:-, ...
ExponentStream gen_pentagonal(std::int64_t bound);

/// j-th generalized pentagonal number via the closed form
/// (3/8)j² + ((3 - (-1)^j)/8) j + (1 - (-1)^j)/16, j >= 0.
std::int64_t generalized_pentagonal(std::int64_t j);

/// Σ_{n>=0} x^{n(n+1)/2} with unit coefficients.
ExponentStream gen_triangular(std::int64_t bound);

enum class Parity { even, odd };

/// i-th even (resp. odd) triangular number, 1-based:
///   even: (2i-1)(2i-1+(-1)^i)/2  -> 0, 6, 10, 28, 36, ...
///   odd:  (2i-1)(2i-1-(-1)^i)/2  -> 1, 3, 15, 21, 45, ...
std::int64_t parity_triangular(Parity parity, std::int64_t i);

/// Triangular numbers of one parity, unit coefficients.
ExponentStream gen_triangular_parity(Parity parity, std::int64_t bound);

/// 1 + Σ_{j>=1} (-1)^j (x^{j²} + x^{2j²}).
ExponentStream gen_squares_and_doubles(std::int64_t bound);

/// φ(-x) = 1 + 2 Σ_{j>=1} (-1)^j x^{j²}.
ExponentStream gen_phi_signed(std::int64_t bound);

/// φ(x) = 1 + 2 Σ_{j>=1} x^{j²}.
ExponentStream gen_phi(std::int64_t bound);

/// Σ_{j∈Z} (-1)^j x^{j(2j-1)}: the triangular shifts with the sign pattern
/// of Ewell's recurrence, 0:+, 1:-, 3:-, 6:+, 10:+, 15:-, ...
ExponentStream gen_ewell(std::int64_t bound);

/// Σ_{j∈Z} (-1)^j x^{j(5j-3)/2} (generalized heptagonal numbers).
ExponentStream gen_heptagonal(std::int64_t bound);

/// Σ_{j∈Z} (-1)^j x^{j(3j-2)} (generalized octagonal numbers).
ExponentStream gen_octagonal(std::int64_t bound);

enum class RsFamily { r_even, r_odd, s_even, s_odd };

/// Closed form of one r/s family at index i ∈ Z:
///   r_even 60i²-8i, r_odd 60i²+52i+11, s_even 60i²+32i+4, s_odd 60i²-28i+3.
std::int64_t rs_value(RsFamily family, std::int64_t i);

/// All values of one r/s family up to `bound`, each with coefficient +1.
///
/// The signs of the quintuple-product series
///   Σ_{j∈Z} (-1)^j (x^{15j²-4j} + x^{15j²+14j+3})
/// are not carried here. Splitting that series by parity of the exponent
/// gives  +r_even, -s_even  on even exponents and  -r_odd, +s_odd  on odd
/// exponents; see rs_quintuple_stream().
ExponentStream gen_thm3_rs(RsFamily family, std::int64_t bound);

/// The four r/s families recombined with the signs above.
ExponentStream rs_quintuple_stream(std::int64_t bound);

/// Parity split of the pentagonal series:
///   odd:  Σ_{j∈Z} (x^{24j²+26j+7} - x^{24j²-10j+1})
///   even: Σ_{j∈Z} (x^{24j²+2j}    - x^{24j²+14j+2})
ExponentStream gen_lemma2_exponents(Parity part, std::int64_t bound);

bool is_triangular(std::int64_t n);

}  // namespace partrec

#endif  // PARTREC_SEQUENCES_HPP
