#ifndef PARTREC_BIGINT_HPP
#define PARTREC_BIGINT_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace partrec {

using BigInt = mpz_class;

inline std::string to_string(const BigInt& x) { return x.get_str(); }

// Low 64 bits of |x|, used for wrapping checksums.
inline std::uint64_t low_bits(const BigInt& x) {
  if (x == 0) return 0;
  BigInt r;
  mpz_abs(r.get_mpz_t(), x.get_mpz_t());
  mpz_fdiv_r_2exp(r.get_mpz_t(), r.get_mpz_t(), 64);
  std::uint64_t out = 0;
  std::size_t count = 0;
  mpz_export(&out, &count, -1, sizeof(out), 0, 0, r.get_mpz_t());
  return count == 0 ? 0 : out;
}

}  // namespace partrec

#endif  // PARTREC_BIGINT_HPP
