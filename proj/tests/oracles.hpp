#pragma once

// Test-only reference computations, kept independent of the library's code paths.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>

namespace machin::testing {

// pi to 1000 decimals, from an independent multiprecision package.
inline const std::string kPi1000 =
    "3."
    "1415926535897932384626433832795028841971693993751058209749445923078164062862089986280348253421170679"
    "8214808651328230664709384460955058223172535940812848111745028410270193852110555964462294895493038196"
    "4428810975665933446128475648233786783165271201909145648566923460348610454326648213393607260249141273"
    "7245870066063155881748815209209628292540917153643678925903600113305305488204665213841469519415116094"
    "3305727036575959195309218611738193261179310511854807446237996274956735188575272489122793818301194912"
    "9833673362440656643086021394946395224737190702179860943702770539217176293176752384674818467669405132"
    "0005681271452635608277857713427577896091736371787214684409012249534301465495853710507922796892589235"
    "4201995611212902196086403441815981362977477130996051870721134999999837297804995105973173281609631859"
    "5024459455346908302642522308253344685035261931188171010003137838752886587533208381420617177669147303"
    "5982534904287554687311595628638823537875937519577818577805321712268066130019278766111959092164201989";

// floor(n/d) by the definition n = q*d + r, 0 <= r < d, on machine integers.
inline std::int64_t floor_div_ref(std::int64_t n, std::int64_t d) {
  std::int64_t q = n / d;
  if (q * d > n) --q;
  return q;
}

// Least K >= 0 with (2K+3) * q^(2K+3) > bound, evaluating every power from scratch.
inline std::uint64_t maclaurin_length_ref(const mpz_class& q, const mpz_class& bound) {
  for (std::uint64_t k = 0;; ++k) {
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), q.get_mpz_t(), 2 * k + 3);
    if (p * (2 * k + 3) > bound) return k;
  }
}

inline bool maclaurin_condition(const mpz_class& q, std::uint64_t k, const mpz_class& bound) {
  mpz_class p;
  mpz_pow_ui(p.get_mpz_t(), q.get_mpz_t(), 2 * k + 3);
  return p * (2 * k + 3) > bound;
}

// Uniform random integer with up to `bits` bits, random sign.
inline mpz_class random_int(std::mt19937_64& rng, unsigned bits, bool allow_negative = true) {
  mpz_class x = 0;
  for (unsigned done = 0; done < bits; done += 32) {
    x <<= 32;
    x += static_cast<unsigned long>(rng() & 0xffffffffu);
  }
  x >>= (32 - bits % 32) % 32;
  if (allow_negative && (rng() & 1)) x = -x;
  return x;
}

}  // namespace machin::testing
