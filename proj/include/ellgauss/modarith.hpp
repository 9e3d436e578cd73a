#pragma once

// Small-modulus arithmetic helpers. Moduli are primes below 2^63.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "ellgauss/error.hpp"

namespace ellgauss::modp {

using u64 = std::uint64_t;

inline u64 mul(u64 a, u64 b, u64 p) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p);
}

inline u64 add(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}

inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

inline u64 pow(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

// p must be prime and a nonzero mod p.
inline u64 inv(u64 a, u64 p) {
  a %= p;
  if (a == 0) throw Error(ErrorKind::InvalidArgument, "inverse of zero");
  return pow(a, p - 2, p);
}

inline u64 reduce(const mpz_class& z, u64 p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

inline u64 reduce(long long z, u64 p) {
  long long r = z % static_cast<long long>(p);
  return static_cast<u64>(r < 0 ? r + static_cast<long long>(p) : r);
}

// Throws DenominatorDivisible when p divides the denominator.
inline u64 reduce(const mpq_class& q, u64 p) {
  u64 den = reduce(q.get_den(), p);
  if (den == 0)
    throw Error(ErrorKind::DenominatorDivisible,
                "denominator divisible by " + std::to_string(p));
  return mul(reduce(q.get_num(), p), inv(den, p), p);
}

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<u64> primes_up_to(u64 n) {
  std::vector<bool> sieve(n + 1, true);
  std::vector<u64> out;
  for (u64 i = 2; i <= n; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= n; j += i) sieve[j] = false;
  }
  return out;
}

inline u64 to_u64(const mpz_class& z) {
  if (z < 0 || !z.fits_ulong_p())
    throw Error(ErrorKind::InvalidArgument, "modulus out of machine range");
  return z.get_ui();
}

}  // namespace ellgauss::modp
