#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace gdbw {

// Exact arbitrary-precision integer.
using BigInt = mpz_class;

inline std::string str(const BigInt& x) { return x.get_str(); }

// Moebius function. n >= 1.
int mobius(std::int64_t n);

// Euler's totient, phi(1) = 1. n >= 1.
std::int64_t euler_phi(std::int64_t n);

// Divisors of n in increasing order. n >= 1.
std::vector<std::int64_t> divisors(std::int64_t n);

// Deterministic trial-division primality test for desk-scale inputs.
bool is_prime(std::int64_t n);

// Multiplicative order of a modulo m; requires gcd(a, m) = 1. Order is 1
// for m = 1 (trivial group).
std::int64_t multiplicative_order(std::int64_t a, std::int64_t m);

BigInt factorial(std::int64_t n);

BigInt pow_int(const BigInt& base, std::uint64_t exp);

// Number of aperiodic necklaces of length n over a k-letter alphabet:
// (1/n) sum_{d|n} mu(n/d) k^d.
BigInt count_lyn(std::int64_t k, std::int64_t n);

// Number of necklaces of length n over a k-letter alphabet:
// (1/n) sum_{d|n} phi(n/d) k^d.
BigInt count_neck(std::int64_t k, std::int64_t n);

}  // namespace gdbw
