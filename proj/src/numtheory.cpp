#include "gdbw/numtheory.hpp"

#include <cassert>
#include <numeric>

#include "gdbw/errors.hpp"

namespace gdbw {

int mobius(std::int64_t n) {
    if (n < 1) raise(errc::out_of_range, "mobius requires n >= 1");
    int primes = 0;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            ++primes;
        }
    }
    if (n > 1) ++primes;
    return (primes % 2 == 0) ? 1 : -1;
}

std::int64_t euler_phi(std::int64_t n) {
    if (n < 1) raise(errc::out_of_range, "euler_phi requires n >= 1");
    std::int64_t result = n;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    if (n < 1) raise(errc::out_of_range, "divisors requires n >= 1");
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

std::int64_t multiplicative_order(std::int64_t a, std::int64_t m) {
    if (m < 1) raise(errc::out_of_range, "multiplicative_order requires m >= 1");
    if (m == 1) return 1;
    a %= m;
    if (a < 0) a += m;
    if (std::gcd(a, m) != 1)
        raise(errc::out_of_range, "multiplicative_order requires gcd(a, m) = 1");
    std::int64_t ord = 1;
    std::int64_t x = a;
    while (x != 1) {
        x = x * a % m;
        ++ord;
    }
    return ord;
}

BigInt factorial(std::int64_t n) {
    if (n < 0) raise(errc::out_of_range, "factorial requires n >= 0");
    BigInt r = 1;
    for (std::int64_t i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt pow_int(const BigInt& base, std::uint64_t exp) {
    BigInt r = 1, b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

BigInt count_lyn(std::int64_t k, std::int64_t n) {
    if (k < 2) raise(errc::out_of_range, "count_lyn requires k >= 2");
    if (n < 1) raise(errc::out_of_range, "count_lyn requires n >= 1");
    BigInt sum = 0;
    for (std::int64_t d : divisors(n)) sum += mobius(n / d) * pow_int(k, static_cast<std::uint64_t>(d));
    assert(sum % n == 0);
    return sum / n;
}

BigInt count_neck(std::int64_t k, std::int64_t n) {
    if (k < 2) raise(errc::out_of_range, "count_neck requires k >= 2");
    if (n < 1) raise(errc::out_of_range, "count_neck requires n >= 1");
    BigInt sum = 0;
    for (std::int64_t d : divisors(n)) sum += euler_phi(n / d) * pow_int(k, static_cast<std::uint64_t>(d));
    assert(sum % n == 0);
    return sum / n;
}

}  // namespace gdbw
