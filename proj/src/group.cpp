#include "gdbw/group.hpp"

#include <algorithm>
#include <numeric>

#include "gdbw/errors.hpp"
#include "gdbw/gfp.hpp"
#include "gdbw/snf.hpp"

namespace gdbw {

namespace {

std::int64_t to_i64(const BigInt& x, const char* what) {
    if (!x.fits_slong_p()) raise(errc::out_of_range, std::string(what) + " exceeds 64-bit range");
    return x.get_si();
}

std::map<std::int64_t, int> factorize(std::int64_t n) {
    std::map<std::int64_t, int> f;
    for (std::int64_t p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            ++f[p];
            n /= p;
        }
    if (n > 1) ++f[n];
    return f;
}

}  // namespace

AbelianGroup AbelianGroup::from_factors(const std::vector<BigInt>& factors) {
    // Primary decomposition, then the j-th invariant factor (from the top)
    // collects the j-th largest exponent of every prime.
    std::map<std::int64_t, std::vector<int>> primary;  // prime -> exponents, descending
    for (const BigInt& f : factors) {
        if (f < 1) raise(errc::out_of_range, "cyclic factors must be >= 1");
        if (f == 1) continue;
        for (auto [p, e] : factorize(to_i64(f, "cyclic factor"))) primary[p].push_back(e);
    }
    std::size_t chain_length = 0;
    for (auto& [p, exps] : primary) {
        std::sort(exps.begin(), exps.end(), std::greater<>());
        chain_length = std::max(chain_length, exps.size());
    }
    std::vector<BigInt> chain(chain_length, 1);
    for (const auto& [p, exps] : primary)
        for (std::size_t j = 0; j < exps.size(); ++j) chain[j] *= pow_int(p, static_cast<std::uint64_t>(exps[j]));
    std::reverse(chain.begin(), chain.end());
    AbelianGroup g;
    g.factors_ = std::move(chain);
    return g;
}

AbelianGroup AbelianGroup::cyclic(const BigInt& n) { return from_factors({n}); }

BigInt AbelianGroup::order() const {
    BigInt o = 1;
    for (const BigInt& f : factors_) o *= f;
    return o;
}

std::string AbelianGroup::str() const {
    if (factors_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += " + ";
        s += "Z_" + gdbw::str(factors_[i]);
    }
    return s;
}

std::map<std::int64_t, BigInt> AbelianGroup::element_order_histogram() const {
    // Elements of order dividing m: prod_i gcd(d_i, m). Moebius inversion
    // over the divisors of the exponent gives exact order counts.
    std::int64_t exponent = factors_.empty() ? 1 : to_i64(factors_.back(), "group exponent");
    auto dividing = [&](std::int64_t m) {
        BigInt c = 1;
        for (const BigInt& f : factors_) c *= std::gcd(to_i64(f, "invariant factor"), m);
        return c;
    };
    std::map<std::int64_t, BigInt> hist;
    for (std::int64_t m : divisors(exponent)) {
        BigInt exact = 0;
        for (std::int64_t e : divisors(m)) exact += mobius(m / e) * dividing(e);
        if (exact != 0) hist[m] = exact;
    }
    return hist;
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
    std::vector<BigInt> all = a.invariant_factors();
    all.insert(all.end(), b.invariant_factors().begin(), b.invariant_factors().end());
    return AbelianGroup::from_factors(all);
}

AbelianGroup sandpile_group(const GdbGraph& g) {
    const SnfResult snf = smith_normal_form(reduced_laplacian(g));
    std::vector<BigInt> factors;
    for (const BigInt& d : snf.invariant_factors) {
        if (d == 0)
            raise(errc::not_strongly_connected,
                  "reduced Laplacian is singular; graph is not strongly connected");
        factors.push_back(d);
    }
    return AbelianGroup::from_factors(factors);
}

AbelianGroup reutenauer_group_structure(std::int64_t p, std::int64_t n) {
    if (!is_prime(p)) raise(errc::not_prime, std::to_string(p) + " is not prime");
    return direct_sum(sandpile_group(GdbGraph(p, n)), AbelianGroup::cyclic(p - 1));
}

AbelianGroup sandpile_prime_power(std::int64_t p, std::int64_t d) {
    if (!is_prime(p)) raise(errc::not_prime, std::to_string(p) + " is not prime");
    if (d < 1) raise(errc::out_of_range, "exponent must be >= 1");
    if (pow_int(p, static_cast<std::uint64_t>(d)) > (std::int64_t{1} << 20))
        raise(errc::bound_exceeded, "p^d exceeds the desk-scale bound");
    std::vector<BigInt> factors;
    const std::int64_t square = (p - 1) * (p - 1);
    for (std::int64_t i = 1; i <= d - 1; ++i) {
        const BigInt copies = pow_int(p, static_cast<std::uint64_t>(d - 1 - i)) * square;
        const BigInt cyc = pow_int(p, static_cast<std::uint64_t>(i));
        for (BigInt c = 0; c < copies; ++c) factors.push_back(cyc);
    }
    for (std::int64_t c = 0; c < p - 2; ++c) factors.push_back(pow_int(p, static_cast<std::uint64_t>(d)));
    return AbelianGroup::from_factors(factors);
}

AbelianGroup levine_group(std::int64_t d) {
    if (d < 1 || d > 20) raise(errc::out_of_range, "order must be in [1, 20]");
    std::vector<BigInt> factors;
    for (std::int64_t i = 1; i <= d - 1; ++i) {
        const std::int64_t copies = std::int64_t{1} << (d - 1 - i);
        for (std::int64_t c = 0; c < copies; ++c) factors.push_back(pow_int(2, static_cast<std::uint64_t>(i)));
    }
    return AbelianGroup::from_factors(factors);
}

BigInt count_gdb_words_prime(std::int64_t p, std::int64_t length) {
    if (!is_prime(p)) raise(errc::not_prime, std::to_string(p) + " is not prime");
    if (length < 1 || length % p != 0)
        raise(errc::divisibility, "length must be a multiple of p");
    const std::int64_t n = length / p;
    if (n < 2) raise(errc::out_of_range, "formula requires length / p >= 2");
    BigInt numerator = pow_int(factorial(p - 1), static_cast<std::uint64_t>(n)) * count_normal_elements(p, n);
    const BigInt denominator = BigInt(p - 1) * n;
    if (numerator % denominator != 0) raise(errc::out_of_range, "count formula did not divide exactly");
    return numerator / denominator;
}

}  // namespace gdbw
