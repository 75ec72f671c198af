#include "gdbw/gfp.hpp"

#include <algorithm>

#include "gdbw/errors.hpp"

namespace gdbw {

namespace {

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
    std::int64_t r = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

std::int64_t inv_mod_prime(std::int64_t a, std::int64_t p) { return pow_mod(a, p - 2, p); }

void require_prime(std::int64_t p) {
    if (!is_prime(p)) raise(errc::not_prime, std::to_string(p) + " is not prime");
}

// Keeps every product below p^2 and row sums below n * p^2 inside int64.
constexpr std::int64_t kMaxModulus = 46337;

void require_modulus(std::int64_t p) {
    require_prime(p);
    if (p > kMaxModulus) raise(errc::out_of_range, "modulus too large for exact int64 arithmetic");
}

}  // namespace

GfpMatrix::GfpMatrix(std::int64_t p, ModMatrix entries) : p_(p), entries_(std::move(entries)) {
    require_modulus(p_);
    for (Eigen::Index i = 0; i < entries_.rows(); ++i)
        for (Eigen::Index j = 0; j < entries_.cols(); ++j)
            if (entries_(i, j) < 0 || entries_(i, j) >= p_)
                raise(errc::digit_out_of_range, "matrix entry not reduced mod p");
}

GfpMatrix GfpMatrix::identity(std::int64_t p, Eigen::Index n) {
    return GfpMatrix(p, ModMatrix::Identity(n, n));
}

GfpMatrix GfpMatrix::mul(const GfpMatrix& rhs) const {
    if (p_ != rhs.p_) raise(errc::modulus_mismatch, "matrices live over different prime fields");
    if (cols() != rhs.rows()) raise(errc::dimension_mismatch, "inner dimensions disagree");
    // Entries stay below n * (p-1)^2, well inside int64 at desk scale.
    ModMatrix prod = entries_ * rhs.entries_;
    return GfpMatrix(p_, prod.unaryExpr([&](std::int64_t x) { return x % p_; }));
}

GfpMatrix circulant(const Word& w, std::int64_t p) {
    require_modulus(p);
    const std::size_t n = w.size();
    for (std::uint8_t d : w.digits())
        if (d >= p) raise(errc::digit_out_of_range, "digit " + std::to_string(d) + " not below modulus " + std::to_string(p));
    ModMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = w[(j + n - i) % n];
    return GfpMatrix(p, std::move(m));
}

namespace {

// Elimination used by both the determinant and the rank.
struct EchelonResult {
    std::int64_t det;
    Eigen::Index rank;
};

EchelonResult echelon(const GfpMatrix& m) {
    const std::int64_t p = m.modulus();
    ModMatrix a = m.entries();
    const Eigen::Index rows = a.rows(), cols = a.cols();
    std::int64_t det = 1 % p;
    Eigen::Index rank = 0;
    for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = rank; i < rows; ++i)
            if (a(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) {
            det = 0;
            continue;
        }
        if (pivot != rank) {
            a.row(rank).swap(a.row(pivot));
            det = (p - det) % p;
        }
        det = det * a(rank, col) % p;
        const std::int64_t inv = inv_mod_prime(a(rank, col), p);
        for (Eigen::Index i = rank + 1; i < rows; ++i) {
            if (a(i, col) == 0) continue;
            const std::int64_t f = a(i, col) * inv % p;
            for (Eigen::Index j = col; j < cols; ++j)
                a(i, j) = ((a(i, j) - f * a(rank, j)) % p + p) % p;
        }
        ++rank;
    }
    if (rank < std::min(rows, cols)) det = 0;
    return {det, rank};
}

}  // namespace

std::int64_t det_mod_p(const GfpMatrix& m) {
    if (m.rows() != m.cols()) raise(errc::dimension_mismatch, "determinant requires a square matrix");
    if (m.rows() == 0) return 1 % m.modulus();
    const EchelonResult e = echelon(m);
    return e.rank == m.rows() ? e.det : 0;
}

Eigen::Index rank_mod_p(const GfpMatrix& m) { return echelon(m).rank; }

bool is_invertible_necklace(const Necklace& neck, std::int64_t p) {
    return det_mod_p(circulant(neck.canonical(), p)) != 0;
}

CirculantClass::CirculantClass(const Necklace& rep, std::int64_t p) : rep_(rep), p_(p) {
    if (!is_invertible_necklace(rep_, p_))
        raise(errc::not_invertible, "necklace " + rep_.str() + " has a singular circulant mod " + std::to_string(p_));
}

CirculantClass reutenauer_mul(const CirculantClass& a, const CirculantClass& b) {
    if (a.modulus() != b.modulus()) raise(errc::modulus_mismatch, "classes live over different prime fields");
    if (a.size() != b.size()) raise(errc::dimension_mismatch, "classes have different lengths");
    const std::int64_t p = a.modulus();
    const std::size_t n = a.size();
    const Word& u = a.representative().canonical();
    const Word& v = b.representative().canonical();
    // First row of CM_u * CM_v: the cyclic convolution of u and v.
    std::vector<std::uint8_t> row(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        std::int64_t acc = 0;
        for (std::size_t i = 0; i < n; ++i) acc += static_cast<std::int64_t>(u[i]) * v[(j + n - i) % n];
        row[j] = static_cast<std::uint8_t>(acc % p);
    }
    return CirculantClass(Necklace(Word(std::move(row), u.alphabet())), p);
}

Necklace reutenauer_act(const CirculantClass& a, const Necklace& v) {
    if (a.size() != v.size()) raise(errc::dimension_mismatch, "class and necklace have different lengths");
    const std::int64_t p = a.modulus();
    const std::size_t n = a.size();
    const Word& w = a.representative().canonical();
    const Word& x = v.canonical();
    for (std::uint8_t d : x.digits())
        if (d >= p) raise(errc::digit_out_of_range, "necklace digit not below modulus");
    std::vector<std::uint8_t> out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t acc = 0;
        for (std::size_t j = 0; j < n; ++j) acc += static_cast<std::int64_t>(w[(j + n - i) % n]) * x[j];
        out[i] = static_cast<std::uint8_t>(acc % p);
    }
    return Necklace(Word(std::move(out), x.alphabet()));
}

std::int64_t trace_class(const CirculantClass& a) {
    return a.representative().weight() % a.modulus();
}

std::vector<Necklace> enumerate_invertible_necklaces(std::int64_t p, std::int64_t n, std::uint64_t bound) {
    require_prime(p);
    std::vector<Necklace> out;
    for (const Necklace& neck : enumerate_necklaces(static_cast<int>(p), n, /*aperiodic_only=*/false, bound))
        if (is_invertible_necklace(neck, p)) out.push_back(neck);
    return out;
}

BigInt count_normal_elements(std::int64_t p, std::int64_t n) {
    require_prime(p);
    if (n < 1) raise(errc::out_of_range, "count_normal_elements requires n >= 1");
    if (n == 1) return 1;  // tabled convention, see header
    std::int64_t reduced = n;
    while (reduced % p == 0) reduced /= p;
    // Phi_p(n) = p^(n - n') * prod_{d | n'} (p^ord_d(p) - 1)^(phi(d) / ord_d(p)),
    // n' = n / (largest power of p dividing n).
    BigInt phi = pow_int(p, static_cast<std::uint64_t>(n - reduced));
    for (std::int64_t d : divisors(reduced)) {
        const std::int64_t ord = multiplicative_order(p, d);
        const std::int64_t exponent = euler_phi(d) / ord;
        phi *= pow_int(pow_int(p, static_cast<std::uint64_t>(ord)) - 1, static_cast<std::uint64_t>(exponent));
    }
    return phi;
}

bool is_p_rooted(std::int64_t q, std::int64_t p) {
    require_prime(q);
    if (p % q == 0) raise(errc::out_of_range, "p must be nonzero mod q");
    return multiplicative_order(p, q) == q - 1;
}

DichotomyResult verify_invertibility_dichotomy(std::int64_t p, std::int64_t n, std::uint64_t bound) {
    require_prime(p);
    for (const Necklace& neck : enumerate_necklaces(static_cast<int>(p), n, /*aperiodic_only=*/true, bound)) {
        if (neck.weight() % p == 0) continue;
        if (!is_invertible_necklace(neck, p)) return {false, neck};
    }
    return {true, std::nullopt};
}

bool is_power_of(std::int64_t n, std::int64_t p) {
    if (n < 1) return false;
    while (n % p == 0) n /= p;
    return n == 1;
}

}  // namespace gdbw
