#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "gdbw/config.hpp"
#include "gdbw/numtheory.hpp"
#include "gdbw/word.hpp"

namespace gdbw {

using ModMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

// Dense matrix of residues over GF(p), p prime.
class GfpMatrix {
public:
    GfpMatrix(std::int64_t p, ModMatrix entries);

    std::int64_t modulus() const { return p_; }
    Eigen::Index rows() const { return entries_.rows(); }
    Eigen::Index cols() const { return entries_.cols(); }
    std::int64_t operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }
    const ModMatrix& entries() const { return entries_; }

    static GfpMatrix identity(std::int64_t p, Eigen::Index n);

    // Matrix product mod p; raises ModulusMismatch / DimensionMismatch.
    GfpMatrix mul(const GfpMatrix& rhs) const;

    bool operator==(const GfpMatrix&) const = default;

private:
    std::int64_t p_;
    ModMatrix entries_;
};

// Circulant matrix of w: row i is sigma^i(w). Digits must lie below p.
GfpMatrix circulant(const Word& w, std::int64_t p);

// Determinant in GF(p) via modular Gaussian elimination (Fermat inverses).
std::int64_t det_mod_p(const GfpMatrix& m);

// Row rank over GF(p).
Eigen::Index rank_mod_p(const GfpMatrix& m);

// A necklace is invertible iff any (hence every) of its circulant matrices
// is nonsingular mod p.
bool is_invertible_necklace(const Necklace& neck, std::int64_t p);

// Conjugacy class of invertible circulant matrices over GF(p): an element
// of the Reutenauer group, keyed by the canonical necklace representative.
class CirculantClass {
public:
    CirculantClass(const Necklace& rep, std::int64_t p);

    const Necklace& representative() const { return rep_; }
    std::int64_t modulus() const { return p_; }
    std::size_t size() const { return rep_.size(); }

    friend bool operator==(const CirculantClass& a, const CirculantClass& b) {
        return a.p_ == b.p_ && a.rep_ == b.rep_;
    }

private:
    Necklace rep_;
    std::int64_t p_;
};

// Group law [u]*[v] = [w] with CM_u * CM_v = CM_w; independent of the
// representatives chosen.
CirculantClass reutenauer_mul(const CirculantClass& a, const CirculantClass& b);

// Action on necklaces: the necklace of CM_w * v^T.
Necklace reutenauer_act(const CirculantClass& a, const Necklace& v);

// Tr CM_[w] = wt([w]) mod p; nonzero for every invertible class.
std::int64_t trace_class(const CirculantClass& a);

// All invertible necklaces of length n over p letters, canonical order.
std::vector<Necklace> enumerate_invertible_necklaces(std::int64_t p, std::int64_t n,
                                                     std::uint64_t bound = kDefaultEnumerationBound);

// Generalized Euler totient Phi_p(n): the number of normal elements of the
// degree-n extension field of GF(p), equivalently the number of invertible
// n x n circulants over GF(p) (n >= 2). Computed by Hensel's product
// formula; the tabled convention Phi_p(1) = 1 is kept for n = 1 even though
// the circulant count at length 1 is p - 1.
BigInt count_normal_elements(std::int64_t p, std::int64_t n);

// q is p-rooted when p generates the multiplicative group mod q.
bool is_p_rooted(std::int64_t q, std::int64_t p);

struct DichotomyResult {
    bool all_invertible;
    std::optional<Necklace> counterexample;  // aperiodic, weight != 0 mod p, singular
};

// Scans every aperiodic necklace of length n with nonzero weight mod p for
// a singular circulant.
DichotomyResult verify_invertibility_dichotomy(std::int64_t p, std::int64_t n,
                                               std::uint64_t bound = kDefaultEnumerationBound);

// Exact power-of-p test; true also for n = 1.
bool is_power_of(std::int64_t n, std::int64_t p);

}  // namespace gdbw
