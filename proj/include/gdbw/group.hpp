#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gdbw/gdb_graph.hpp"
#include "gdbw/numtheory.hpp"

namespace gdbw {

// Finite abelian group in canonical invariant-factor form: factors >= 2,
// each dividing the next; the trivial group is the empty list.
class AbelianGroup {
public:
    AbelianGroup() = default;  // trivial

    // Canonicalizes an arbitrary list of cyclic orders (>= 1; ones dropped)
    // via primary decomposition.
    static AbelianGroup from_factors(const std::vector<BigInt>& factors);

    static AbelianGroup cyclic(const BigInt& n);

    const std::vector<BigInt>& invariant_factors() const { return factors_; }
    BigInt order() const;
    bool trivial() const { return factors_.empty(); }

    // e.g. "Z_2 + Z_4"; "0" for the trivial group.
    std::string str() const;

    // Count of elements per multiplicative order.
    std::map<std::int64_t, BigInt> element_order_histogram() const;

    bool operator==(const AbelianGroup&) const = default;

private:
    std::vector<BigInt> factors_;
};

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

inline BigInt group_order(const AbelianGroup& g) { return g.order(); }

inline bool groups_isomorphic(const AbelianGroup& a, const AbelianGroup& b) { return a == b; }

// Sandpile group of an Eulerian graph: cyclic factors of the reduced
// Laplacian's nonunit invariant factors. A zero factor means the graph is
// not strongly connected and raises NotStronglyConnected.
AbelianGroup sandpile_group(const GdbGraph& g);

// K(DB(p, n)) + Z_{p-1}, the Reutenauer group of invertible circulant
// classes; its order is Phi_p(n)/n for n >= 2.
AbelianGroup reutenauer_group_structure(std::int64_t p, std::int64_t n);

// Closed form of K(DB(p, p^d)):
// [ sum_{i=1}^{d-1} (Z_{p^i})^{p^{d-1-i} (p-1)^2} ] + (Z_{p^d})^{p-2}.
AbelianGroup sandpile_prime_power(std::int64_t p, std::int64_t d);

// Binary special case K(DB(2, 2^d)) = sum_{i=1}^{d-1} (Z_{2^i})^{2^{d-1-i}}.
AbelianGroup levine_group(std::int64_t d);

// Prime-alphabet counting formula ((p-1)!)^n / (p-1) * Phi_p(n) / n for
// words of the given length = p * n, n >= 2.
BigInt count_gdb_words_prime(std::int64_t p, std::int64_t length);

}  // namespace gdbw
