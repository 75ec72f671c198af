#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gdbw/config.hpp"

namespace gdbw {

struct Check {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass;
};

struct VerificationReport {
    std::vector<Check> checks;

    bool overall() const;
    void add(std::string name, std::string expected, std::string actual);
};

// Cross-route count checks for k = 2 and k = 3, n = 2..max_n: the
// spanning-tree formula vs Hamiltonian-cycle enumeration (where it fits the
// bound) vs the prime-alphabet totient formula; plus Phi_p(n) vs the
// brute-force invertible-circulant count.
VerificationReport verify_tables(std::int64_t max_n, std::uint64_t bound = kDefaultEnumerationBound);

// Counts that the correspondence between generalized de Bruijn words of
// length p*n and invertible necklaces of length n predicts; for p = 2 and
// n a power of two also the odd-weight necklace count.
VerificationReport verify_bijection(std::int64_t p, std::int64_t n,
                                    std::uint64_t bound = kDefaultEnumerationBound);

// For n = 1..max_n, compares the exhaustive invertibility scan with the
// predicate "n is a power of p or a p-rooted prime".
VerificationReport verify_dichotomy(std::int64_t p, std::int64_t max_n,
                                    std::uint64_t bound = kDefaultEnumerationBound);

}  // namespace gdbw
