#pragma once

#include <vector>

#include "gdbw/matrix.hpp"

namespace gdbw {

// Diagonal of the Smith Normal Form: d_1 | d_2 | ... with zeros trailing.
struct SnfResult {
    std::vector<BigInt> invariant_factors;  // length min(rows, cols)

    bool operator==(const SnfResult&) const = default;
};

// Full decomposition u * a * v = d with u, v unimodular.
struct SnfDecomposition {
    IntMatrix d;
    IntMatrix u;
    IntMatrix v;

    SnfResult diagonal() const;
};

// Elimination with gcd pivoting (Bezout-style row/column operations) over
// exact integers.
SnfDecomposition smith_decomposition(IntMatrix a);

SnfResult smith_normal_form(const IntMatrix& a);

}  // namespace gdbw
