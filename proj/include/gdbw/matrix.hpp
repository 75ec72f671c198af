#pragma once

#include <Eigen/Dense>

#include "gdbw/numtheory.hpp"

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
    using Real = mpz_class;
    using NonInteger = mpz_class;
    using Nested = mpz_class;

    static Real epsilon() { return 0; }
    static Real dummy_precision() { return 0; }
    static int digits10() { return 0; }

    enum {
        IsInteger = 1,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 150,
        MulCost = 100,
    };
};

}  // namespace Eigen

namespace gdbw {

// Exact-integer dense matrix; entries never overflow.
using IntMatrix = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>;

// Determinant by fraction-free (Bareiss) elimination. The empty 0x0 matrix
// has determinant 1.
BigInt bareiss_determinant(const IntMatrix& m);

}  // namespace gdbw
