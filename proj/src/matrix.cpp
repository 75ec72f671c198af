#include "gdbw/matrix.hpp"

#include "gdbw/errors.hpp"

namespace gdbw {

BigInt bareiss_determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) raise(errc::dimension_mismatch, "determinant requires a square matrix");
    const Eigen::Index n = m.rows();
    if (n == 0) return 1;

    IntMatrix a = m;
    BigInt prev = 1;
    int sign = 1;
    for (Eigen::Index t = 0; t + 1 < n; ++t) {
        if (a(t, t) == 0) {
            Eigen::Index pivot = -1;
            for (Eigen::Index i = t + 1; i < n; ++i)
                if (a(i, t) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return 0;
            a.row(t).swap(a.row(pivot));
            sign = -sign;
        }
        for (Eigen::Index i = t + 1; i < n; ++i) {
            for (Eigen::Index j = t + 1; j < n; ++j) {
                BigInt num = a(t, t) * a(i, j) - a(i, t) * a(t, j);
                a(i, j) = num / prev;  // exact by Bareiss' identity
            }
            a(i, t) = 0;
        }
        prev = a(t, t);
    }
    return sign * a(n - 1, n - 1);
}

}  // namespace gdbw
