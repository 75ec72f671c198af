#include "gdbw/snf.hpp"

#include <algorithm>

namespace gdbw {

namespace {

BigInt abs_val(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

}  // namespace

SnfResult SnfDecomposition::diagonal() const {
    const Eigen::Index k = std::min(d.rows(), d.cols());
    SnfResult r;
    r.invariant_factors.reserve(static_cast<std::size_t>(k));
    for (Eigen::Index i = 0; i < k; ++i) r.invariant_factors.push_back(d(i, i));
    return r;
}

SnfDecomposition smith_decomposition(IntMatrix a) {
    const Eigen::Index rows = a.rows();
    const Eigen::Index cols = a.cols();
    IntMatrix u = IntMatrix::Identity(rows, rows);
    IntMatrix v = IntMatrix::Identity(cols, cols);

    const Eigen::Index steps = std::min(rows, cols);
    for (Eigen::Index t = 0; t < steps; ++t) {
        // Smallest nonzero entry of the trailing block as pivot.
        Eigen::Index pi = -1, pj = -1;
        for (Eigen::Index i = t; i < rows; ++i)
            for (Eigen::Index j = t; j < cols; ++j)
                if (a(i, j) != 0 && (pi < 0 || abs_val(a(i, j)) < abs_val(a(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;  // trailing block is zero; remaining factors are 0
        if (pi != t) {
            a.row(t).swap(a.row(pi));
            u.row(t).swap(u.row(pi));
        }
        if (pj != t) {
            a.col(t).swap(a.col(pj));
            v.col(t).swap(v.col(pj));
        }

        for (bool settled = false; !settled;) {
            bool restart = false;
            for (Eigen::Index i = t + 1; i < rows && !restart; ++i) {
                if (a(i, t) == 0) continue;
                BigInt q = a(i, t) / a(t, t);
                if (q != 0) {
                    a.row(i) -= q * a.row(t);
                    u.row(i) -= q * u.row(t);
                }
                if (a(i, t) != 0) {  // remainder becomes the smaller pivot
                    a.row(t).swap(a.row(i));
                    u.row(t).swap(u.row(i));
                    restart = true;
                }
            }
            if (restart) continue;
            for (Eigen::Index j = t + 1; j < cols && !restart; ++j) {
                if (a(t, j) == 0) continue;
                BigInt q = a(t, j) / a(t, t);
                if (q != 0) {
                    a.col(j) -= q * a.col(t);
                    v.col(j) -= q * v.col(t);
                }
                if (a(t, j) != 0) {
                    a.col(t).swap(a.col(j));
                    v.col(t).swap(v.col(j));
                    restart = true;
                }
            }
            if (restart) continue;

            // Pivot must divide the whole trailing block for the chain
            // d_1 | d_2 | ... to hold; fold an offending row in and redo.
            settled = true;
            for (Eigen::Index i = t + 1; i < rows && settled; ++i)
                for (Eigen::Index j = t + 1; j < cols && settled; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        a.row(t) += a.row(i);
                        u.row(t) += u.row(i);
                        settled = false;
                    }
        }

        if (a(t, t) < 0) {
            a.row(t) = -a.row(t);
            u.row(t) = -u.row(t);
        }
    }

    return {std::move(a), std::move(u), std::move(v)};
}

SnfResult smith_normal_form(const IntMatrix& a) { return smith_decomposition(a).diagonal(); }

}  // namespace gdbw
