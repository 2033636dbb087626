#pragma once

#include <utility>
#include <vector>

#include "lensurg/integer.hpp"

namespace lensurg {

/// Smith normal form diagonal d_1 | d_2 | ... with d_i >= 0, padded with zeros
/// to min(rows, cols). Exact row/column reduction pivoting on the entry of
/// least nonzero absolute value.
template <typename Scalar>
std::vector<Scalar> smith_diagonal(Matrix<Scalar> m) {
    using std::swap;
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    const Eigen::Index size = std::min(rows, cols);
    auto magnitude = [](const Scalar& x) { return x < 0 ? Scalar(-x) : x; };

    std::vector<Scalar> diag;
    for (Eigen::Index t = 0; t < size; ++t) {
        // pivot: least nonzero |entry| in the trailing block
        bool restart = true;
        while (restart) {
            restart = false;
            Eigen::Index pi = -1, pj = -1;
            for (Eigen::Index i = t; i < rows; ++i)
                for (Eigen::Index j = t; j < cols; ++j)
                    if (m(i, j) != 0 && (pi < 0 || magnitude(m(i, j)) < magnitude(m(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) break;
            m.row(t).swap(m.row(pi));
            m.col(t).swap(m.col(pj));

            for (Eigen::Index i = t + 1; i < rows; ++i) {
                if (m(i, t) == 0) continue;
                const Scalar f = m(i, t) / m(t, t);
                for (Eigen::Index j = t; j < cols; ++j) m(i, j) -= f * m(t, j);
                if (m(i, t) != 0) restart = true;
            }
            for (Eigen::Index j = t + 1; j < cols; ++j) {
                if (m(t, j) == 0) continue;
                const Scalar f = m(t, j) / m(t, t);
                for (Eigen::Index i = t; i < rows; ++i) m(i, j) -= f * m(i, t);
                if (m(t, j) != 0) restart = true;
            }
            if (restart) continue;
            // divisibility: fold any entry not divisible by the pivot into row t
            for (Eigen::Index i = t + 1; i < rows && !restart; ++i)
                for (Eigen::Index j = t + 1; j < cols; ++j)
                    if (m(i, j) % m(t, t) != 0) {
                        for (Eigen::Index c = t; c < cols; ++c) m(t, c) += m(i, c);
                        restart = true;
                        break;
                    }
        }
        diag.push_back(magnitude(m(t, t)));
    }
    return diag;
}

/// Invariant factors with the trivial ones dropped: the torsion orders and
/// the number of zero factors (free rank, counting only the square part).
template <typename Scalar>
std::pair<std::vector<Scalar>, int> cokernel_summary(const Matrix<Scalar>& m) {
    std::vector<Scalar> torsion;
    int free_rank = static_cast<int>(m.rows() - std::min(m.rows(), m.cols()));
    for (const auto& d : smith_diagonal<Scalar>(m)) {
        if (d == 0) ++free_rank;
        else if (d != 1) torsion.push_back(d);
    }
    return {torsion, free_rank};
}

}  // namespace lensurg
