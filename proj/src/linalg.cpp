#include "polyteach/linalg.hpp"

#include <stdexcept>
#include <vector>

namespace polyteach {

Eigen::Index rank(Matrix m) {
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = r; i < rows; ++i) {
            if (m(i, c) != 0) { pivot = i; break; }
        }
        if (pivot < 0) continue;
        if (pivot != r) m.row(pivot).swap(m.row(r));
        for (Eigen::Index i = r + 1; i < rows; ++i) {
            if (m(i, c) == 0) continue;
            const Rational factor = m(i, c) / m(r, c);
            m.row(i) -= factor * m.row(r);
        }
        ++r;
    }
    return r;
}

LinearSystemSolution solveAffine(const Matrix& m, const Vector& rhs) {
    if (rhs.size() != m.rows()) {
        throw std::invalid_argument("solveAffine: rhs length does not match row count");
    }
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();

    // Gauss-Jordan on the augmented system.
    Matrix aug(rows, cols + 1);
    aug.leftCols(cols) = m;
    aug.col(cols) = rhs;

    std::vector<Eigen::Index> pivotCols;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = r; i < rows; ++i) {
            if (aug(i, c) != 0) { pivot = i; break; }
        }
        if (pivot < 0) continue;
        if (pivot != r) aug.row(pivot).swap(aug.row(r));
        aug.row(r) /= aug(r, c);
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || aug(i, c) == 0) continue;
            aug.row(i) -= aug(i, c) * aug.row(r);
        }
        pivotCols.push_back(c);
        ++r;
    }

    LinearSystemSolution sol;
    sol.rank = static_cast<Eigen::Index>(pivotCols.size());

    for (Eigen::Index i = sol.rank; i < rows; ++i) {
        if (aug(i, cols) != 0) {
            sol.kind = LinearSystemSolution::Kind::Infeasible;
            return sol;
        }
    }

    sol.particular = Vector::Zero(cols);
    for (Eigen::Index i = 0; i < sol.rank; ++i) {
        sol.particular(pivotCols[static_cast<std::size_t>(i)]) = aug(i, cols);
    }

    const Eigen::Index nullity = cols - sol.rank;
    sol.nullBasis = Matrix::Zero(cols, nullity);
    if (nullity == 0) {
        sol.kind = LinearSystemSolution::Kind::Unique;
        return sol;
    }

    std::vector<bool> isPivot(static_cast<std::size_t>(cols), false);
    for (Eigen::Index c : pivotCols) isPivot[static_cast<std::size_t>(c)] = true;
    Eigen::Index k = 0;
    for (Eigen::Index f = 0; f < cols; ++f) {
        if (isPivot[static_cast<std::size_t>(f)]) continue;
        sol.nullBasis(f, k) = 1;
        for (Eigen::Index i = 0; i < sol.rank; ++i) {
            sol.nullBasis(pivotCols[static_cast<std::size_t>(i)], k) = -aug(i, f);
        }
        ++k;
    }
    sol.kind = LinearSystemSolution::Kind::AffineSubspace;
    return sol;
}

Matrix inverseExact(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverseExact: matrix not square");
    const Eigen::Index n = m.rows();
    Matrix work(n, 2 * n);
    work.leftCols(n) = m;
    work.rightCols(n) = Matrix::Identity(n, n);
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = c; i < n; ++i) {
            if (work(i, c) != 0) { pivot = i; break; }
        }
        if (pivot < 0) throw std::invalid_argument("inverseExact: singular matrix");
        if (pivot != c) work.row(pivot).swap(work.row(c));
        work.row(c) /= work(c, c);
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i == c || work(i, c) == 0) continue;
            work.row(i) -= work(i, c) * work.row(c);
        }
    }
    return work.rightCols(n);
}

}  // namespace polyteach
