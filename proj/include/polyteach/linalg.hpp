#ifndef POLYTEACH_LINALG_HPP
#define POLYTEACH_LINALG_HPP

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include "polyteach/rational.hpp"

namespace polyteach {

using Matrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Exact rank via rational Gaussian elimination.
Eigen::Index rank(Matrix m);

/// Exact solution of m * x = rhs.
///
/// When the system is solvable but underdetermined, `particular` is one
/// solution (free variables set to 0) and the columns of `nullBasis` span
/// the kernel, so the solution flat is particular + span(nullBasis) with
/// dimension cols - rank (rank-nullity).
struct LinearSystemSolution {
    enum class Kind { Unique, AffineSubspace, Infeasible };

    Kind kind = Kind::Infeasible;
    Vector particular;   // valid unless Infeasible
    Matrix nullBasis;    // one column per free variable; empty unless AffineSubspace
    Eigen::Index rank = 0;

    Eigen::Index flatDimension() const { return nullBasis.cols(); }
};

/// Throws std::invalid_argument when rhs.size() != m.rows().
LinearSystemSolution solveAffine(const Matrix& m, const Vector& rhs);

/// Exact inverse; throws std::invalid_argument on a singular matrix.
Matrix inverseExact(const Matrix& m);

}  // namespace polyteach

#endif
