#include "polyteach/lp.hpp"

#include <stdexcept>

namespace polyteach {

namespace {

// Dense-tableau simplex for  max c.x  s.t.  A x <= b, x >= 0, exact
// rationals throughout. Bland's rule; with exact pivots that rules out
// cycling, the only way an exact simplex can fail to terminate.
class Simplex {
public:
    enum class Status { Optimal, Infeasible, Unbounded };

    Simplex(const Matrix& a, const Vector& b, const Vector& c)
        : m_(a.rows()), n_(a.cols()), auxCol_(n_ + m_) {
        const Eigen::Index cols = n_ + m_ + 1;  // structural, slack, auxiliary
        tab_ = Matrix::Zero(m_, cols);
        tab_.leftCols(n_) = a;
        tab_.block(0, n_, m_, m_) = Matrix::Identity(m_, m_);
        tab_.col(auxCol_) = Vector::Constant(m_, Rational(-1));
        rhs_ = b;
        obj_ = Vector::Zero(cols);
        obj_.head(n_) = c;
        objConst_ = 0;
        basis_.resize(static_cast<std::size_t>(m_));
        for (Eigen::Index i = 0; i < m_; ++i) basis_[static_cast<std::size_t>(i)] = n_ + i;
    }

    Status solve() {
        if (!phaseOne()) return Status::Infeasible;
        return phaseTwo() ? Status::Optimal : Status::Unbounded;
    }

    Rational objective() const { return objConst_; }

    Vector solution() const {
        Vector x = Vector::Zero(n_);
        for (Eigen::Index i = 0; i < m_; ++i) {
            const Eigen::Index col = basis_[static_cast<std::size_t>(i)];
            if (col < n_) x(col) = rhs_(i);
        }
        return x;
    }

private:
    void pivot(Eigen::Index row, Eigen::Index col) {
        const Rational inv = Rational(1) / tab_(row, col);
        tab_.row(row) *= inv;
        rhs_(row) *= inv;
        for (Eigen::Index i = 0; i < m_; ++i) {
            if (i == row || tab_(i, col) == 0) continue;
            const Rational f = tab_(i, col);
            tab_.row(i) -= f * tab_.row(row);
            rhs_(i) -= f * rhs_(row);
        }
        if (obj_(col) != 0) {
            const Rational f = obj_(col);
            obj_ -= f * tab_.row(row).transpose();
            objConst_ += f * rhs_(row);
        }
        if (aux_.size() != 0 && aux_(col) != 0) {
            const Rational f = aux_(col);
            aux_ -= f * tab_.row(row).transpose();
            auxConst_ += f * rhs_(row);
        }
        basis_[static_cast<std::size_t>(row)] = col;
    }

    // Runs Bland iterations against the given objective row. `allowAux`
    // admits the auxiliary column as entering (phase one only).
    bool blandLoop(Vector& objRow, bool allowAux) {
        for (;;) {
            Eigen::Index enter = -1;
            for (Eigen::Index j = 0; j < tab_.cols(); ++j) {
                if (!allowAux && j == auxCol_) continue;
                if (objRow(j) > 0) { enter = j; break; }
            }
            if (enter < 0) return true;

            Eigen::Index leave = -1;
            Rational bestRatio;
            for (Eigen::Index i = 0; i < m_; ++i) {
                if (tab_(i, enter) <= 0) continue;
                const Rational ratio = rhs_(i) / tab_(i, enter);
                if (leave < 0 || ratio < bestRatio ||
                    (ratio == bestRatio && basis_[static_cast<std::size_t>(i)] <
                                               basis_[static_cast<std::size_t>(leave)])) {
                    leave = i;
                    bestRatio = ratio;
                }
            }
            if (leave < 0) return false;  // unbounded in the enter direction
            pivot(leave, enter);
        }
    }

    bool phaseOne() {
        Eigen::Index worst = -1;
        for (Eigen::Index i = 0; i < m_; ++i) {
            if (rhs_(i) < 0 && (worst < 0 || rhs_(i) < rhs_(worst))) worst = i;
        }
        if (worst < 0) return true;  // basis of slacks already feasible

        aux_ = Vector::Zero(tab_.cols());
        aux_(auxCol_) = -1;  // maximize -x0
        auxConst_ = 0;
        pivot(worst, auxCol_);  // one pivot makes every rhs nonnegative
        blandLoop(aux_, true);  // bounded below by construction, never unbounded
        if (auxConst_ < 0) return false;

        // Drive the auxiliary variable out of the basis if it lingers at 0.
        for (Eigen::Index i = 0; i < m_; ++i) {
            if (basis_[static_cast<std::size_t>(i)] != auxCol_) continue;
            Eigen::Index enter = -1;
            for (Eigen::Index j = 0; j < tab_.cols(); ++j) {
                if (j != auxCol_ && tab_(i, j) != 0) { enter = j; break; }
            }
            if (enter >= 0) {
                pivot(i, enter);
            } else {
                rhs_(i) = 0;  // all-zero row: redundant constraint
            }
        }
        aux_.resize(0);
        return true;
    }

    bool phaseTwo() { return blandLoop(obj_, false); }

    Eigen::Index m_, n_, auxCol_;
    Matrix tab_;
    Vector rhs_;
    Vector obj_;
    Rational objConst_;
    Vector aux_;
    Rational auxConst_;
    std::vector<Eigen::Index> basis_;
};

}  // namespace

std::optional<Vector> strictlyFeasible(const StrictLP& lp) {
    const Eigen::Index d = lp.dimension;
    const Eigen::Index n = static_cast<Eigen::Index>(lp.constraints.size());
    for (const StrictConstraint& c : lp.constraints) {
        if (c.normal.size() != d) {
            throw std::invalid_argument("strictlyFeasible: constraint dimension mismatch");
        }
        bool allZero = true;
        for (Eigen::Index j = 0; j < d; ++j) {
            if (c.normal(j) != 0) { allZero = false; break; }
        }
        if (allZero) {
            throw std::invalid_argument("strictlyFeasible: zero constraint normal");
        }
    }
    if (n == 0) return Vector::Zero(d);

    // Variables (all >= 0): z = zp - zm, eps = ep - em. Maximize eps subject
    // to eps <= 1 and, per constraint, normal.z - bias >= eps (sense >) or
    // <= -eps (sense <); written below in the form A x <= b.
    const Eigen::Index nv = 2 * d + 2;
    Matrix a = Matrix::Zero(n + 1, nv);
    Vector b(n + 1);
    for (Eigen::Index i = 0; i < n; ++i) {
        const StrictConstraint& c = lp.constraints[static_cast<std::size_t>(i)];
        const Rational s = (c.sense == Sense::Greater) ? Rational(-1) : Rational(1);
        a.block(i, 0, 1, d) = s * c.normal.transpose();
        a.block(i, d, 1, d) = -s * c.normal.transpose();
        a(i, 2 * d) = 1;
        a(i, 2 * d + 1) = -1;
        b(i) = s * c.bias;
    }
    a(n, 2 * d) = 1;
    a(n, 2 * d + 1) = -1;
    b(n) = 1;

    Vector c = Vector::Zero(nv);
    c(2 * d) = 1;
    c(2 * d + 1) = -1;

    Simplex simplex(a, b, c);
    const Simplex::Status status = simplex.solve();
    if (status != Simplex::Status::Optimal) {
        throw std::logic_error("strictlyFeasible: slack LP must be bounded and feasible");
    }
    if (simplex.objective() <= 0) return std::nullopt;

    const Vector x = simplex.solution();
    return Vector(x.head(d) - x.segment(d, d));
}

bool satisfiesStrictly(const Vector& point, const StrictLP& lp) {
    for (const StrictConstraint& c : lp.constraints) {
        const Rational value = c.normal.dot(point) - c.bias;
        if (c.sense == Sense::Greater ? value <= 0 : value >= 0) return false;
    }
    return true;
}

}  // namespace polyteach
