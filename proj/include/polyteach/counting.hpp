#ifndef POLYTEACH_COUNTING_HPP
#define POLYTEACH_COUNTING_HPP

#include <stdexcept>
#include <utility>

#include "polyteach/rational.hpp"

namespace polyteach {

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Exact binomial coefficient; zero when k < 0 or k > n.
BigInt binomial(long n, long k);

/// Number of cells cut out of R^d by n hyperplanes in general position:
/// sum_{i<=d} C(n,i), which saturates at 2^n once n <= d. Satisfies
/// Q(n,d) = Q(n-1,d) + Q(n-1,d-1) with Q(1,d) = 2 and Q(n,0) = 1.
BigInt qGeneral(long n, long d);

/// Cells of an n-hyperplane arrangement in d'-relaxed general position:
/// sum_{i<=d'} C(n,i).
BigInt regionsRelaxed(long n, long dprime);

/// Faces (cells induced on the hyperplanes) of the same arrangement:
/// n * sum_{i<=d'-1} C(n-1,i); equals n when d' = 1.
BigInt facesRelaxed(long n, long dprime);

/// Exact mean teaching-set size over a uniformly random cell:
/// 2 * faces / regions.
Rational avgTeaching(long n, long dprime);

/// Bracket for regionsRelaxed valid for n > 2d':
/// C(n-1,d') <= regions <= C(n,d') * (n-d'+1)/(n-2d'+1).
/// Throws DomainError when n <= 2d'.
std::pair<Rational, Rational> regionBounds(long n, long dprime);

/// Checks Q(k,d-1)/Q(k,d) <= 2d/k, valid (and provably true) for k > 2d.
/// Throws DomainError when k <= 2d.
bool ratioBoundCheck(long k, long d);

/// Cells of the pairwise-bisector arrangement of n generic objects in R^d:
/// C(n,d) = C(n-1,d) + (n-1) C(n-1,d-1), seeded with n! for n <= d+1 and
/// with C(n,0) = 1 (a 0-dimensional reference space has one cell; the
/// recursion needs this anchor even though only n <= d+1 is pinned down
/// elsewhere).
BigInt rankingCells(long n, long d);

/// Faces of the bisector arrangement: C(n,2) * rankingCells(n-1, d-1).
BigInt rankingFaces(long n, long d);

}  // namespace polyteach

#endif
