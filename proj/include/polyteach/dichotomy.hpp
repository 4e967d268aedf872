#ifndef POLYTEACH_DICHOTOMY_HPP
#define POLYTEACH_DICHOTOMY_HPP

#include "polyteach/teaching.hpp"

namespace polyteach {

struct ZeroLastPoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BasisPoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonpositiveLastCoordinate : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotSeparable : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PositionViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Largest k <= min(d, n) such that every k-subset of the points is
/// linearly independent; 0 when some point is zero.
int pointPositionClass(const std::vector<Vector>& points, Eigen::Index dimension);

/// Ordered points in R^d whose last element has been normalized to the last
/// standard basis vector; homogeneous separability classes are unchanged by
/// the (invertible linear) normalization.
class PointSet {
public:
    PointSet(std::vector<Vector> normalizedPoints, Eigen::Index dimension);

    const std::vector<Vector>& points() const { return points_; }
    const Vector& point(int i) const { return points_[static_cast<std::size_t>(i)]; }
    Eigen::Index dimension() const { return dimension_; }
    int size() const { return static_cast<int>(points_.size()); }
    int positionClass() const { return positionClass_; }

private:
    std::vector<Vector> points_;
    Eigen::Index dimension_;
    int positionClass_;
};

/// Applies the invertible linear map sending the last raw point to e_d
/// (completing it to a basis with standard vectors, pivot = its
/// largest-magnitude coordinate). Throws ZeroLastPoint.
PointSet normalizeLastToBasis(const std::vector<Vector>& raw);

/// Random integer points resampled (with widening coordinate range) until
/// the normalized set is min(d,n)-general; deterministic per seed.
PointSet randomPointSet(int n, int d, std::uint64_t seed);

/// A two-part labeling of the whole point set; labels[i] in {+1,-1}.
struct Dichotomy {
    std::vector<int> labels;

    std::vector<int> positives() const;
    std::vector<int> negatives() const;
    bool isCanonical() const { return !labels.empty() && labels.back() == 1; }
    /// Representative of the equivalence class {v, -v} labeling the last
    /// point positive.
    Dichotomy canonical() const;

    friend bool operator==(const Dichotomy&, const Dichotomy&) = default;
};

/// Rational-in, rational-out feature lift.
class FeatureMap {
public:
    enum class Kind { Identity, Monomials2, Table };

    static FeatureMap identity();
    /// All homogeneous degree-2 monomials x_i x_j, i <= j.
    static FeatureMap monomials2();
    /// Explicit per-point feature rows (aligned with the point list).
    static FeatureMap table(std::vector<Vector> rows);

    Kind kind() const { return kind_; }
    Eigen::Index liftedDimension(Eigen::Index d) const;
    std::vector<Vector> lift(const std::vector<Vector>& points) const;

private:
    explicit FeatureMap(Kind kind) : kind_(kind) {}
    Kind kind_;
    std::vector<Vector> table_;
};

/// Exact homogeneous strict separator of the labeled points (labels 0 are
/// ignored), or nullopt.
std::optional<Vector> separatingWitness(const std::vector<Vector>& points,
                                        const std::vector<int>& labels,
                                        Eigen::Index dimension);

/// Separator w with w.phi(x) > 0 on positives and < 0 on negatives, or
/// nullopt when the lifted dichotomy is not separable.
std::optional<Vector> isSeparable(const PointSet& ps, const Dichotomy& dich,
                                  const FeatureMap& phi);

/// Point x in R^d -> hyperplane x_[d-1] . z = -x_d in R^{d-1}. Throws
/// BasisPoint when x_[d-1] = 0 (the normalized last point; its dual lies at
/// infinity).
Hyperplane dualMapPoint(const Vector& x);

/// Separator w (w_d > 0) -> point w_[d-1] / w_d in R^{d-1}; signs of w.x
/// and of the dual hyperplane of x evaluated there agree for every x.
Vector dualMapSeparator(const Vector& w);

/// The dual arrangement of all points except the last, with the bijective
/// class <-> region table recovered from region witnesses.
struct DualInstance {
    Arrangement dual;
    std::vector<Region> regions;      // aligned
    std::vector<Dichotomy> classes;   // aligned; all canonical

    int classIndexOf(const Dichotomy& dich) const;  // -1 when not separable
};

/// Throws PositionViolation when the point set is not at least 2-general or
/// the dual arrangement fails to verify as (d'-1)-relaxed general.
DualInstance buildDualInstance(const PointSet& ps);

/// Cover-style ambiguity: with partialLabels (+1/-1 labeled, 0 unlabeled),
/// point y = points[yIndex] is ambiguous iff both completions of its label
/// stay homogeneously separable.
bool isAmbiguousPoint(const std::vector<Vector>& points, const std::vector<int>& partialLabels,
                      int yIndex, Eigen::Index dimension);

/// Extreme points of a separable dichotomy (identity lift): the indices
/// whose label is not forced by the others. Cross-checks the result against
/// the teaching set of the dual region before returning; the last point has
/// no dual hyperplane, so it is handled on the primal side only.
std::vector<int> extremePoints(const PointSet& ps, const Dichotomy& dich);

/// Per-class teaching sizes over all separable classes of the lifted point
/// set, via the dual arrangement; mean is exact.
struct ClassCensus {
    DualInstance instance;
    std::vector<int> sizes;  // dual teaching-set size per class
    Rational mean;
};

ClassCensus classCensus(const PointSet& ps, const FeatureMap& phi);

}  // namespace polyteach

#endif
