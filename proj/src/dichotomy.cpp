#include "polyteach/dichotomy.hpp"

#include <algorithm>
#include <random>

#include "polyteach/util.hpp"

namespace polyteach {

int pointPositionClass(const std::vector<Vector>& points, Eigen::Index dimension) {
    const int n = static_cast<int>(points.size());
    const int cap = std::min<int>(static_cast<int>(dimension), n);
    int cls = 0;
    for (int k = 1; k <= cap; ++k) {
        bool allIndependent = true;
        forEachCombination(n, k, [&](const std::vector<int>& ids) {
            if (!allIndependent) return;
            Matrix m(k, dimension);
            for (int i = 0; i < k; ++i) {
                m.row(i) = points[static_cast<std::size_t>(ids[static_cast<std::size_t>(i)])]
                               .transpose();
            }
            if (rank(m) < k) allIndependent = false;
        });
        if (!allIndependent) break;
        cls = k;
    }
    return cls;
}

PointSet::PointSet(std::vector<Vector> normalizedPoints, Eigen::Index dimension)
    : points_(std::move(normalizedPoints)), dimension_(dimension) {
    if (points_.empty()) throw std::invalid_argument("PointSet: need at least one point");
    for (const Vector& p : points_) {
        if (p.size() != dimension_) throw std::invalid_argument("PointSet: dimension mismatch");
        bool zero = true;
        for (Eigen::Index j = 0; j < dimension_; ++j) {
            if (p(j) != 0) { zero = false; break; }
        }
        if (zero) throw std::invalid_argument("PointSet: zero point");
    }
    const Vector& last = points_.back();
    for (Eigen::Index j = 0; j < dimension_; ++j) {
        if (last(j) != (j == dimension_ - 1 ? 1 : 0)) {
            throw std::invalid_argument("PointSet: last point must be e_d; normalize first");
        }
    }
    positionClass_ = pointPositionClass(points_, dimension_);
}

PointSet normalizeLastToBasis(const std::vector<Vector>& raw) {
    if (raw.empty()) throw std::invalid_argument("normalizeLastToBasis: empty point list");
    const Eigen::Index d = raw.front().size();
    const Vector& last = raw.back();
    if (last.size() != d) throw std::invalid_argument("normalizeLastToBasis: dimension mismatch");

    Eigen::Index pivot = -1;
    Rational best = 0;
    for (Eigen::Index j = 0; j < d; ++j) {
        const Rational mag = abs(last(j));
        if (mag > best) { best = mag; pivot = j; }
    }
    if (pivot < 0) throw ZeroLastPoint("normalizeLastToBasis: last point is zero");

    // Basis completion: standard vectors except the pivot coordinate, with
    // the last point itself in the final slot; its inverse sends it to e_d.
    Matrix basis = Matrix::Zero(d, d);
    Eigen::Index col = 0;
    for (Eigen::Index j = 0; j < d; ++j) {
        if (j == pivot) continue;
        basis(j, col++) = 1;
    }
    basis.col(d - 1) = last;
    const Matrix map = inverseExact(basis);

    std::vector<Vector> mapped;
    mapped.reserve(raw.size());
    for (const Vector& x : raw) {
        if (x.size() != d) throw std::invalid_argument("normalizeLastToBasis: dimension mismatch");
        mapped.push_back(map * x);
    }
    return PointSet(std::move(mapped), d);
}

PointSet randomPointSet(int n, int d, std::uint64_t seed) {
    if (n < 1 || d < 1) throw std::invalid_argument("randomPointSet: need n >= 1, d >= 1");
    std::mt19937_64 rng(seed);
    constexpr int kMaxAttempts = 256;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        const long range = 6L << std::min(attempt / 8, 16);
        std::uniform_int_distribution<long> coord(-range, range);
        std::vector<Vector> raw;
        raw.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            Vector p(d);
            for (Eigen::Index j = 0; j < d; ++j) p(j) = coord(rng);
            raw.push_back(std::move(p));
        }
        try {
            PointSet ps = normalizeLastToBasis(raw);
            if (ps.positionClass() == std::min(n, d)) return ps;
        } catch (const ZeroLastPoint&) {
        } catch (const std::invalid_argument&) {
        }
    }
    throw GenerationFailed("randomPointSet: retry budget exhausted");
}

std::vector<int> Dichotomy::positives() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] > 0) out.push_back(static_cast<int>(i));
    }
    return out;
}

std::vector<int> Dichotomy::negatives() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] < 0) out.push_back(static_cast<int>(i));
    }
    return out;
}

Dichotomy Dichotomy::canonical() const {
    if (isCanonical()) return *this;
    Dichotomy flipped;
    flipped.labels.reserve(labels.size());
    for (int l : labels) flipped.labels.push_back(-l);
    return flipped;
}

FeatureMap FeatureMap::identity() { return FeatureMap(Kind::Identity); }

FeatureMap FeatureMap::monomials2() { return FeatureMap(Kind::Monomials2); }

FeatureMap FeatureMap::table(std::vector<Vector> rows) {
    FeatureMap map(Kind::Table);
    map.table_ = std::move(rows);
    return map;
}

Eigen::Index FeatureMap::liftedDimension(Eigen::Index d) const {
    switch (kind_) {
        case Kind::Identity:
            return d;
        case Kind::Monomials2:
            return d * (d + 1) / 2;
        case Kind::Table:
            return table_.empty() ? 0 : table_.front().size();
    }
    return 0;
}

std::vector<Vector> FeatureMap::lift(const std::vector<Vector>& points) const {
    switch (kind_) {
        case Kind::Identity:
            return points;
        case Kind::Monomials2: {
            std::vector<Vector> out;
            out.reserve(points.size());
            for (const Vector& x : points) {
                const Eigen::Index d = x.size();
                Vector f(d * (d + 1) / 2);
                Eigen::Index k = 0;
                for (Eigen::Index i = 0; i < d; ++i) {
                    for (Eigen::Index j = i; j < d; ++j) f(k++) = x(i) * x(j);
                }
                out.push_back(std::move(f));
            }
            return out;
        }
        case Kind::Table:
            if (table_.size() != points.size()) {
                throw std::invalid_argument("FeatureMap::lift: table size mismatch");
            }
            return table_;
    }
    return {};
}

std::optional<Vector> separatingWitness(const std::vector<Vector>& points,
                                        const std::vector<int>& labels,
                                        Eigen::Index dimension) {
    if (labels.size() != points.size()) {
        throw std::invalid_argument("separatingWitness: label count mismatch");
    }
    std::vector<StrictConstraint> constraints;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (labels[i] == 0) continue;
        constraints.push_back(StrictConstraint{
            points[i], Rational(0), labels[i] > 0 ? Sense::Greater : Sense::Less});
    }
    return strictlyFeasible(dimension, constraints);
}

std::optional<Vector> isSeparable(const PointSet& ps, const Dichotomy& dich,
                                  const FeatureMap& phi) {
    if (static_cast<int>(dich.labels.size()) != ps.size()) {
        throw std::invalid_argument("isSeparable: dichotomy size mismatch");
    }
    const std::vector<Vector> lifted = phi.lift(ps.points());
    return separatingWitness(lifted, dich.labels, phi.liftedDimension(ps.dimension()));
}

Hyperplane dualMapPoint(const Vector& x) {
    const Eigen::Index d = x.size();
    if (d < 2) throw std::invalid_argument("dualMapPoint: need dimension >= 2");
    Vector normal = x.head(d - 1);
    bool zero = true;
    for (Eigen::Index j = 0; j < d - 1; ++j) {
        if (normal(j) != 0) { zero = false; break; }
    }
    if (zero) throw BasisPoint("dualMapPoint: point is parallel to e_d; dual is at infinity");
    return Hyperplane{std::move(normal), -x(d - 1)};
}

Vector dualMapSeparator(const Vector& w) {
    const Eigen::Index d = w.size();
    if (d < 2) throw std::invalid_argument("dualMapSeparator: need dimension >= 2");
    if (w(d - 1) <= 0) {
        throw NonpositiveLastCoordinate("dualMapSeparator: separator must have w_d > 0");
    }
    return w.head(d - 1) / w(d - 1);
}

int DualInstance::classIndexOf(const Dichotomy& dich) const {
    const Dichotomy canon = dich.canonical();
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (classes[i] == canon) return static_cast<int>(i);
    }
    return -1;
}

DualInstance buildDualInstance(const PointSet& ps) {
    const int n = ps.size();
    const Eigen::Index d = ps.dimension();
    if (n < 2 || d < 2) {
        throw std::invalid_argument("buildDualInstance: need >= 2 points in dimension >= 2");
    }
    const int dprime = ps.positionClass();
    if (dprime < 2) {
        throw PositionViolation("buildDualInstance: point set must be at least 2-general");
    }

    std::vector<Hyperplane> planes;
    planes.reserve(static_cast<std::size_t>(n - 1));
    for (int i = 0; i + 1 < n; ++i) planes.push_back(dualMapPoint(ps.point(i)));

    Arrangement dual(d - 1, std::move(planes));
    PositionReport report = verifyPosition(dual);
    const int expected = dprime - 1;
    const bool ok = report.isRelaxedGeneral() &&
                    (n - 1 > expected ? report.positionClass == expected
                                      : report.positionClass >= expected);
    if (!ok) {
        throw PositionViolation("buildDualInstance: dual arrangement is not (d'-1)-relaxed "
                                "general; the point set was not d'-general");
    }

    DualInstance instance{makeVerifiedArrangement(d - 1, dual.hyperplanes(), std::move(report)),
                          {},
                          {}};
    instance.regions = enumerateRegions(instance.dual);
    instance.classes.reserve(instance.regions.size());
    for (const Region& region : instance.regions) {
        Vector w(d);
        w.head(d - 1) = region.witness;
        w(d - 1) = 1;
        Dichotomy dich;
        dich.labels.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const Rational value = w.dot(ps.point(i));
            if (value == 0) {
                throw std::logic_error("buildDualInstance: witness separator touches a point");
            }
            dich.labels.push_back(value > 0 ? 1 : -1);
        }
        instance.classes.push_back(std::move(dich));
    }
    return instance;
}

bool isAmbiguousPoint(const std::vector<Vector>& points, const std::vector<int>& partialLabels,
                      int yIndex, Eigen::Index dimension) {
    if (partialLabels.size() != points.size()) {
        throw std::invalid_argument("isAmbiguousPoint: label count mismatch");
    }
    if (yIndex < 0 || yIndex >= static_cast<int>(points.size()) ||
        partialLabels[static_cast<std::size_t>(yIndex)] != 0) {
        throw std::invalid_argument("isAmbiguousPoint: y must be an unlabeled point");
    }
    std::vector<int> labels = partialLabels;
    labels[static_cast<std::size_t>(yIndex)] = 1;
    if (!separatingWitness(points, labels, dimension)) return false;
    labels[static_cast<std::size_t>(yIndex)] = -1;
    return separatingWitness(points, labels, dimension).has_value();
}

std::vector<int> extremePoints(const PointSet& ps, const Dichotomy& dich) {
    const int n = ps.size();
    const Eigen::Index d = ps.dimension();
    if (static_cast<int>(dich.labels.size()) != n) {
        throw std::invalid_argument("extremePoints: dichotomy size mismatch");
    }
    if (ps.positionClass() != static_cast<int>(d)) {
        throw PositionViolation("extremePoints: point set must be d-general");
    }
    if (!separatingWitness(ps.points(), dich.labels, d)) {
        throw NotSeparable("extremePoints: dichotomy is not homogeneously separable");
    }

    std::vector<int> extreme;
    for (int i = 0; i < n; ++i) {
        std::vector<int> partial = dich.labels;
        partial[static_cast<std::size_t>(i)] = 0;
        if (isAmbiguousPoint(ps.points(), partial, i, d)) extreme.push_back(i);
    }

    // The dual teaching set must name exactly the extreme points that have a
    // dual hyperplane (everything except the last point).
    const DualInstance instance = buildDualInstance(ps);
    const int classIndex = instance.classIndexOf(dich);
    if (classIndex < 0) {
        throw std::logic_error("extremePoints: separable dichotomy missing from dual classes");
    }
    const TeachingSet ts =
        teachingSet(instance.dual, instance.regions[static_cast<std::size_t>(classIndex)]);
    std::vector<int> preimage;
    preimage.reserve(ts.queries.size());
    for (const HalfspaceQuery& q : ts.queries) preimage.push_back(q.hyperplane);
    std::sort(preimage.begin(), preimage.end());

    std::vector<int> primalSide;
    for (int i : extreme) {
        if (i != n - 1) primalSide.push_back(i);
    }
    if (primalSide != preimage) {
        throw std::logic_error("extremePoints: primal ambiguity set disagrees with the dual "
                               "teaching set");
    }
    return extreme;
}

ClassCensus classCensus(const PointSet& ps, const FeatureMap& phi) {
    std::vector<Vector> lifted = phi.lift(ps.points());
    const PointSet liftedSet = normalizeLastToBasis(lifted);
    ClassCensus census{buildDualInstance(liftedSet), {}, Rational(0)};
    const TeachingCensus dualCensus = teachingCensus(census.instance.dual,
                                                     census.instance.regions);
    census.sizes = dualCensus.sizes;
    census.mean = dualCensus.mean;
    return census;
}

}  // namespace polyteach
