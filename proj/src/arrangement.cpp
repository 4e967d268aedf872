#include "polyteach/arrangement.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "polyteach/util.hpp"

namespace polyteach {

std::string signsToString(const SignVector& signs) {
    std::string out;
    out.reserve(signs.size());
    for (int s : signs) out.push_back(s > 0 ? '+' : '-');
    return out;
}

SignVector signsFromString(const std::string& text) {
    SignVector signs;
    signs.reserve(text.size());
    for (char c : text) {
        if (c == '+') {
            signs.push_back(1);
        } else if (c == '-') {
            signs.push_back(-1);
        } else {
            throw std::invalid_argument("sign vector may contain only '+' and '-'");
        }
    }
    return signs;
}

Arrangement::Arrangement(Eigen::Index dimension, std::vector<Hyperplane> hyperplanes)
    : dimension_(dimension), hyperplanes_(std::move(hyperplanes)) {
    if (dimension_ < 1) throw std::invalid_argument("arrangement dimension must be >= 1");
    if (hyperplanes_.empty()) throw std::invalid_argument("arrangement needs >= 1 hyperplane");
    for (std::size_t i = 0; i < hyperplanes_.size(); ++i) {
        Hyperplane& h = hyperplanes_[i];
        if (h.normal.size() != dimension_) {
            throw std::invalid_argument("hyperplane dimension mismatch");
        }
        bool zero = true;
        for (Eigen::Index j = 0; j < dimension_; ++j) {
            if (h.normal(j) != 0) { zero = false; break; }
        }
        if (zero) throw std::invalid_argument("hyperplane normal must be nonzero");
        h.id = static_cast<int>(i);
    }
}

Arrangement makeVerifiedArrangement(Eigen::Index dimension, std::vector<Hyperplane> hyperplanes,
                                    PositionReport report) {
    Arrangement a(dimension, std::move(hyperplanes));
    a.cached_ = std::move(report);
    return a;
}

const PositionReport& Arrangement::ensurePosition() {
    if (!cached_) cached_ = verifyPosition(*this);
    return *cached_;
}

int Arrangement::positionClass() const {
    const PositionReport report = cached_ ? *cached_ : verifyPosition(*this);
    if (!report.isRelaxedGeneral()) {
        throw std::invalid_argument("arrangement is not in relaxed general position");
    }
    return report.positionClass;
}

StrictConstraint signedConstraint(const Hyperplane& h, int sgn) {
    return StrictConstraint{h.normal, h.bias, sgn > 0 ? Sense::Greater : Sense::Less};
}

std::vector<StrictConstraint> cellConstraints(const Arrangement& a, const SignVector& signs,
                                              int excludedId) {
    if (static_cast<int>(signs.size()) != a.size()) {
        throw std::invalid_argument("sign vector length must equal arrangement size");
    }
    std::vector<StrictConstraint> constraints;
    constraints.reserve(signs.size());
    for (int i = 0; i < a.size(); ++i) {
        if (i == excludedId) continue;
        constraints.push_back(signedConstraint(a.hyperplane(i), signs[static_cast<std::size_t>(i)]));
    }
    return constraints;
}

namespace {

enum class SubsetKind { ExactFlat, Empty, WrongDimension };

struct SubsetCheck {
    SubsetKind kind;
    int dimension;  // intersection dimension, -1 when empty
};

SubsetCheck checkSubset(const Arrangement& a, const std::vector<int>& ids) {
    const Eigen::Index d = a.dimension();
    const Eigen::Index k = static_cast<Eigen::Index>(ids.size());
    Matrix lhs(k, d);
    Vector rhs(k);
    for (Eigen::Index i = 0; i < k; ++i) {
        const Hyperplane& h = a.hyperplane(ids[static_cast<std::size_t>(i)]);
        lhs.row(i) = h.normal.transpose();
        rhs(i) = h.bias;
    }
    const LinearSystemSolution sol = solveAffine(lhs, rhs);
    if (sol.kind == LinearSystemSolution::Kind::Infeasible) {
        return {SubsetKind::Empty, -1};
    }
    const int dim = static_cast<int>(d - sol.rank);
    return {dim == static_cast<int>(d - k) ? SubsetKind::ExactFlat : SubsetKind::WrongDimension,
            dim};
}

}  // namespace

PositionReport verifyPosition(const Arrangement& a) {
    const int n = a.size();
    const int d = static_cast<int>(a.dimension());

    for (int k = 1; k <= n; ++k) {
        bool sawExact = false;
        bool sawEmpty = false;
        std::optional<std::vector<int>> emptySubset;
        std::optional<PositionReport> badReport;

        forEachCombination(n, k, [&](const std::vector<int>& ids) {
            if (badReport) return;
            const SubsetCheck check = checkSubset(a, ids);
            switch (check.kind) {
                case SubsetKind::ExactFlat:
                    sawExact = true;
                    break;
                case SubsetKind::Empty:
                    sawEmpty = true;
                    if (!emptySubset) emptySubset = ids;
                    break;
                case SubsetKind::WrongDimension: {
                    // Nonempty but too large: rules out every d', both above
                    // and below k.
                    PositionReport r;
                    r.verdict = PositionReport::Verdict::Violation;
                    r.violatingSubset = ids;
                    r.observedDimension = check.dimension;
                    badReport = std::move(r);
                    break;
                }
            }
        });

        if (badReport) return *badReport;
        if (sawEmpty && sawExact) {
            // Some k-subsets meet and some do not; no class fits both.
            PositionReport r;
            r.verdict = PositionReport::Verdict::Violation;
            r.violatingSubset = *emptySubset;
            r.observedDimension = -1;
            return r;
        }
        if (sawEmpty) {
            PositionReport r;
            r.verdict = PositionReport::Verdict::RelaxedGeneral;
            r.positionClass = k - 1;
            return r;
        }
        // All k-subsets are exact (d-k)-flats; k = d is the largest size for
        // which that is possible, so the loop always resolves by k = d + 1.
    }

    // Every subset of every size meets exactly; larger subsets do not exist,
    // so the condition holds vacuously up to d.
    PositionReport r;
    r.verdict = PositionReport::Verdict::RelaxedGeneral;
    r.positionClass = d;
    return r;
}

namespace {

void regionDfs(const Arrangement& a, SignVector& signs, std::vector<StrictConstraint>& active,
               std::vector<Region>& out) {
    const int k = static_cast<int>(active.size());
    for (int s : {-1, +1}) {
        signs[static_cast<std::size_t>(k)] = s;
        active.push_back(signedConstraint(a.hyperplane(k), s));
        if (auto witness = strictlyFeasible(a.dimension(), active)) {
            if (k + 1 == a.size()) {
                out.push_back(Region{signs, std::move(*witness)});
            } else {
                regionDfs(a, signs, active, out);
            }
        }
        active.pop_back();
    }
}

}  // namespace

std::vector<Region> enumerateRegions(const Arrangement& a) {
    std::vector<Region> out;
    SignVector signs(static_cast<std::size_t>(a.size()));
    std::vector<StrictConstraint> active;
    active.reserve(static_cast<std::size_t>(a.size()));
    regionDfs(a, signs, active, out);
    return out;
}

namespace {

// Rational affine chart of a hyperplane: z = origin + basis * t. The pivot
// coordinate is the largest-|coefficient| entry of the normal, lowest index
// on ties.
struct Chart {
    Vector origin;
    Matrix basis;  // d x (d-1), columns span the direction space
};

Chart chartOf(const Hyperplane& h, Eigen::Index d) {
    Eigen::Index pivot = 0;
    Rational best = abs(h.normal(0));
    for (Eigen::Index j = 1; j < d; ++j) {
        const Rational mag = abs(h.normal(j));
        if (mag > best) { best = mag; pivot = j; }
    }
    Chart chart;
    chart.origin = Vector::Zero(d);
    chart.origin(pivot) = h.bias / h.normal(pivot);
    chart.basis = Matrix::Zero(d, d - 1);
    Eigen::Index col = 0;
    for (Eigen::Index j = 0; j < d; ++j) {
        if (j == pivot) continue;
        chart.basis(j, col) = 1;
        chart.basis(pivot, col) = -h.normal(j) / h.normal(pivot);
        ++col;
    }
    return chart;
}

}  // namespace

FaceEnumeration enumerateFaces(const Arrangement& a) {
    const Eigen::Index d = a.dimension();
    FaceEnumeration result;
    result.perHyperplane.reserve(static_cast<std::size_t>(a.size()));

    for (int target = 0; target < a.size(); ++target) {
        HyperplaneFaces entry;
        entry.hyperplane = target;

        std::vector<Hyperplane> restricted;
        if (d >= 2) {
            const Chart chart = chartOf(a.hyperplane(target), d);
            for (int other = 0; other < a.size(); ++other) {
                if (other == target) continue;
                const Hyperplane& h = a.hyperplane(other);
                Vector normal = chart.basis.transpose() * h.normal;
                bool zero = true;
                for (Eigen::Index j = 0; j < normal.size(); ++j) {
                    if (normal(j) != 0) { zero = false; break; }
                }
                const Rational bias = h.bias - h.normal.dot(chart.origin);
                if (zero) {
                    if (bias == 0) {
                        throw std::invalid_argument("enumerateFaces: duplicate hyperplane");
                    }
                    continue;  // parallel, never meets the chart
                }
                restricted.push_back(Hyperplane{std::move(normal), bias});
                entry.cutters.push_back(other);
            }
        }

        if (restricted.empty()) {
            // Uncut hyperplane: one face covering the whole chart.
            entry.faces.push_back(Region{{}, Vector::Zero(std::max<Eigen::Index>(d - 1, 0))});
        } else {
            entry.faces = enumerateRegions(Arrangement(d - 1, std::move(restricted)));
        }
        result.total += static_cast<std::int64_t>(entry.faces.size());
        result.perHyperplane.push_back(std::move(entry));
    }
    return result;
}

Region locateRegion(const Arrangement& a, const Vector& z) {
    if (z.size() != a.dimension()) {
        throw std::invalid_argument("locateRegion: point dimension mismatch");
    }
    SignVector signs(static_cast<std::size_t>(a.size()));
    for (int i = 0; i < a.size(); ++i) {
        const Rational value = a.hyperplane(i).evaluate(z);
        if (value == 0) {
            throw OnHyperplane("point lies exactly on hyperplane " + std::to_string(i));
        }
        signs[static_cast<std::size_t>(i)] = value > 0 ? 1 : -1;
    }
    return Region{std::move(signs), z};
}

Arrangement randomArrangement(int n, int d, int dprime, std::uint64_t seed) {
    if (n < 1 || d < 1 || dprime < 1 || dprime > d) {
        throw std::invalid_argument("randomArrangement: need n >= 1 and 1 <= d' <= d");
    }
    std::mt19937_64 rng(seed);
    constexpr int kMaxAttempts = 256;

    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        const long range = 3L << std::min(attempt / 8, 20);
        std::uniform_int_distribution<long> coeff(-range, range);
        std::uniform_int_distribution<long> bias(-4 * range, 4 * range);

        // d' spanning directions of full rank.
        Matrix directions(dprime, d);
        for (Eigen::Index i = 0; i < dprime; ++i) {
            for (Eigen::Index j = 0; j < d; ++j) directions(i, j) = coeff(rng);
        }
        if (rank(directions) < dprime) continue;

        std::vector<Hyperplane> planes;
        planes.reserve(static_cast<std::size_t>(n));
        bool degenerate = false;
        for (int i = 0; i < n && !degenerate; ++i) {
            Vector combo(dprime);
            for (Eigen::Index j = 0; j < dprime; ++j) combo(j) = coeff(rng);
            Vector normal = directions.transpose() * combo;
            bool zero = true;
            for (Eigen::Index j = 0; j < d; ++j) {
                if (normal(j) != 0) { zero = false; break; }
            }
            if (zero) { degenerate = true; break; }
            planes.push_back(Hyperplane{std::move(normal), Rational(bias(rng))});
        }
        if (degenerate) continue;

        Arrangement candidate(d, std::move(planes));
        PositionReport report = verifyPosition(candidate);
        if (!report.isRelaxedGeneral()) continue;
        if (n > dprime ? report.positionClass != dprime : report.positionClass < dprime) continue;
        return makeVerifiedArrangement(d, candidate.hyperplanes(), std::move(report));
    }
    throw GenerationFailed("randomArrangement: retry budget exhausted for n=" +
                           std::to_string(n) + " d=" + std::to_string(d) +
                           " d'=" + std::to_string(dprime));
}

namespace {

// Proper fractions in (0,1) ordered by denominator: 1/2, 1/3, 2/3, 1/4, 3/4, ...
std::vector<Rational> properFractions(int count) {
    std::vector<Rational> out;
    for (long q = 2; static_cast<int>(out.size()) < count; ++q) {
        for (long p = 1; p < q && static_cast<int>(out.size()) < count; ++p) {
            if (std::gcd(p, q) == 1) out.emplace_back(p, q);
        }
    }
    return out;
}

// Rational unit vector with strictly positive coordinates built from d-1
// parameters in (0,1) via the circle parameterization
// t -> ((1-t^2)/(1+t^2), 2t/(1+t^2)).
Vector spherePoint(const std::vector<Rational>& params) {
    const auto circle = [](const Rational& t) {
        const Rational den = 1 + t * t;
        return std::pair<Rational, Rational>{(1 - t * t) / den, 2 * t / den};
    };
    auto [x, y] = circle(params[0]);
    Vector point(2);
    point << x, y;
    for (std::size_t k = 1; k < params.size(); ++k) {
        auto [a, b] = circle(params[k]);
        Vector next(point.size() + 1);
        next.head(point.size()) = a * point;
        next(point.size()) = b;
        point = std::move(next);
    }
    return point;
}

// True when every d-subset of points (plus the candidate) stays linearly
// independent; only subsets containing the candidate need checking.
bool keepsIndependence(const std::vector<Vector>& accepted, const Vector& candidate, int d) {
    const int have = static_cast<int>(accepted.size());
    const int need = d - 1;
    if (have < need) {
        Matrix m(have + 1, d);
        for (int i = 0; i < have; ++i) m.row(i) = accepted[static_cast<std::size_t>(i)].transpose();
        m.row(have) = candidate.transpose();
        return rank(m) == have + 1;
    }
    bool ok = true;
    forEachCombination(have, need, [&](const std::vector<int>& ids) {
        if (!ok) return;
        Matrix m(d, d);
        for (int i = 0; i < need; ++i) {
            m.row(i) = accepted[static_cast<std::size_t>(ids[static_cast<std::size_t>(i)])].transpose();
        }
        m.row(need) = candidate.transpose();
        if (rank(m) < d) ok = false;
    });
    return ok;
}

}  // namespace

Arrangement worstCaseArrangement(int n, int d) {
    if (n < d || d < 2) {
        throw std::invalid_argument("worstCaseArrangement: need n >= d >= 2");
    }
    constexpr int kMaxShifts = 64;
    const int paramCount = d - 1;

    for (int shift = 0; shift < kMaxShifts; ++shift) {
        // Enumerate parameter tuples by max fraction index, then
        // lexicographically, skipping the first `shift` tuples; grows denser
        // on every retry.
        const std::vector<Rational> fractions = properFractions(n + shift + 8);
        std::vector<Vector> points;
        std::vector<std::vector<int>> tuples;
        for (int maxIdx = 0; maxIdx < static_cast<int>(fractions.size()); ++maxIdx) {
            std::vector<int> tuple(static_cast<std::size_t>(paramCount), 0);
            const std::function<void(int, bool)> emit = [&](int pos, bool usedMax) {
                if (pos == paramCount) {
                    if (usedMax) tuples.push_back(tuple);
                    return;
                }
                for (int v = 0; v <= maxIdx; ++v) {
                    tuple[static_cast<std::size_t>(pos)] = v;
                    emit(pos + 1, usedMax || v == maxIdx);
                }
            };
            emit(0, false);
            if (static_cast<int>(tuples.size()) > (n + shift) * (paramCount + 2) + 16) break;
        }

        int skipped = 0;
        for (const std::vector<int>& tuple : tuples) {
            if (skipped < shift) { ++skipped; continue; }
            std::vector<Rational> params;
            params.reserve(tuple.size());
            for (int idx : tuple) params.push_back(fractions[static_cast<std::size_t>(idx)]);
            Vector candidate = spherePoint(params);
            if (keepsIndependence(points, candidate, d)) {
                points.push_back(std::move(candidate));
                if (static_cast<int>(points.size()) == n) break;
            }
        }
        if (static_cast<int>(points.size()) < n) continue;

        std::vector<Hyperplane> planes;
        planes.reserve(static_cast<std::size_t>(n));
        for (Vector& p : points) planes.push_back(Hyperplane{std::move(p), Rational(1)});

        Arrangement candidate(d, std::move(planes));
        PositionReport report = verifyPosition(candidate);
        if (report.isRelaxedGeneral() && report.positionClass == d) {
            return makeVerifiedArrangement(d, candidate.hyperplanes(), std::move(report));
        }
    }
    throw ConstructionFailed("worstCaseArrangement: rational point supply exhausted");
}

}  // namespace polyteach
