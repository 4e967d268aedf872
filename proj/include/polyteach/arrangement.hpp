#ifndef POLYTEACH_ARRANGEMENT_HPP
#define POLYTEACH_ARRANGEMENT_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyteach/lp.hpp"

namespace polyteach {

/// Affine hyperplane { z : normal . z = bias } in R^d.
struct Hyperplane {
    Vector normal;
    Rational bias;
    int id = -1;

    /// Signed evaluation normal . z - bias; zero exactly on the hyperplane.
    Rational evaluate(const Vector& z) const { return normal.dot(z) - bias; }
};

/// One entry per hyperplane, +1 meaning normal . z > bias.
using SignVector = std::vector<int>;

std::string signsToString(const SignVector& signs);
SignVector signsFromString(const std::string& text);

/// An open cell of an arrangement: its full sign vector plus an exact
/// interior point.
struct Region {
    SignVector signs;
    Vector witness;
};

/// Position verdict: the largest d' such that every subset of k <= d'
/// hyperplanes meets in a (d-k)-flat and every larger subset has empty
/// intersection, or a witness subset showing no d' works.
struct PositionReport {
    enum class Verdict { RelaxedGeneral, Violation };

    Verdict verdict = Verdict::Violation;
    int positionClass = 0;             // d' when RelaxedGeneral
    std::vector<int> violatingSubset;  // hyperplane ids, on Violation
    int observedDimension = -1;        // intersection dim of that subset, -1 if empty

    bool isRelaxedGeneral() const { return verdict == Verdict::RelaxedGeneral; }
};

struct GenerationFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConstructionFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OnHyperplane : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// n hyperplanes in R^d, ids 0..n-1 in list order. Immutable once built;
/// the position report is computed eagerly by the generators and on demand
/// (without caching, so const access stays thread-safe) for user input.
class Arrangement {
public:
    Arrangement(Eigen::Index dimension, std::vector<Hyperplane> hyperplanes);

    Eigen::Index dimension() const { return dimension_; }
    int size() const { return static_cast<int>(hyperplanes_.size()); }
    const Hyperplane& hyperplane(int id) const {
        return hyperplanes_[static_cast<std::size_t>(id)];
    }
    const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }

    /// Cached verdict if one was computed; generators always fill this.
    const std::optional<PositionReport>& cachedPosition() const { return cached_; }

    /// Returns the cached report, or verifies now and caches.
    const PositionReport& ensurePosition();

    /// Verified position class d'; verifies on the spot when not cached.
    /// Throws std::invalid_argument on a Violation verdict.
    int positionClass() const;

private:
    friend Arrangement makeVerifiedArrangement(Eigen::Index, std::vector<Hyperplane>,
                                               PositionReport);

    Eigen::Index dimension_;
    std::vector<Hyperplane> hyperplanes_;
    std::optional<PositionReport> cached_;
};

/// Builds an arrangement with a precomputed position report attached;
/// generators and module bridges use it to avoid re-verification.
Arrangement makeVerifiedArrangement(Eigen::Index dimension, std::vector<Hyperplane> hyperplanes,
                                    PositionReport report);

/// Strict constraint selecting the side `sgn` (+1/-1) of h.
StrictConstraint signedConstraint(const Hyperplane& h, int sgn);

/// Constraints pinning down the cell with the given signs, optionally
/// leaving one hyperplane out.
std::vector<StrictConstraint> cellConstraints(const Arrangement& a, const SignVector& signs,
                                              int excludedId = -1);

/// Checks the relaxed-general-position definition exhaustively over
/// hyperplane subsets, via exact linear solves.
PositionReport verifyPosition(const Arrangement& a);

/// All nonempty open cells, depth-first over sign prefixes with strict-LP
/// pruning, in lexicographic sign order (-1 before +1).
std::vector<Region> enumerateRegions(const Arrangement& a);

/// Faces induced on one hyperplane, expressed in an affine chart of that
/// hyperplane (so each face is a region of a (d-1)-dimensional arrangement).
struct HyperplaneFaces {
    int hyperplane = -1;        // the charted hyperplane
    std::vector<int> cutters;   // ids whose restriction actually cuts the chart
    std::vector<Region> faces;  // chart-coordinate cells; single trivial face when uncut
};

struct FaceEnumeration {
    std::int64_t total = 0;
    std::vector<HyperplaneFaces> perHyperplane;
};

FaceEnumeration enumerateFaces(const Arrangement& a);

/// Cell containing z. Throws OnHyperplane when z lies exactly on one.
Region locateRegion(const Arrangement& a, const Vector& z);

/// Random arrangement verified to be in d'-relaxed general position:
/// normals are random integer combinations of d' random spanning
/// directions, biases random integers, resampled with widening ranges
/// until verification succeeds. Deterministic per seed.
Arrangement randomArrangement(int n, int d, int dprime, std::uint64_t seed);

/// n hyperplanes tangent to the unit sphere at rational points in the
/// strictly positive orthant, every d tangent points linearly independent.
/// The cell containing the origin has all n hyperplanes as faces.
Arrangement worstCaseArrangement(int n, int d);

}  // namespace polyteach

#endif
