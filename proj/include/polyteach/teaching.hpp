#ifndef POLYTEACH_TEACHING_HPP
#define POLYTEACH_TEACHING_HPP

#include "polyteach/arrangement.hpp"

namespace polyteach {

/// A labeled halfspace: "the target lies on side `label` of hyperplane
/// `hyperplane`".
struct HalfspaceQuery {
    int hyperplane = -1;
    int label = 0;  // +1 or -1

    friend bool operator==(const HalfspaceQuery&, const HalfspaceQuery&) = default;
};

struct VersionSpace {
    std::vector<Region> consistent;

    bool isSingleton() const { return consistent.size() == 1; }
};

/// Minimal query set whose version space is exactly {target}; for a cell of
/// an arrangement this is one query per bounding face.
struct TeachingSet {
    std::vector<HalfspaceQuery> queries;
    Region target;

    int size() const { return static_cast<int>(queries.size()); }
};

struct EmptyConstraintRegion : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ContradictoryQueries : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline int labelOf(const Region& r, const Hyperplane& h) {
    return r.signs[static_cast<std::size_t>(h.id)];
}

std::vector<StrictConstraint> queryConstraints(const Arrangement& a,
                                               const std::vector<HalfspaceQuery>& queries);

/// Whether h meets the open polytope carved out by the labeled constraints,
/// i.e. both sides of h are strictly feasible together with them. Throws
/// EmptyConstraintRegion when the constraints alone are infeasible.
bool isAmbiguous(const Arrangement& a, const Hyperplane& h,
                 const std::vector<HalfspaceQuery>& constraints);

/// The queries (h, label_of(r,h)) for exactly the hyperplanes that remain
/// ambiguous when every other hyperplane is constrained to r's side; these
/// are r's faces, and they pin the version space to {r} minimally.
TeachingSet teachingSet(const Arrangement& a, const Region& r);

VersionSpace versionSpace(const Arrangement& a, const std::vector<HalfspaceQuery>& queries);

/// Filter over precomputed cells; used when the same arrangement is queried
/// repeatedly.
VersionSpace versionSpace(const std::vector<Region>& cells,
                          const std::vector<HalfspaceQuery>& queries);

/// Teaching-set sizes for every cell, their sum, and the exact mean.
struct TeachingCensus {
    std::vector<int> sizes;  // aligned with enumerateRegions order
    std::int64_t sum = 0;
    Rational mean;
};

TeachingCensus teachingCensus(const Arrangement& a);
TeachingCensus teachingCensus(const Arrangement& a, const std::vector<Region>& cells);

}  // namespace polyteach

#endif
