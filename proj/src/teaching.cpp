#include "polyteach/teaching.hpp"

namespace polyteach {

std::vector<StrictConstraint> queryConstraints(const Arrangement& a,
                                               const std::vector<HalfspaceQuery>& queries) {
    std::vector<StrictConstraint> constraints;
    constraints.reserve(queries.size());
    for (const HalfspaceQuery& q : queries) {
        if (q.hyperplane < 0 || q.hyperplane >= a.size()) {
            throw std::invalid_argument("query references unknown hyperplane");
        }
        if (q.label != 1 && q.label != -1) {
            throw std::invalid_argument("query label must be +1 or -1");
        }
        constraints.push_back(signedConstraint(a.hyperplane(q.hyperplane), q.label));
    }
    return constraints;
}

bool isAmbiguous(const Arrangement& a, const Hyperplane& h,
                 const std::vector<HalfspaceQuery>& constraints) {
    for (const HalfspaceQuery& q : constraints) {
        if (q.hyperplane == h.id) {
            throw std::invalid_argument("isAmbiguous: hyperplane already constrained");
        }
    }
    std::vector<StrictConstraint> base = queryConstraints(a, constraints);
    if (!base.empty() && !strictlyFeasible(a.dimension(), base)) {
        throw EmptyConstraintRegion("isAmbiguous: constraint region is empty");
    }
    base.push_back(signedConstraint(h, +1));
    const bool above = strictlyFeasible(a.dimension(), base).has_value();
    if (!above) return false;
    base.back() = signedConstraint(h, -1);
    return strictlyFeasible(a.dimension(), base).has_value();
}

namespace {

// h bounds the cell iff flipping h's side, while keeping every other
// hyperplane on the cell's side, still leaves an open set. The cell side is
// feasible by assumption, so this single LP decides ambiguity.
bool boundsCell(const Arrangement& a, const SignVector& signs, int id) {
    std::vector<StrictConstraint> constraints = cellConstraints(a, signs, id);
    constraints.push_back(
        signedConstraint(a.hyperplane(id), -signs[static_cast<std::size_t>(id)]));
    return strictlyFeasible(a.dimension(), constraints).has_value();
}

}  // namespace

TeachingSet teachingSet(const Arrangement& a, const Region& r) {
    if (static_cast<int>(r.signs.size()) != a.size()) {
        throw std::invalid_argument("teachingSet: region does not match arrangement");
    }
    TeachingSet ts;
    ts.target = r;
    for (int id = 0; id < a.size(); ++id) {
        if (boundsCell(a, r.signs, id)) {
            ts.queries.push_back(HalfspaceQuery{id, r.signs[static_cast<std::size_t>(id)]});
        }
    }
    return ts;
}

VersionSpace versionSpace(const std::vector<Region>& cells,
                          const std::vector<HalfspaceQuery>& queries) {
    for (std::size_t i = 0; i < queries.size(); ++i) {
        for (std::size_t j = i + 1; j < queries.size(); ++j) {
            if (queries[i].hyperplane == queries[j].hyperplane &&
                queries[i].label != queries[j].label) {
                throw ContradictoryQueries("hyperplane " + std::to_string(queries[i].hyperplane) +
                                           " appears with both labels");
            }
        }
    }
    VersionSpace vs;
    for (const Region& cell : cells) {
        bool consistent = true;
        for (const HalfspaceQuery& q : queries) {
            if (cell.signs[static_cast<std::size_t>(q.hyperplane)] != q.label) {
                consistent = false;
                break;
            }
        }
        if (consistent) vs.consistent.push_back(cell);
    }
    return vs;
}

VersionSpace versionSpace(const Arrangement& a, const std::vector<HalfspaceQuery>& queries) {
    for (const HalfspaceQuery& q : queries) {
        if (q.hyperplane < 0 || q.hyperplane >= a.size()) {
            throw std::invalid_argument("query references unknown hyperplane");
        }
    }
    return versionSpace(enumerateRegions(a), queries);
}

TeachingCensus teachingCensus(const Arrangement& a, const std::vector<Region>& cells) {
    TeachingCensus census;
    census.sizes.reserve(cells.size());
    for (const Region& cell : cells) {
        int size = 0;
        for (int id = 0; id < a.size(); ++id) {
            if (boundsCell(a, cell.signs, id)) ++size;
        }
        census.sizes.push_back(size);
        census.sum += size;
    }
    census.mean = cells.empty() ? Rational(0)
                                : Rational(BigInt(census.sum),
                                           BigInt(static_cast<long long>(cells.size())));
    return census;
}

TeachingCensus teachingCensus(const Arrangement& a) {
    return teachingCensus(a, enumerateRegions(a));
}

}  // namespace polyteach
