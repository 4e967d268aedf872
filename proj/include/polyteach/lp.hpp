#ifndef POLYTEACH_LP_HPP
#define POLYTEACH_LP_HPP

#include <optional>
#include <vector>

#include "polyteach/linalg.hpp"

namespace polyteach {

enum class Sense { Greater, Less };

/// One strict halfspace constraint: normal . z > bias  (or <).
struct StrictConstraint {
    Vector normal;
    Rational bias;
    Sense sense = Sense::Greater;
};

/// A conjunction of strict inequalities over R^dimension, i.e. an open
/// convex polyhedron.
struct StrictLP {
    Eigen::Index dimension = 0;
    std::vector<StrictConstraint> constraints;
};

/// Decides nonemptiness of the open polyhedron exactly and returns an
/// interior witness when it is nonempty.
///
/// Maximizes a common slack eps (capped at 1 to keep the LP bounded) over
/// the relaxed system via exact simplex with Bland's rule; the set is
/// nonempty iff the optimum is positive, and the returned point attains
/// that optimal slack on every constraint.
std::optional<Vector> strictlyFeasible(const StrictLP& lp);

inline std::optional<Vector> strictlyFeasible(Eigen::Index dimension,
                                              const std::vector<StrictConstraint>& constraints) {
    return strictlyFeasible(StrictLP{dimension, constraints});
}

/// True when the witness satisfies every constraint strictly; exact check.
bool satisfiesStrictly(const Vector& point, const StrictLP& lp);

}  // namespace polyteach

#endif
