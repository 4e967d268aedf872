#ifndef POLYTEACH_LEARNERS_HPP
#define POLYTEACH_LEARNERS_HPP

#include "polyteach/teaching.hpp"

namespace polyteach {

enum class StepAction { Requested, Imputed };

struct LearnerStep {
    int hyperplane = -1;
    StepAction action = StepAction::Requested;
    int label = 0;
};

/// Record of one learning run. For the active learner every hyperplane
/// appears exactly once and the inferred labels reproduce the target's sign
/// vector; the passive learner stops at a singleton version space, so its
/// step list may be a prefix.
struct LearnerTrace {
    Region target;
    std::vector<int> order;
    std::vector<LearnerStep> steps;
    int requested = 0;  // M_n

    std::vector<HalfspaceQuery> knownQueries() const;
};

struct StillAmbiguous : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Label of h forced by the known constraints (exactly one side of h is
/// strictly feasible with them). Throws StillAmbiguous when both sides are
/// feasible and EmptyConstraintRegion when neither is.
int imputeLabel(const Arrangement& a, const Hyperplane& h,
                const std::vector<HalfspaceQuery>& known);

/// Sequential learner: visits hyperplanes in the given order, requests the
/// target's label when the hyperplane cuts the current constraint cell and
/// imputes it otherwise.
LearnerTrace activeLearnWithOrder(const Arrangement& a, const Region& target,
                                  const std::vector<int>& order);

/// Same, over a seed-determined uniformly random order.
LearnerTrace activeLearn(const Arrangement& a, const Region& target, std::uint64_t seed);

/// Passive learner: requests labels along `draws` (indices into the
/// hyperplanes, possibly repeating) until the version space over `cells` is
/// a singleton.
LearnerTrace passiveLearnWithDraws(const Arrangement& a, const std::vector<Region>& cells,
                                   const Region& target, const std::vector<int>& draws);

/// Uniform passive draws; without replacement by default per the sampling
/// model, with replacement available for sensitivity runs.
LearnerTrace passiveLearn(const Arrangement& a, const std::vector<Region>& cells,
                          const Region& target, std::uint64_t seed,
                          bool withReplacement = false);
LearnerTrace passiveLearn(const Arrangement& a, const Region& target, std::uint64_t seed,
                          bool withReplacement = false);

/// Empirical per-step request frequency over `trials` runs with independent
/// uniform targets and orders; entry k is the fraction of trials whose
/// (k+1)-th visited hyperplane had to be requested.
std::vector<double> ambiguityProfile(const Arrangement& a, const std::vector<Region>& cells,
                                     int trials, std::uint64_t seed);
std::vector<double> ambiguityProfile(const Arrangement& a, int trials, std::uint64_t seed);

}  // namespace polyteach

#endif
