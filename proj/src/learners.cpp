#include "polyteach/learners.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "polyteach/util.hpp"

namespace polyteach {

std::vector<HalfspaceQuery> LearnerTrace::knownQueries() const {
    std::vector<HalfspaceQuery> queries;
    queries.reserve(steps.size());
    for (const LearnerStep& step : steps) {
        queries.push_back(HalfspaceQuery{step.hyperplane, step.label});
    }
    return queries;
}

int imputeLabel(const Arrangement& a, const Hyperplane& h,
                const std::vector<HalfspaceQuery>& known) {
    std::vector<StrictConstraint> base = queryConstraints(a, known);
    base.push_back(signedConstraint(h, +1));
    const bool above = strictlyFeasible(a.dimension(), base).has_value();
    base.back() = signedConstraint(h, -1);
    const bool below = strictlyFeasible(a.dimension(), base).has_value();
    if (above && below) throw StillAmbiguous("imputeLabel: both sides remain feasible");
    if (!above && !below) throw EmptyConstraintRegion("imputeLabel: known constraints infeasible");
    return above ? 1 : -1;
}

LearnerTrace activeLearnWithOrder(const Arrangement& a, const Region& target,
                                  const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != a.size()) {
        throw std::invalid_argument("activeLearn: order must visit every hyperplane once");
    }
    LearnerTrace trace;
    trace.target = target;
    trace.order = order;
    std::vector<StrictConstraint> base;
    base.reserve(order.size() + 1);
    for (int id : order) {
        const Hyperplane& h = a.hyperplane(id);
        // One feasibility probe per side decides ambiguity and, when only
        // one side survives, yields the imputed label in the same pass.
        base.push_back(signedConstraint(h, +1));
        const bool above = strictlyFeasible(a.dimension(), base).has_value();
        base.back() = signedConstraint(h, -1);
        const bool below = strictlyFeasible(a.dimension(), base).has_value();
        base.pop_back();

        LearnerStep step;
        step.hyperplane = id;
        if (above && below) {
            step.action = StepAction::Requested;
            step.label = labelOf(target, h);
            ++trace.requested;
        } else if (above || below) {
            step.action = StepAction::Imputed;
            step.label = above ? 1 : -1;
        } else {
            throw std::logic_error("activeLearn: constraint cell became empty");
        }
        base.push_back(signedConstraint(h, step.label));
        trace.steps.push_back(step);
    }
    return trace;
}

LearnerTrace activeLearn(const Arrangement& a, const Region& target, std::uint64_t seed) {
    std::vector<int> order(static_cast<std::size_t>(a.size()));
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    return activeLearnWithOrder(a, target, order);
}

namespace {

// Incremental passive run over a draw stream; stops at a singleton version
// space. Returns false if the stream ran out first.
bool passiveRun(const Arrangement& a, const std::vector<Region>& cells, const Region& target,
                const std::function<std::optional<int>()>& nextDraw, LearnerTrace& trace) {
    std::vector<const Region*> alive;
    alive.reserve(cells.size());
    for (const Region& cell : cells) alive.push_back(&cell);

    while (alive.size() > 1) {
        const std::optional<int> id = nextDraw();
        if (!id) return false;
        trace.order.push_back(*id);
        const int label = labelOf(target, a.hyperplane(*id));
        trace.steps.push_back(LearnerStep{*id, StepAction::Requested, label});
        ++trace.requested;
        std::erase_if(alive, [&](const Region* cell) {
            return cell->signs[static_cast<std::size_t>(*id)] != label;
        });
    }
    return alive.size() == 1;
}

}  // namespace

LearnerTrace passiveLearnWithDraws(const Arrangement& a, const std::vector<Region>& cells,
                                   const Region& target, const std::vector<int>& draws) {
    LearnerTrace trace;
    trace.target = target;
    std::size_t next = 0;
    const bool done = passiveRun(a, cells, target,
                                 [&]() -> std::optional<int> {
                                     if (next == draws.size()) return std::nullopt;
                                     return draws[next++];
                                 },
                                 trace);
    if (!done) {
        throw std::invalid_argument("passiveLearn: draws exhausted before the version space "
                                    "became a singleton");
    }
    return trace;
}

LearnerTrace passiveLearn(const Arrangement& a, const std::vector<Region>& cells,
                          const Region& target, std::uint64_t seed, bool withReplacement) {
    std::mt19937_64 rng(seed);
    LearnerTrace trace;
    trace.target = target;
    if (withReplacement) {
        std::uniform_int_distribution<int> pick(0, a.size() - 1);
        passiveRun(a, cells, target, [&]() -> std::optional<int> { return pick(rng); }, trace);
        return trace;
    }
    std::vector<int> draws(static_cast<std::size_t>(a.size()));
    std::iota(draws.begin(), draws.end(), 0);
    std::shuffle(draws.begin(), draws.end(), rng);
    return passiveLearnWithDraws(a, cells, target, draws);
}

LearnerTrace passiveLearn(const Arrangement& a, const Region& target, std::uint64_t seed,
                          bool withReplacement) {
    return passiveLearn(a, enumerateRegions(a), target, seed, withReplacement);
}

std::vector<double> ambiguityProfile(const Arrangement& a, const std::vector<Region>& cells,
                                     int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("ambiguityProfile: trials must be >= 1");
    std::vector<long> requestedAt(static_cast<std::size_t>(a.size()), 0);
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(deriveSeed(seed, static_cast<std::uint64_t>(t)));
        std::uniform_int_distribution<std::size_t> pick(0, cells.size() - 1);
        const Region& target = cells[pick(rng)];
        std::vector<int> order(static_cast<std::size_t>(a.size()));
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        const LearnerTrace trace = activeLearnWithOrder(a, target, order);
        for (std::size_t k = 0; k < trace.steps.size(); ++k) {
            if (trace.steps[k].action == StepAction::Requested) ++requestedAt[k];
        }
    }
    std::vector<double> frequency(requestedAt.size());
    for (std::size_t k = 0; k < requestedAt.size(); ++k) {
        frequency[k] = static_cast<double>(requestedAt[k]) / static_cast<double>(trials);
    }
    return frequency;
}

std::vector<double> ambiguityProfile(const Arrangement& a, int trials, std::uint64_t seed) {
    return ambiguityProfile(a, enumerateRegions(a), trials, seed);
}

}  // namespace polyteach
