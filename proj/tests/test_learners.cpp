#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "polyteach/learners.hpp"

using namespace polyteach;

namespace {

Hyperplane verticalLine(long offset) {
    Vector n(2);
    n << Rational(1), Rational(0);
    return Hyperplane{std::move(n), Rational(offset)};
}

Arrangement parallelLines(std::initializer_list<long> offsets) {
    std::vector<Hyperplane> planes;
    for (long b : offsets) planes.push_back(verticalLine(b));
    return Arrangement(2, std::move(planes));
}

Arrangement triangle() {
    std::vector<Hyperplane> planes;
    Vector ex(2), ey(2), diag(2);
    ex << Rational(1), Rational(0);
    ey << Rational(0), Rational(1);
    diag << Rational(1), Rational(1);
    planes.push_back(Hyperplane{ex, Rational(0)});
    planes.push_back(Hyperplane{ey, Rational(0)});
    planes.push_back(Hyperplane{diag, Rational(1)});
    return Arrangement(2, std::move(planes));
}

Region slabRegion(const Arrangement& a) {  // 0 < x < 1 in the 3-line arrangement
    Vector z(2);
    z << Rational(1, 2), Rational(0);
    return locateRegion(a, z);
}

}  // namespace

TEST_CASE("active learner on three parallel lines requests twice, imputes once") {
    const Arrangement a = parallelLines({0, 1, 2});
    const LearnerTrace trace = activeLearnWithOrder(a, slabRegion(a), {0, 1, 2});
    REQUIRE(trace.steps.size() == 3);
    CHECK(trace.steps[0].action == StepAction::Requested);
    CHECK(trace.steps[0].label == 1);
    CHECK(trace.steps[1].action == StepAction::Requested);
    CHECK(trace.steps[1].label == -1);
    CHECK(trace.steps[2].action == StepAction::Imputed);
    CHECK(trace.steps[2].label == -1);  // x = 2 cannot cut {0 < x < 1}
    CHECK(trace.requested == 2);
}

TEST_CASE("single hyperplane always costs one request") {
    const Arrangement a = parallelLines({0});
    for (const Region& target : enumerateRegions(a)) {
        CHECK(activeLearn(a, target, 5).requested == 1);
        CHECK(passiveLearn(a, target, 5).requested == 1);
    }
}

TEST_CASE("triangle bounded cell with order (h3,h1,h2) requests every label") {
    const Arrangement a = triangle();
    Vector inside(2);
    inside << Rational(1, 4), Rational(1, 4);
    const LearnerTrace trace = activeLearnWithOrder(a, locateRegion(a, inside), {2, 0, 1});
    CHECK(trace.requested == 3);
    for (const LearnerStep& step : trace.steps) CHECK(step.action == StepAction::Requested);
}

TEST_CASE("imputeLabel returns the forced side and rejects ambiguous calls") {
    const Arrangement strip(2, {verticalLine(0), verticalLine(1), verticalLine(2)});
    const std::vector<HalfspaceQuery> slab = {{0, 1}, {1, -1}};  // 0 < x < 1
    CHECK(imputeLabel(strip, strip.hyperplane(2), slab) == -1);

    const Arrangement far(2, {verticalLine(0), verticalLine(-5)});
    CHECK(imputeLabel(far, far.hyperplane(1), {{0, 1}}) == 1);

    const Arrangement mid(2, {verticalLine(0), verticalLine(1), Hyperplane{[] {
                                  Vector n(2);
                                  n << Rational(2), Rational(0);
                                  return n;
                              }(), Rational(1)}});  // x = 1/2
    CHECK_THROWS_AS(imputeLabel(mid, mid.hyperplane(2), slab), StillAmbiguous);
}

TEST_CASE("active learner is always correct and never exceeds n requests") {
    for (const Arrangement& a : {triangle(), randomArrangement(6, 2, 2, 61),
                                 randomArrangement(6, 3, 2, 62)}) {
        const std::vector<Region> cells = enumerateRegions(a);
        for (const Region& target : cells) {
            for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
                const LearnerTrace trace = activeLearn(a, target, seed);
                CHECK(trace.requested <= a.size());
                CHECK(trace.steps.size() == static_cast<std::size_t>(a.size()));
                for (const LearnerStep& step : trace.steps) {
                    CHECK(step.label ==
                          target.signs[static_cast<std::size_t>(step.hyperplane)]);
                }
            }
        }
    }
}

TEST_CASE("traces are reproducible for a fixed seed") {
    const Arrangement a = randomArrangement(7, 2, 2, 63);
    const Region target = enumerateRegions(a).front();
    const LearnerTrace t1 = activeLearn(a, target, 99);
    const LearnerTrace t2 = activeLearn(a, target, 99);
    CHECK(t1.order == t2.order);
    CHECK(t1.requested == t2.requested);
    const LearnerTrace p1 = passiveLearn(a, target, 99);
    const LearnerTrace p2 = passiveLearn(a, target, 99);
    CHECK(p1.order == p2.order);
    CHECK(p1.requested == p2.requested);
}

TEST_CASE("passive learner on the slab stops once both cutting lines are drawn") {
    const Arrangement a = parallelLines({0, 1, 2});
    const std::vector<Region> cells = enumerateRegions(a);
    const Region target = slabRegion(a);

    // Exact expectation over the six draw orders: (2+2+3+3+3+3)/6 = 8/3.
    const std::vector<std::vector<int>> orders = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                                  {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    int total = 0;
    for (const std::vector<int>& order : orders) {
        total += passiveLearnWithDraws(a, cells, target, order).requested;
    }
    CHECK(Rational(total, 6) == Rational(8, 3));
}

TEST_CASE("passive learner must see every face of the worst-case cap") {
    const Arrangement a = worstCaseArrangement(5, 2);
    const std::vector<Region> cells = enumerateRegions(a);
    const Region cap = locateRegion(a, Vector::Zero(2));
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        CHECK(passiveLearn(a, cells, cap, seed).requested == 5);
    }
}

TEST_CASE("mean requests: active <= passive <= n") {
    const Arrangement a = randomArrangement(8, 2, 2, 64);
    const std::vector<Region> cells = enumerateRegions(a);
    double activeSum = 0;
    double passiveSum = 0;
    int runs = 0;
    for (std::size_t c = 0; c < cells.size(); ++c) {
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            activeSum += activeLearn(a, cells[c], seed).requested;
            passiveSum += passiveLearn(a, cells, cells[c], seed).requested;
            ++runs;
        }
    }
    CHECK(activeSum / runs <= passiveSum / runs);
    CHECK(passiveSum / runs <= static_cast<double>(a.size()));
}

TEST_CASE("ambiguityProfile always requests the first query") {
    const Arrangement a = randomArrangement(8, 2, 2, 65);
    const std::vector<double> profile = ambiguityProfile(a, 50, 7);
    REQUIRE(profile.size() == 8);
    CHECK(profile[0] == 1.0);
    for (double f : profile) {
        CHECK(f >= 0.0);
        CHECK(f <= 1.0);
    }
}

TEST_CASE("ambiguityProfile respects the 2d'/k bound with binomial slack") {
    const Arrangement a = randomArrangement(10, 2, 2, 66);
    const int trials = 400;
    const std::vector<double> profile = ambiguityProfile(a, trials, 11);
    for (int k = 5; k < 10; ++k) {  // bound applies for k > 2d'
        const double p = 2.0 * 2 / k;
        const double sigma = std::sqrt(p * (1 - p) / trials);
        CHECK(profile[static_cast<std::size_t>(k)] <= p + 3 * sigma);
    }
}

TEST_CASE("ambiguityProfile at d'=1 obeys the 2/k bound for large k") {
    const Arrangement a = randomArrangement(14, 2, 1, 67);
    const int trials = 400;
    const std::vector<double> profile = ambiguityProfile(a, trials, 13);
    for (int k = 3; k < 14; ++k) {
        const double p = 2.0 / k;
        const double sigma = std::sqrt(p * (1 - p) / trials);
        CHECK(profile[static_cast<std::size_t>(k)] <= p + 3 * sigma);
    }
}
