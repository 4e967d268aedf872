#include "polyteach/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <json.hpp>

#include "polyteach/counting.hpp"
#include "polyteach/dichotomy.hpp"
#include "polyteach/io.hpp"
#include "polyteach/learners.hpp"
#include "polyteach/ranking.hpp"
#include "polyteach/util.hpp"

namespace polyteach {

namespace {

struct Metrics {
    std::vector<double> values;

    void add(double v) { values.push_back(v); }
    double mean() const {
        return values.empty() ? 0.0
                              : std::accumulate(values.begin(), values.end(), 0.0) /
                                    static_cast<double>(values.size());
    }
    double max() const {
        return values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
    }
    double min() const {
        return values.empty() ? 0.0 : *std::min_element(values.begin(), values.end());
    }
};

void finalize(ExperimentReport& report, const ExperimentConfig& cfg, const Metrics& metrics,
              double bound, bool pass) {
    report.mean = metrics.mean();
    report.max = metrics.max();
    report.min = metrics.min();
    report.bound = bound;
    report.pass = pass;

    nlohmann::json summary;
    summary["mode"] = experimentModeName(cfg.mode);
    summary["n"] = cfg.n;
    summary["d"] = cfg.d;
    summary["dprime"] = cfg.dprime;
    summary["trials"] = cfg.trials;
    summary["seed"] = cfg.seed;
    summary["mean"] = report.mean;
    summary["max"] = report.max;
    summary["min"] = report.min;
    summary["bound"] = report.bound;
    summary["pass"] = report.pass;
    report.summaryJson = summary.dump(2);

    if (!cfg.csvPath.empty()) writeFile(cfg.csvPath, report.csv());
    if (!cfg.summaryPath.empty()) writeFile(cfg.summaryPath, report.summaryJson + "\n");
}

ExperimentReport runCountVerify(const ExperimentConfig& cfg) {
    ExperimentReport report;
    report.csvHeader = "trial,regions,faces,expected_regions,expected_faces,ok";
    Metrics metrics;
    bool pass = true;
    const BigInt expectedRegions = regionsRelaxed(cfg.n, cfg.dprime);
    const BigInt expectedFaces = facesRelaxed(cfg.n, cfg.dprime);
    for (int t = 0; t < cfg.trials; ++t) {
        const Arrangement a =
            randomArrangement(cfg.n, cfg.d, cfg.dprime, deriveSeed(cfg.seed, t));
        const BigInt regions(static_cast<long>(enumerateRegions(a).size()));
        const BigInt faces(enumerateFaces(a).total);
        const bool ok = regions == expectedRegions && faces == expectedFaces;
        pass = pass && ok;
        metrics.add(regions.convert_to<double>());
        report.csvRows.push_back(std::to_string(t) + "," + regions.str() + "," + faces.str() +
                                 "," + expectedRegions.str() + "," + expectedFaces.str() + "," +
                                 (ok ? "1" : "0"));
    }
    finalize(report, cfg, metrics, expectedRegions.convert_to<double>(), pass);
    return report;
}

ExperimentReport runTeachCensus(const ExperimentConfig& cfg) {
    ExperimentReport report;
    report.csvHeader = "trial,regions,faces,ts_sum,mean";
    Metrics metrics;
    bool pass = true;
    const Rational lower(cfg.dprime, 3);
    const Rational upper(2 * cfg.dprime);
    for (int t = 0; t < cfg.trials; ++t) {
        const Arrangement a =
            randomArrangement(cfg.n, cfg.d, cfg.dprime, deriveSeed(cfg.seed, t));
        const std::vector<Region> cells = enumerateRegions(a);
        const FaceEnumeration faces = enumerateFaces(a);
        const TeachingCensus census = teachingCensus(a, cells);
        const Rational expectedMean(2 * BigInt(faces.total),
                                    BigInt(static_cast<long>(cells.size())));
        bool ok = census.sum == 2 * faces.total && census.mean == expectedMean;
        if (cfg.n > 2 * cfg.dprime) {
            ok = ok && census.mean >= lower && census.mean <= upper;
        }
        pass = pass && ok;
        metrics.add(toDouble(census.mean));
        report.csvRows.push_back(std::to_string(t) + "," + std::to_string(cells.size()) + "," +
                                 std::to_string(faces.total) + "," +
                                 std::to_string(census.sum) + "," +
                                 toDecimalString(census.mean));
    }
    finalize(report, cfg, metrics, 2.0 * cfg.dprime, pass);
    return report;
}

ExperimentReport runLearner(const ExperimentConfig& cfg, bool active) {
    ExperimentReport report;
    report.csvHeader = "trial,target,requested";
    Metrics metrics;
    bool pass = true;
    const Arrangement a = randomArrangement(cfg.n, cfg.d, cfg.dprime, deriveSeed(cfg.seed, 0));
    const std::vector<Region> cells = enumerateRegions(a);
    for (int t = 0; t < cfg.trials; ++t) {
        std::mt19937_64 rng(deriveSeed(cfg.seed, static_cast<std::uint64_t>(t) + 1));
        std::uniform_int_distribution<std::size_t> pick(0, cells.size() - 1);
        const Region& target = cells[pick(rng)];
        LearnerTrace trace;
        if (active) {
            std::vector<int> order(static_cast<std::size_t>(a.size()));
            std::iota(order.begin(), order.end(), 0);
            std::shuffle(order.begin(), order.end(), rng);
            trace = activeLearnWithOrder(a, target, order);
            for (const LearnerStep& step : trace.steps) {
                if (step.label != target.signs[static_cast<std::size_t>(step.hyperplane)]) {
                    pass = false;  // an imputed label contradicted the target
                }
            }
        } else {
            trace = passiveLearn(a, cells, target, rng());
        }
        metrics.add(static_cast<double>(trace.requested));
        report.csvRows.push_back(std::to_string(t) + "," + signsToString(target.signs) + "," +
                                 std::to_string(trace.requested));
    }
    const double bound = active ? 2.0 * cfg.dprime * std::log2(static_cast<double>(cfg.n))
                                : static_cast<double>(cfg.n);
    pass = pass && metrics.mean() <= bound;
    finalize(report, cfg, metrics, bound, pass);
    return report;
}

ExperimentReport runDichotomy(const ExperimentConfig& cfg) {
    ExperimentReport report;
    report.csvHeader = "trial,classes,expected_classes,census_mean,ok";
    Metrics metrics;
    bool pass = true;
    const BigInt expectedClasses = regionsRelaxed(cfg.n - 1, cfg.d - 1);
    const Rational upper(2 * (cfg.d - 1));
    for (int t = 0; t < cfg.trials; ++t) {
        const PointSet ps = randomPointSet(cfg.n, cfg.d, deriveSeed(cfg.seed, t));
        const ClassCensus census = classCensus(ps, FeatureMap::identity());
        const BigInt classes(static_cast<long>(census.instance.classes.size()));
        bool ok = classes == expectedClasses;
        if (cfg.n - 1 > 2 * (cfg.d - 1)) ok = ok && census.mean <= upper;
        pass = pass && ok;
        metrics.add(toDouble(census.mean));
        report.csvRows.push_back(std::to_string(t) + "," + classes.str() + "," +
                                 expectedClasses.str() + "," + toDecimalString(census.mean) +
                                 "," + (ok ? "1" : "0"));
    }
    finalize(report, cfg, metrics, 2.0 * (cfg.d - 1), pass);
    return report;
}

ExperimentReport runRanking(const ExperimentConfig& cfg) {
    ExperimentReport report;
    report.csvHeader = "trial,cells,faces,ts_sum,census_mean,ok";
    Metrics metrics;
    bool pass = true;
    const BigInt expectedCells = rankingCells(cfg.n, cfg.d);
    const BigInt expectedFaces = rankingFaces(cfg.n, cfg.d);
    const Rational lower(cfg.d, 4);
    const Rational upper(3 * cfg.d);
    for (int t = 0; t < cfg.trials; ++t) {
        const RankingInstance instance = randomRankingInstance(cfg.n, cfg.d,
                                                               deriveSeed(cfg.seed, t));
        const Arrangement& a = instance.bisectorArrangement();
        const std::vector<Region> cells = enumerateRegions(a);
        const FaceEnumeration faces = enumerateFaces(a);
        const TeachingCensus census = teachingCensus(a, cells);
        bool ok = BigInt(static_cast<long>(cells.size())) == expectedCells &&
                  BigInt(faces.total) == expectedFaces && census.sum == 2 * faces.total &&
                  census.mean >= lower && census.mean <= upper;
        pass = pass && ok;
        metrics.add(toDouble(census.mean));
        report.csvRows.push_back(std::to_string(t) + "," + std::to_string(cells.size()) + "," +
                                 std::to_string(faces.total) + "," +
                                 std::to_string(census.sum) + "," +
                                 toDecimalString(census.mean) + "," + (ok ? "1" : "0"));
    }
    finalize(report, cfg, metrics, 3.0 * cfg.d, pass);
    return report;
}

ExperimentReport runWorstCase(const ExperimentConfig& cfg) {
    ExperimentReport report;
    report.csvHeader = "n,d,cap_ts_size,ok";
    Metrics metrics;
    const Arrangement a = worstCaseArrangement(cfg.n, cfg.d);
    const Region cap = locateRegion(a, Vector::Zero(a.dimension()));
    const TeachingSet ts = teachingSet(a, cap);
    const bool pass = ts.size() == cfg.n;
    metrics.add(static_cast<double>(ts.size()));
    report.csvRows.push_back(std::to_string(cfg.n) + "," + std::to_string(cfg.d) + "," +
                             std::to_string(ts.size()) + "," + (pass ? "1" : "0"));
    finalize(report, cfg, metrics, static_cast<double>(cfg.n), pass);
    return report;
}

}  // namespace

ExperimentMode experimentModeFromName(const std::string& name) {
    if (name == "teach-census") return ExperimentMode::TeachCensus;
    if (name == "active") return ExperimentMode::Active;
    if (name == "passive") return ExperimentMode::Passive;
    if (name == "dichotomy") return ExperimentMode::Dichotomy;
    if (name == "ranking") return ExperimentMode::Ranking;
    if (name == "count-verify") return ExperimentMode::CountVerify;
    if (name == "worst-case") return ExperimentMode::WorstCase;
    throw ConfigError("unknown experiment mode: " + name);
}

std::string experimentModeName(ExperimentMode mode) {
    switch (mode) {
        case ExperimentMode::TeachCensus: return "teach-census";
        case ExperimentMode::Active: return "active";
        case ExperimentMode::Passive: return "passive";
        case ExperimentMode::Dichotomy: return "dichotomy";
        case ExperimentMode::Ranking: return "ranking";
        case ExperimentMode::CountVerify: return "count-verify";
        case ExperimentMode::WorstCase: return "worst-case";
    }
    return "unknown";
}

std::string ExperimentReport::csv() const {
    std::string out = csvHeader + "\n";
    for (const std::string& row : csvRows) out += row + "\n";
    return out;
}

ExperimentReport runExperiment(const ExperimentConfig& cfg) {
    if (cfg.trials < 1) throw ConfigError("trials must be >= 1");
    if (cfg.dprime < 1 || cfg.dprime > cfg.d) throw ConfigError("need 1 <= d' <= d");
    switch (cfg.mode) {
        case ExperimentMode::CountVerify: return runCountVerify(cfg);
        case ExperimentMode::TeachCensus: return runTeachCensus(cfg);
        case ExperimentMode::Active: return runLearner(cfg, true);
        case ExperimentMode::Passive: return runLearner(cfg, false);
        case ExperimentMode::Dichotomy: return runDichotomy(cfg);
        case ExperimentMode::Ranking: return runRanking(cfg);
        case ExperimentMode::WorstCase: return runWorstCase(cfg);
    }
    throw ConfigError("unhandled experiment mode");
}

}  // namespace polyteach
