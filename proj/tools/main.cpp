#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "polyteach/counting.hpp"
#include "polyteach/dichotomy.hpp"
#include "polyteach/experiment.hpp"
#include "polyteach/io.hpp"
#include "polyteach/learners.hpp"
#include "polyteach/ranking.hpp"

namespace {

using nlohmann::json;
using namespace polyteach;

json teachingSetToJson(const TeachingSet& ts) {
    json out;
    out["target"] = signsToString(ts.target.signs);
    json queries = json::array();
    for (const HalfspaceQuery& q : ts.queries) {
        queries.push_back({{"hyperplane", q.hyperplane}, {"label", q.label}});
    }
    out["queries"] = std::move(queries);
    out["size"] = ts.size();
    return out;
}

json censusToJson(const TeachingCensus& census) {
    json histogram = json::object();
    for (int size : census.sizes) {
        const std::string key = std::to_string(size);
        histogram[key] = histogram.value(key, 0) + 1;
    }
    json out;
    out["sizes_histogram"] = std::move(histogram);
    out["sum"] = census.sum;
    out["mean"] = toString(census.mean);
    out["mean_decimal"] = toDecimalString(census.mean);
    return out;
}

int runCount(int n, int dprime) {
    json out;
    out["regions"] = regionsRelaxed(n, dprime).str();
    out["faces"] = facesRelaxed(n, dprime).str();
    const Rational mean = avgTeaching(n, dprime);
    out["avg_teaching"] = toString(mean);
    out["avg_teaching_decimal"] = toDecimalString(mean);
    if (n > 2 * dprime) {
        const auto [lower, upper] = regionBounds(n, dprime);
        out["bounds"] = {{"lower", toString(lower)}, {"upper", toString(upper)}};
    } else {
        out["bounds"] = nullptr;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int runEnumerate(const std::string& path, bool withFaces) {
    Arrangement a = arrangementFromJson(readFile(path));
    const PositionReport& report = a.ensurePosition();
    json out;
    out["n"] = a.size();
    out["dimension"] = static_cast<long>(a.dimension());
    if (report.isRelaxedGeneral()) {
        out["position_class"] = report.positionClass;
    } else {
        json violation;
        violation["subset"] = report.violatingSubset;
        violation["intersection_dimension"] = report.observedDimension;
        out["position_violation"] = std::move(violation);
    }
    const std::vector<Region> cells = enumerateRegions(a);
    json regions = json::array();
    for (const Region& cell : cells) {
        regions.push_back(json::parse(regionToJson(cell, -1)));
    }
    out["region_count"] = cells.size();
    out["regions"] = std::move(regions);
    if (withFaces) {
        const FaceEnumeration faces = enumerateFaces(a);
        out["face_total"] = faces.total;
        json perPlane = json::array();
        for (const HyperplaneFaces& entry : faces.perHyperplane) {
            perPlane.push_back({{"hyperplane", entry.hyperplane},
                                {"faces", entry.faces.size()},
                                {"cutters", entry.cutters}});
        }
        out["faces_per_hyperplane"] = std::move(perPlane);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int runTeach(const std::string& path, const std::string& signsText) {
    const Arrangement a = arrangementFromJson(readFile(path));
    const SignVector signs = signsFromString(signsText);
    if (static_cast<int>(signs.size()) != a.size()) {
        throw std::invalid_argument("--region length must equal the hyperplane count");
    }
    const auto witness = strictlyFeasible(a.dimension(), cellConstraints(a, signs));
    if (!witness) throw std::invalid_argument("sign vector names an empty cell");
    const TeachingSet ts = teachingSet(a, Region{signs, *witness});
    std::cout << teachingSetToJson(ts).dump(2) << "\n";
    return 0;
}

int runCensus(const std::string& path) {
    const Arrangement a = arrangementFromJson(readFile(path));
    const TeachingCensus census = teachingCensus(a);
    std::cout << censusToJson(census).dump(2) << "\n";
    return 0;
}

int runDichotomy(const std::string& path, const std::string& phiName, bool listClasses) {
    const auto [raw, dimension] = pointsFromJson(readFile(path));
    const PointSet ps = normalizeLastToBasis(raw);
    FeatureMap phi = FeatureMap::identity();
    if (phiName == "monomial2") {
        phi = FeatureMap::monomials2();
    } else if (phiName != "identity") {
        throw ConfigError("--phi must be identity or monomial2");
    }
    const ClassCensus census = classCensus(ps, phi);

    json out;
    out["n"] = ps.size();
    out["dimension"] = static_cast<long>(dimension);
    out["phi"] = phiName;
    out["position_class"] = ps.positionClass();
    out["class_count"] = census.instance.classes.size();
    json sizes = json::array();
    for (int s : census.sizes) sizes.push_back(s);
    out["teaching_sizes"] = std::move(sizes);
    out["mean"] = toString(census.mean);
    out["mean_decimal"] = toDecimalString(census.mean);
    if (listClasses && phiName == "identity" &&
        ps.positionClass() == static_cast<int>(ps.dimension())) {
        json classes = json::array();
        for (const Dichotomy& dich : census.instance.classes) {
            json entry;
            std::string labels;
            for (int l : dich.labels) labels.push_back(l > 0 ? '+' : '-');
            entry["labels"] = labels;
            entry["extreme_points"] = extremePoints(ps, dich);
            classes.push_back(std::move(entry));
        }
        out["classes"] = std::move(classes);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int runRank(const std::string& path, bool withCensus) {
    const auto [objects, dimension] = pointsFromJson(readFile(path));
    (void)dimension;
    const RankingInstance instance = bisectors(objects);
    const CellRankingTable table = validateE1(instance);

    json out;
    out["objects"] = instance.objectCount();
    out["bisectors"] = instance.bisectorArrangement().size();
    out["cells"] = table.cells.size();
    json rankings = json::array();
    for (std::size_t i = 0; i < table.cells.size(); ++i) {
        rankings.push_back({{"signs", signsToString(table.cells[i].signs)},
                            {"order", table.rankings[i].order}});
    }
    out["cell_rankings"] = std::move(rankings);
    if (withCensus) {
        const TeachingCensus census =
            teachingCensus(instance.bisectorArrangement(), table.cells);
        out["census"] = censusToJson(census);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int runWorstCase(int n, int d) {
    const Arrangement a = worstCaseArrangement(n, d);
    const Region cap = locateRegion(a, Vector::Zero(a.dimension()));
    const TeachingSet ts = teachingSet(a, cap);
    json out = json::parse(arrangementToJson(a, -1));
    out["cap_region"] = signsToString(cap.signs);
    out["cap_teaching_size"] = ts.size();
    std::cout << out.dump(2) << "\n";
    return ts.size() == n ? 0 : 1;
}

int emitExperiment(const ExperimentConfig& cfg, const std::string& format) {
    const ExperimentReport report = runExperiment(cfg);
    if (format == "csv") {
        std::cout << report.csv();
    } else {
        std::cout << report.summaryJson << "\n";
    }
    return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact geometry of hyperplane-arrangement teaching and learning"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags (--seed, --trials, ...) after the subcommand

    std::uint64_t seed = 0;
    int trials = 1;
    std::string outPath;
    std::string format = "json";
    app.add_option("--seed", seed, "RNG seed")->capture_default_str();
    app.add_option("--trials", trials, "trial count")->capture_default_str();
    app.add_option("--out", outPath, "write per-trial CSV here");
    app.add_option("--format", format, "stdout format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    int n = 3, d = 2, dprime = 2;
    std::string arrangementPath, pointsPath, regionSigns, phiName = "identity", modeName;
    bool withFaces = false, withCensus = false, listClasses = false;

    CLI::App* count = app.add_subcommand("count", "closed-form counts for (n, d')");
    count->add_option("--n", n)->required();
    count->add_option("--dprime", dprime)->required();

    CLI::App* enumerate = app.add_subcommand("enumerate", "cells of an arrangement file");
    enumerate->add_option("--arrangement", arrangementPath)->required();
    enumerate->add_flag("--faces", withFaces, "also enumerate faces");

    CLI::App* teach = app.add_subcommand("teach", "teaching set of one cell");
    teach->add_option("--arrangement", arrangementPath)->required();
    teach->add_option("--region", regionSigns, "cell sign vector, e.g. ++-")->required();

    CLI::App* census = app.add_subcommand("census", "teaching sizes of every cell");
    census->add_option("--arrangement", arrangementPath)->required();

    CLI::App* active = app.add_subcommand("learn-active", "simulate the query-selection learner");
    active->add_option("--n", n)->required();
    active->add_option("--d", d);
    active->add_option("--dprime", dprime);

    CLI::App* passive = app.add_subcommand("learn-passive", "simulate the i.i.d. learner");
    passive->add_option("--n", n)->required();
    passive->add_option("--d", d);
    passive->add_option("--dprime", dprime);

    CLI::App* dichotomy = app.add_subcommand("dichotomy", "separable classes of a point file");
    dichotomy->add_option("--points", pointsPath)->required();
    dichotomy->add_option("--phi", phiName, "identity or monomial2")->capture_default_str();
    dichotomy->add_flag("--classes", listClasses, "list per-class extreme points");

    CLI::App* rank = app.add_subcommand("rank", "cells and rankings of an object file");
    rank->add_option("--objects", pointsPath)->required();
    rank->add_flag("--census", withCensus, "include the teaching census");

    CLI::App* worst = app.add_subcommand("worst-case", "tangent construction with an n-face cell");
    worst->add_option("--n", n)->required();
    worst->add_option("--d", d);

    CLI::App* experiment = app.add_subcommand("experiment", "seeded experiment campaign");
    experiment->add_option("--mode", modeName, "teach-census|active|passive|dichotomy|ranking|"
                                               "count-verify|worst-case")
        ->required();
    experiment->add_option("--n", n)->required();
    experiment->add_option("--d", d);
    experiment->add_option("--dprime", dprime);

    CLI11_PARSE(app, argc, argv);

    try {
        if (count->parsed()) return runCount(n, dprime);
        if (enumerate->parsed()) return runEnumerate(arrangementPath, withFaces);
        if (teach->parsed()) return runTeach(arrangementPath, regionSigns);
        if (census->parsed()) return runCensus(arrangementPath);
        if (dichotomy->parsed()) return runDichotomy(pointsPath, phiName, listClasses);
        if (rank->parsed()) return runRank(pointsPath, withCensus);
        if (worst->parsed()) return runWorstCase(n, d);

        ExperimentConfig cfg;
        cfg.n = n;
        cfg.d = d;
        cfg.dprime = dprime;
        cfg.trials = trials;
        cfg.seed = seed;
        cfg.csvPath = outPath;
        if (active->parsed()) {
            cfg.mode = ExperimentMode::Active;
        } else if (passive->parsed()) {
            cfg.mode = ExperimentMode::Passive;
        } else {
            cfg.mode = experimentModeFromName(modeName);
        }
        return emitExperiment(cfg, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
