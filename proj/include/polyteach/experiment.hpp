#ifndef POLYTEACH_EXPERIMENT_HPP
#define POLYTEACH_EXPERIMENT_HPP

#include <string>
#include <vector>

#include "polyteach/rational.hpp"

namespace polyteach {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ExperimentMode {
    TeachCensus,
    Active,
    Passive,
    Dichotomy,
    Ranking,
    CountVerify,
    WorstCase,
};

ExperimentMode experimentModeFromName(const std::string& name);
std::string experimentModeName(ExperimentMode mode);

struct ExperimentConfig {
    ExperimentMode mode = ExperimentMode::CountVerify;
    int n = 0;
    int d = 2;
    int dprime = 2;
    int trials = 1;
    std::uint64_t seed = 0;
    std::string csvPath;      // written when nonempty
    std::string summaryPath;  // written when nonempty
};

/// Per-trial records plus a summary checked against the mode's theoretical
/// bound. Identical configs reproduce identical reports byte for byte; all
/// randomness is derived per trial from (seed, trial index).
struct ExperimentReport {
    std::string csvHeader;
    std::vector<std::string> csvRows;
    double mean = 0;
    double max = 0;
    double min = 0;
    double bound = 0;
    bool pass = false;
    std::string summaryJson;

    std::string csv() const;
};

ExperimentReport runExperiment(const ExperimentConfig& cfg);

}  // namespace polyteach

#endif
