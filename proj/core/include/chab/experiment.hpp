#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "chab/figures.hpp"
#include "chab/sequence.hpp"

namespace chab {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ExperimentKind { Decay, Figure, OracleSweep };
enum class FigureKind { LinePoints, DBouquet, Pinching, Layer, DecayCurve };

FigureKind figure_kind_from_name(const std::string& name);
const char* figure_kind_name(FigureKind k);

struct FigureSpec {
    FigureKind kind = FigureKind::DBouquet;
    std::vector<double> generators{1.0, 0.1};  // line-points
    int m_max = 4;                             // d-bouquet
    int m = 1;                                 // pinching / layer
    int q_max = 3;                             // layer
    Rational theta{1, 2};                      // pinching
    std::optional<SequenceSpec> spec;          // decay-curve
    std::vector<long long> n_values{10, 100, 1000};
    double trunc_radius = 6.0;
    double step = 0.05;
};

struct ExperimentConfig {
    int version = 1;
    ExperimentKind kind = ExperimentKind::Decay;
    std::optional<SequenceSpec> spec;  // decay
    std::vector<long long> n_values{10, 100, 1000};
    double trunc_radius = 6.0;
    double step = 0.05;
    std::optional<FigureSpec> figure;  // figure
    int pairs = 50;                    // oracle sweep
    std::uint64_t seed = 1;
    std::filesystem::path out_dir = "out";
};

/// Parses and validates a version-1 config file; CHAB_OUT overrides the
/// output directory when set.
ExperimentConfig load_config(const std::filesystem::path& path);
ExperimentConfig config_from_json_text(const std::string& text);

struct RunArtifacts {
    std::vector<std::filesystem::path> files;
};

/// Executes the experiment and persists results.json / data.csv /
/// figure.svg as applicable. File writes are atomic
/// (write-temp-then-rename). Throws ConfigError / NumericError.
RunArtifacts run_experiment(const ExperimentConfig& config);

struct OracleSweepReport {
    int pairs_per_space = 0;
    int mismatches = 0;
    double max_difference = 0.0;  // |grid - brute| worst case
};

/// Random compactified cloud for engine stress tests. The x scale is
/// mixed so clouds reach the crushed region near infinity;
/// `concentrate_near_infinity` pushes everything out there.
SubgroupSample random_cloud(SpaceKind space, std::size_t max_size, std::uint64_t seed,
                            bool concentrate_near_infinity = false);

/// Grid-vs-brute equivalence sweep over random cloud pairs on both
/// spaces (every fourth pair concentrated near infinity). A mismatch is
/// a deviation beyond 1e-12.
OracleSweepReport sweep_oracle(int pairs_per_space, std::uint64_t seed);

/// Atomic text file write used for all artifacts.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace chab
