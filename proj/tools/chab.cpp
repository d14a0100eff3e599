// chab: convergence experiments and figures for closed-subgroup spaces
// of the line and the punctured plane.
//
//   chab run <config.json>            config-driven experiment
//   chab figure <kind> [options]      direct figure emission
//   chab sweep-oracle [options]       grid-vs-brute equivalence sweep

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "chab/experiment.hpp"
#include "chab/json_io.hpp"

namespace {

constexpr int kExitBadConfig = 1;
constexpr int kExitNumeric = 2;

int run_config(const std::string& path) {
    const chab::ExperimentConfig config = chab::load_config(path);
    const chab::RunArtifacts artifacts = chab::run_experiment(config);
    for (const auto& f : artifacts.files) std::cout << "wrote " << f.string() << "\n";
    return 0;
}

int run_figure(const chab::FigureSpec& figure, const std::string& out_dir,
               std::uint64_t seed) {
    chab::ExperimentConfig config;
    config.kind = chab::ExperimentKind::Figure;
    config.figure = figure;
    config.seed = seed;
    config.out_dir = out_dir;
    if (const char* env = std::getenv("CHAB_OUT")) config.out_dir = env;
    const chab::RunArtifacts artifacts = chab::run_experiment(config);
    for (const auto& f : artifacts.files) std::cout << "wrote " << f.string() << "\n";
    return 0;
}

int run_sweep(int pairs, std::uint64_t seed, const std::string& out_dir) {
    chab::ExperimentConfig config;
    config.kind = chab::ExperimentKind::OracleSweep;
    config.pairs = pairs;
    config.seed = seed;
    config.out_dir = out_dir;
    if (const char* env = std::getenv("CHAB_OUT")) config.out_dir = env;
    const chab::RunArtifacts artifacts = chab::run_experiment(config);
    for (const auto& f : artifacts.files) std::cout << "wrote " << f.string() << "\n";
    std::cout << "oracle sweep: 0 mismatches\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"closed-subgroup spaces of R and C*: samples, Hausdorff distances, figures"};
    app.require_subcommand(1);

    std::string config_path;
    auto* run = app.add_subcommand("run", "run an experiment from a JSON config");
    run->add_option("config", config_path, "path to config.json")->required();

    std::string figure_kind;
    std::string out_dir = "out";
    std::uint64_t seed = 1;
    std::vector<double> generators;
    int m = 1, q_max = 3, m_max = 4;
    std::vector<std::int64_t> theta_pq;
    std::string spec_path;
    std::vector<long long> n_values;
    double R = 6.0, delta = 0.05;

    auto* fig = app.add_subcommand("figure", "emit one figure as SVG");
    fig->add_option("kind", figure_kind,
                    "line-points | d-bouquet | pinching | layer | decay-curve")
        ->required();
    fig->add_option("--r", generators, "generators for line-points");
    fig->add_option("--m", m, "family index (pinching, layer)");
    fig->add_option("--q-max", q_max, "largest denominator marked (layer)");
    fig->add_option("--m-max", m_max, "number of petals (d-bouquet)");
    fig->add_option("--theta", theta_pq, "rational angle p q (pinching)")->expected(2);
    fig->add_option("--spec", spec_path, "sequence spec JSON file (decay-curve)");
    fig->add_option("--n", n_values, "sequence indices (decay-curve)");
    fig->add_option("--R", R, "truncation radius (decay-curve)");
    fig->add_option("--delta", delta, "sampling step (decay-curve)");
    fig->add_option("--out", out_dir, "output directory");

    int pairs = 50;
    auto* sweep = app.add_subcommand("sweep-oracle", "grid vs brute equivalence sweep");
    sweep->add_option("--pairs", pairs, "random pairs per space");
    sweep->add_option("--seed", seed, "random seed");
    sweep->add_option("--out", out_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return run_config(config_path);
        if (fig->parsed()) {
            chab::FigureSpec f;
            f.kind = chab::figure_kind_from_name(figure_kind);
            if (!generators.empty()) f.generators = generators;
            f.m = m;
            f.q_max = q_max;
            f.m_max = m_max;
            if (!theta_pq.empty()) f.theta = chab::Rational(theta_pq[0], theta_pq[1]);
            if (!spec_path.empty()) {
                std::ifstream in(spec_path);
                if (!in) throw chab::ConfigError("cannot open spec file: " + spec_path);
                std::string text((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
                f.spec = chab::sequence_spec_from_json(nlohmann::json::parse(text));
            }
            if (!n_values.empty()) f.n_values = n_values;
            f.trunc_radius = R;
            f.step = delta;
            return run_figure(f, out_dir, seed);
        }
        if (sweep->parsed()) return run_sweep(pairs, seed, out_dir);
    } catch (const chab::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadConfig;
    } catch (const chab::NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadConfig;
    }
    return 0;
}
