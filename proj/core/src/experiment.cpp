#include "chab/experiment.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <random>

#include "chab/hausdorff.hpp"
#include "chab/json_io.hpp"
#include "chab/metric.hpp"

namespace chab {

using nlohmann::json;

FigureKind figure_kind_from_name(const std::string& name) {
    if (name == "line-points") return FigureKind::LinePoints;
    if (name == "d-bouquet") return FigureKind::DBouquet;
    if (name == "pinching") return FigureKind::Pinching;
    if (name == "layer") return FigureKind::Layer;
    if (name == "decay-curve") return FigureKind::DecayCurve;
    throw ConfigError("unknown figure kind: " + name);
}

const char* figure_kind_name(FigureKind k) {
    switch (k) {
        case FigureKind::LinePoints: return "line-points";
        case FigureKind::DBouquet: return "d-bouquet";
        case FigureKind::Pinching: return "pinching";
        case FigureKind::Layer: return "layer";
        case FigureKind::DecayCurve: return "decay-curve";
    }
    return "?";
}

namespace {

FigureSpec figure_from_json(const json& j) {
    FigureSpec f;
    f.kind = figure_kind_from_name(j.at("kind").get<std::string>());
    if (j.contains("r")) f.generators = j.at("r").get<std::vector<double>>();
    if (j.contains("m_max")) f.m_max = j.at("m_max").get<int>();
    if (j.contains("m")) f.m = j.at("m").get<int>();
    if (j.contains("q_max")) f.q_max = j.at("q_max").get<int>();
    if (j.contains("theta"))
        f.theta = Rational(j.at("theta").at("p").get<std::int64_t>(),
                           j.at("theta").at("q").get<std::int64_t>());
    if (j.contains("spec")) f.spec = sequence_spec_from_json(j.at("spec"));
    if (j.contains("n_values")) f.n_values = j.at("n_values").get<std::vector<long long>>();
    if (j.contains("R")) f.trunc_radius = j.at("R").get<double>();
    if (j.contains("delta")) f.step = j.at("delta").get<double>();
    return f;
}

}  // namespace

ExperimentConfig config_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    try {
        ExperimentConfig c;
        c.version = j.at("version").get<int>();
        if (c.version != 1) throw ConfigError("unsupported config version");
        const auto kind = j.at("kind").get<std::string>();
        if (kind == "decay") c.kind = ExperimentKind::Decay;
        else if (kind == "figure") c.kind = ExperimentKind::Figure;
        else if (kind == "oracle-sweep") c.kind = ExperimentKind::OracleSweep;
        else throw ConfigError("unknown experiment kind: " + kind);

        if (j.contains("spec")) c.spec = sequence_spec_from_json(j.at("spec"));
        if (j.contains("n_values")) c.n_values = j.at("n_values").get<std::vector<long long>>();
        if (j.contains("R")) c.trunc_radius = j.at("R").get<double>();
        if (j.contains("delta")) c.step = j.at("delta").get<double>();
        if (j.contains("figure")) c.figure = figure_from_json(j.at("figure"));
        if (j.contains("pairs")) c.pairs = j.at("pairs").get<int>();
        if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("out_dir")) c.out_dir = j.at("out_dir").get<std::string>();

        if (const char* env = std::getenv("CHAB_OUT")) c.out_dir = env;

        if (c.kind == ExperimentKind::Decay) {
            if (!c.spec) throw ConfigError("decay experiment needs a \"spec\"");
            if (c.n_values.empty()) throw ConfigError("decay experiment needs n_values");
            if (!(c.trunc_radius > 0.0) || !(c.step > 0.0))
                throw ConfigError("decay experiment needs positive R and delta");
        }
        if (c.kind == ExperimentKind::Figure && !c.figure)
            throw ConfigError("figure experiment needs a \"figure\" block");
        if (c.kind == ExperimentKind::OracleSweep && c.pairs < 1)
            throw ConfigError("oracle sweep needs pairs >= 1");
        return c;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad config: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("bad config: ") + e.what());
    }
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return config_from_json_text(text);
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
    }
    std::filesystem::rename(tmp, path);
}

SubgroupSample random_cloud(SpaceKind space, std::size_t max_size, std::uint64_t seed,
                            bool concentrate_near_infinity) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> sizes(1, max_size);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);

    const std::size_t n = sizes(rng);
    std::vector<CompactPoint> pts;
    pts.reserve(n + 1);
    if (unit(rng) < 0.7) pts.push_back(CompactPoint::infinity());

    for (std::size_t i = 0; i < n; ++i) {
        double x;
        if (concentrate_near_infinity) {
            x = (10.0 + 25.0 * unit(rng)) * (unit(rng) < 0.5 ? -1.0 : 1.0);
        } else {
            // mix of scales; occasionally deep in the crushed region
            const double u = unit(rng);
            const double scale = u < 0.5 ? 1.0 : (u < 0.8 ? 6.0 : 30.0);
            x = scale * std::tan((unit(rng) - 0.5) * 2.8);
        }
        if (space == SpaceKind::LineBar)
            pts.push_back(CompactPoint::line(x));
        else
            pts.push_back(CompactPoint::cylinder(x, angle(rng)));
    }
    const SubgroupValue src = space == SpaceKind::LineBar
                                  ? SubgroupValue(RSubgroup::full_line())
                                  : SubgroupValue(CStarSubgroup::full());
    return make_sample(space, std::move(pts), src, 0.0, 0.0, 0.0);
}

OracleSweepReport sweep_oracle(int pairs_per_space, std::uint64_t seed) {
    OracleSweepReport rep;
    rep.pairs_per_space = pairs_per_space;
    std::mt19937_64 rng(seed);
    for (SpaceKind space : {SpaceKind::LineBar, SpaceKind::CylinderBar}) {
        for (int i = 0; i < pairs_per_space; ++i) {
            const bool near_inf = (i % 4) == 3;
            const SubgroupSample A = random_cloud(space, 500, rng(), near_inf);
            const SubgroupSample B = random_cloud(space, 500, rng(), near_inf);
            const HausdorffResult brute = hausdorff_brute(A, B);
            const HausdorffResult grid = hausdorff_grid(A, B);
            const double diff = std::abs(brute.value - grid.value);
            rep.max_difference = std::max(rep.max_difference, diff);
            if (diff > 1e-12) ++rep.mismatches;
        }
    }
    return rep;
}

namespace {

RunArtifacts run_decay(const ExperimentConfig& c) {
    DecayTable table;
    try {
        table = verify_convergence(*c.spec, c.n_values, c.trunc_radius, c.step);
    } catch (const UnderdeterminedError& e) {
        throw ConfigError(e.what());
    }
    for (const auto& row : table.rows) {
        if (!std::isfinite(row.d_hausdorff))
            throw NumericError("non-finite distance at n=" + std::to_string(row.n));
    }
    json results;
    results["version"] = 1;
    results["kind"] = "decay";
    results["spec"] = sequence_spec_to_json(*c.spec);
    results["R"] = c.trunc_radius;
    results["delta"] = c.step;
    results.update(decay_table_to_json(table));

    RunArtifacts out;
    const auto res_path = c.out_dir / "results.json";
    const auto csv_path = c.out_dir / "data.csv";
    write_file_atomic(res_path, results.dump(2) + "\n");
    write_file_atomic(csv_path, decay_csv(table));
    out.files = {res_path, csv_path};
    return out;
}

RunArtifacts run_figure(const ExperimentConfig& c) {
    const FigureSpec& f = *c.figure;
    std::string svg;
    std::optional<std::string> csv;
    std::vector<std::pair<std::string, std::string>> extra_files;
    switch (f.kind) {
        case FigureKind::LinePoints: {
            svg = emit_line_points_svg(f.generators);
            // one point-cloud csv per drawn subgroup, same window as the figure
            for (std::size_t i = 0; i < f.generators.size(); ++i) {
                const double r = f.generators[i];
                const RSubgroup g = r == 0.0 ? RSubgroup::trivial() : RSubgroup::cyclic(r);
                extra_files.emplace_back("sample_" + std::to_string(i) + ".csv",
                                         sample_csv(sample_r_subgroup(g, 50.0, 1.0)));
            }
            break;
        }
        case FigureKind::DBouquet:
            svg = emit_d_bouquet_svg(f.m_max);
            break;
        case FigureKind::Pinching:
            svg = emit_pinching_svg(f.m, f.theta);
            break;
        case FigureKind::Layer:
            svg = emit_layer_svg(f.m, f.q_max);
            break;
        case FigureKind::DecayCurve: {
            if (!f.spec) throw ConfigError("decay-curve figure needs a \"spec\"");
            DecayTable table;
            try {
                table = verify_convergence(*f.spec, f.n_values, f.trunc_radius, f.step);
            } catch (const UnderdeterminedError& e) {
                throw ConfigError(e.what());
            }
            svg = emit_decay_curve_svg(table);
            csv = decay_csv(table);
            break;
        }
    }
    RunArtifacts out;
    const auto svg_path = c.out_dir / "figure.svg";
    write_file_atomic(svg_path, svg);
    out.files.push_back(svg_path);
    if (csv) {
        const auto csv_path = c.out_dir / "data.csv";
        write_file_atomic(csv_path, *csv);
        out.files.push_back(csv_path);
    }
    for (const auto& [name, content] : extra_files) {
        const auto path = c.out_dir / name;
        write_file_atomic(path, content);
        out.files.push_back(path);
    }
    return out;
}

RunArtifacts run_sweep(const ExperimentConfig& c) {
    const OracleSweepReport rep = sweep_oracle(c.pairs, c.seed);
    json results;
    results["version"] = 1;
    results["kind"] = "oracle-sweep";
    results["pairs_per_space"] = rep.pairs_per_space;
    results["mismatches"] = rep.mismatches;
    results["max_difference"] = rep.max_difference;
    results["seed"] = c.seed;

    RunArtifacts out;
    const auto res_path = c.out_dir / "results.json";
    write_file_atomic(res_path, results.dump(2) + "\n");
    out.files = {res_path};
    if (rep.mismatches > 0)
        throw NumericError("oracle sweep found " + std::to_string(rep.mismatches) +
                           " grid/brute mismatches (report written)");
    return out;
}

}  // namespace

RunArtifacts run_experiment(const ExperimentConfig& config) {
    std::filesystem::create_directories(config.out_dir);
    switch (config.kind) {
        case ExperimentKind::Decay: return run_decay(config);
        case ExperimentKind::Figure: return run_figure(config);
        case ExperimentKind::OracleSweep: return run_sweep(config);
    }
    throw ConfigError("unreachable experiment kind");
}

}  // namespace chab
