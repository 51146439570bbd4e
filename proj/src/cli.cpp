#include "entangle/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "entangle/io.hpp"

namespace entangle::cli {

namespace {

struct ModelOptions {
    std::string figure;
    std::optional<double> r;
    std::optional<double> theta;
    std::optional<double> gamma1;
    std::string zeta;
    double coupling{1};
    double s0{0.05};
    double sb{0.05};
};

struct ClassifierOptions {
    double epsilon{1e-9};
    double tmax{200};
    std::size_t grid{2000};
    double min_width{0};

    ClassifierConfig config() const {
        ClassifierConfig cfg;
        cfg.epsilon = epsilon;
        cfg.t_max = tmax;
        cfg.samples = grid;
        cfg.min_width = min_width;
        cfg.validate();
        return cfg;
    }
};

struct OutputOptions {
    std::string out{"-"};
    std::string format{"csv"};
};

void add_model_options(CLI::App* app, ModelOptions& m) {
    app->add_option("--figure", m.figure, "Preset from the reference figure panels")
        ->check(CLI::IsMember({"3a", "3b", "3c", "3d"}));
    app->add_option("--r", m.r, "Werner purity of the initial state")->check(CLI::Range(0.0, 1.0));
    app->add_option("--theta", m.theta, "Noise angle (radians); sets gamma1 through the BWR rates");
    app->add_option("--gamma1", m.gamma1, "Total longitudinal rate gamma1^AB (overrides --theta)")
        ->check(CLI::NonNegativeNumber);
    app->add_option("--zeta", m.zeta, "Dephasing function: markovian:<g2> | damped:<g>,<w> | file:<path>");
    app->add_option("--coupling", m.coupling, "Per-qubit noise coupling g")->check(CLI::NonNegativeNumber);
    app->add_option("--s0", m.s0, "Per-qubit noise spectrum S(0)")->check(CLI::NonNegativeNumber);
    app->add_option("--sb", m.sb, "Per-qubit noise spectrum S(B)")->check(CLI::NonNegativeNumber);
}

void add_classifier_options(CLI::App* app, ClassifierOptions& c) {
    app->add_option("--epsilon", c.epsilon, "Zero threshold")->check(CLI::PositiveNumber);
    app->add_option("--tmax", c.tmax, "Analysis horizon")->check(CLI::PositiveNumber);
    app->add_option("--grid", c.grid, "Number of time samples")->check(CLI::Range(3, 10000000));
    app->add_option("--min-width", c.min_width, "Narrowest zero interval (0: ten grid steps)")
        ->check(CLI::NonNegativeNumber);
}

void add_output_options(CLI::App* app, OutputOptions& o) {
    app->add_option("--out", o.out, "Output file, '-' for stdout");
    app->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

void enable_config(CLI::App* app, std::string& path) {
    app->add_option("--config", path, "TOML/INI key-value file of long option names; flags override it");
}

/// Fills options not given on the command line from the file. Keys may sit at
/// top level or in a section named after the subcommand.
void apply_config(CLI::App* app, const std::string& path) {
    if (path.empty()) return;
    std::vector<CLI::ConfigItem> items;
    try {
        items = CLI::ConfigTOML().from_file(path);
    } catch (const CLI::FileError&) {
        throw PreconditionError("cannot read config file '" + path + "'");
    }
    for (const auto& item : items) {
        if (item.name == "++" || item.name == "--") continue;  // section open/close markers
        const bool scoped = item.parents.empty() || (item.parents.size() == 1 && item.parents[0] == app->get_name());
        CLI::Option* opt = scoped ? app->get_option_no_throw("--" + item.name) : nullptr;
        if (opt == nullptr || item.name == "config")
            throw PreconditionError("unknown key '" + item.fullname() + "' in config file '" + path + "'");
        if (opt->count() > 0) continue;
        opt->add_result(item.inputs);
        try {
            opt->run_callback();
        } catch (const CLI::Error& e) {
            throw PreconditionError("config key '" + item.name + "': " + e.what());
        }
    }
}

DephasingFunction dephasing_from_option(const std::string& spec) {
    if (spec.rfind("file:", 0) == 0) return io::read_tabulated_dephasing(spec.substr(5));
    if (spec.find(':') == std::string::npos) return io::read_tabulated_dephasing(spec);
    return parse_dephasing(spec);
}

std::pair<ModelParams, DephasingFunction> resolve_model(const ModelOptions& m) {
    QubitNoise noise{m.coupling, m.theta.value_or(0.0), m.s0, m.sb};
    ModelParams params = ModelParams::from_noise(1.0, noise, noise);
    std::optional<DephasingFunction> zeta;

    if (!m.figure.empty()) {
        const bool oscillating = m.figure == "3a" || m.figure == "3d";
        const bool relaxing = m.figure == "3a" || m.figure == "3b";
        zeta = oscillating ? DephasingFunction::damped_cosine(0.02, 0.3) : DephasingFunction::markovian(0.05);
        params.gamma1_ab = relaxing ? 0.03 : 0.0;
        if (m.theta) params.gamma1_ab = ModelParams::from_noise(1.0, noise, noise).gamma1_ab;
    }
    if (m.r) params.r = *m.r;
    if (m.gamma1) params.gamma1_ab = *m.gamma1;
    if (!m.zeta.empty()) zeta = dephasing_from_option(m.zeta);
    if (!zeta) zeta = markovian_dephasing(noise, noise);
    params.validate();
    return {params, *zeta};
}

void emit(const OutputOptions& o, std::ostream& out, const std::function<void(std::ostream&)>& csv,
          const std::function<nlohmann::json()>& json) {
    std::ofstream file;
    std::ostream* os = &out;
    if (o.out != "-") {
        file.open(o.out, std::ios::binary | std::ios::trunc);
        if (!file) throw PreconditionError("cannot open output file '" + o.out + "'");
        os = &file;
    }
    if (o.format == "json")
        *os << json().dump(2) << '\n';
    else
        csv(*os);
    os->flush();
    if (!*os) throw PreconditionError("failed writing output '" + o.out + "'");
}

/// lo:hi:n, inclusive; n = 1 yields lo.
std::vector<double> parse_range(const std::string& spec) {
    const auto a = spec.find(':');
    const auto b = spec.find(':', a == std::string::npos ? a : a + 1);
    if (a == std::string::npos || b == std::string::npos)
        throw PreconditionError("range '" + spec + "' must look like lo:hi:count");
    double lo = 0;
    double hi = 0;
    long count = 0;
    try {
        std::size_t used = 0;
        lo = std::stod(spec.substr(0, a), &used);
        hi = std::stod(spec.substr(a + 1, b - a - 1), &used);
        count = std::stol(spec.substr(b + 1), &used);
    } catch (const std::exception&) {
        throw PreconditionError("range '" + spec + "' must look like lo:hi:count");
    }
    if (count < 1) throw PreconditionError("range '" + spec + "' needs a positive count");
    std::vector<double> grid;
    for (long i = 0; i < count; ++i)
        grid.push_back(count == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1));
    return grid;
}

void check_entangled_start(const ModelParams& params, const DephasingFunction& zeta, double epsilon) {
    if (!(concurrence_at(params, zeta, 0.0) > epsilon))
        throw PreconditionError("initial state is not entangled (C(0) <= epsilon); r must exceed 1/3");
}

nlohmann::json zero_set_json(const ZeroSet& zs) {
    nlohmann::json intervals = nlohmann::json::array();
    for (const auto& iv : zs.intervals) intervals.push_back({iv.start, iv.end});
    return {{"intervals", intervals}, {"isolated", zs.points}, {"tail_zero", zs.tail_zero}};
}

int cmd_simulate(const ModelOptions& m, const ClassifierOptions& c, const OutputOptions& o, std::ostream& out,
                 std::ostream& err) {
    const auto [params, zeta] = resolve_model(m);
    const ClassifierConfig cfg = c.config();
    check_entangled_start(params, zeta, cfg.epsilon);
    const auto times = uniform_grid(cfg.t_max, cfg.samples);
    const Trajectory traj = trajectory(params, zeta, times);
    const auto curve = concurrence_curve(params, zeta, times);
    emit(
        o, out, [&](std::ostream& os) { io::write_trajectory_csv(os, traj, curve); },
        [&] { return io::trajectory_json(traj, curve); });

    try {
        const Classification cls = classify_model(params, zeta, cfg);
        err << "category: " << category_label(cls.category) << '\n';
        if (cls.death_time) err << "t_d: " << io::format_number(*cls.death_time) << '\n';
    } catch (const HorizonLimitedError& e) {
        err << "category: horizon-limited (" << e.what() << ")\n";
        return kHorizonLimited;
    }
    return kOk;
}

int cmd_classify(const ModelOptions& m, const ClassifierOptions& c, const OutputOptions& o, std::ostream& out) {
    const auto [params, zeta] = resolve_model(m);
    const ClassifierConfig cfg = c.config();
    check_entangled_start(params, zeta, cfg.epsilon);
    const Classification cls = classify_model(params, zeta, cfg);
    emit(
        o, out,
        [&](std::ostream& os) {
            os << "category: " << category_label(cls.category) << '\n';
            if (cls.death_time) os << "t_d: " << io::format_number(*cls.death_time) << '\n';
        },
        [&] {
            nlohmann::json j{{"category", std::string(1, category_label(cls.category))},
                             {"zero_set", zero_set_json(cls.zeros)}};
            j["t_d"] = cls.death_time ? nlohmann::json(*cls.death_time) : nlohmann::json(nullptr);
            return j;
        });
    return kOk;
}

int cmd_sweep(const std::string& family_name, const ModelOptions& m, const std::string& r_range,
              const std::string& theta_range, unsigned threads, const ClassifierOptions& c, const OutputOptions& o,
              std::ostream& out, std::ostream& err) {
    NoiseFamily family = parse_family(family_name);
    family.noise = QubitNoise{m.coupling, 0.0, m.s0, m.sb};
    if (!m.zeta.empty()) {
        const DephasingFunction z = parse_dephasing(m.zeta);
        const auto* d = std::get_if<DampedCosine>(&z.kind());
        if (family.kind != NoiseFamily::Kind::DampedCosine || d == nullptr)
            throw PreconditionError("--zeta in a sweep only sets the damped family's damped:<gamma>,<omega>");
        family.gamma = d->gamma;
        family.omega = d->omega;
    }
    const auto rs = parse_range(r_range);
    const auto thetas = parse_range(theta_range);
    const SweepResult result = sweep(rs, thetas, family, c.config(), threads);
    emit(
        o, out, [&](std::ostream& os) { io::write_sweep_csv(os, result); },
        [&] { return io::sweep_json(result); });

    int code = kOk;
    for (const auto& cell : result.cells) {
        if (cell.error.empty()) continue;
        err << "cell r=" << io::format_number(cell.r) << " theta=" << io::format_number(cell.theta) << ": "
            << cell.error << '\n';
        code = std::max(code, cell.horizon_limited ? int{kHorizonLimited} : int{kNumericalError});
    }
    return code;
}

int cmd_geometry(std::size_t samples, const OutputOptions& o, std::ostream& out) {
    const auto curves = d3_boundary_curves(samples);
    emit(
        o, out, [&](std::ostream& os) { io::write_geometry_csv(os, curves); },
        [&] { return io::geometry_json(curves); });
    return kOk;
}

int cmd_ghzw(const std::vector<int>& qubits, const std::string& zeta_spec, const std::string& exponent, double tmax,
             std::size_t grid, const OutputOptions& o, std::ostream& out) {
    for (int n : qubits)
        if (n < 2 || n > 10) throw PreconditionError("--N values must lie in [2, 10]");
    const DephasingFunction zeta = dephasing_from_option(zeta_spec);
    const auto times = uniform_grid(tmax, grid);
    const auto rows = ghzw_series(zeta, qubits, times,
                                  exponent == "cubic" ? GhzExponent::Cubic : GhzExponent::QubitCount);
    emit(
        o, out, [&](std::ostream& os) { io::write_ghzw_csv(os, rows); }, [&] { return io::ghzw_json(rows); });
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Entanglement dynamics under decoherence: trajectories, classification, sweeps"};
    app.require_subcommand(1);

    ModelOptions model;
    ClassifierOptions classifier;
    OutputOptions output;
    std::string config_path;

    auto* simulate = app.add_subcommand("simulate", "Trajectory and concurrence curve of a two-qubit model");
    add_model_options(simulate, model);
    add_classifier_options(simulate, classifier);
    add_output_options(simulate, output);
    enable_config(simulate, config_path);

    auto* classify = app.add_subcommand("classify", "Category (A/B/E/O) of a two-qubit model");
    add_model_options(classify, model);
    add_classifier_options(classify, classifier);
    add_output_options(classify, output);
    enable_config(classify, config_path);

    std::string family = "markovian";
    std::string r_range = "0.8:1:21";
    std::string theta_range = "0:0.3:21";
    unsigned threads = 0;
    auto* sweep_cmd = app.add_subcommand("sweep", "Category map over (r, theta)");
    add_model_options(sweep_cmd, model);
    add_classifier_options(sweep_cmd, classifier);
    add_output_options(sweep_cmd, output);
    sweep_cmd->add_option("--family", family, "Noise family")->check(CLI::IsMember({"markovian", "damped"}));
    sweep_cmd->add_option("--r-range", r_range, "Purity grid lo:hi:count");
    sweep_cmd->add_option("--theta-range", theta_range, "Noise-angle grid lo:hi:count");
    sweep_cmd->add_option("--threads", threads, "Worker threads (0: hardware concurrency)");
    enable_config(sweep_cmd, config_path);

    std::size_t geometry_samples = 201;
    auto* geometry = app.add_subcommand("geometry", "Boundary curves of the three-parameter state slice");
    geometry->add_option("--grid", geometry_samples, "Samples per curve")->check(CLI::Range(2, 1000000));
    add_output_options(geometry, output);
    enable_config(geometry, config_path);

    std::vector<int> qubits{3};
    std::string ghz_zeta = "markovian:0.05";
    std::string exponent = "qubits";
    double ghz_tmax = 100;
    std::size_t ghz_grid = 201;
    auto* ghzw = app.add_subcommand("ghzw", "GHZ and W negativity: closed form vs Kraus evolution");
    ghzw->add_option("--N", qubits, "Qubit counts, comma separated")->delimiter(',');
    ghzw->add_option("--zeta", ghz_zeta, "Dephasing function");
    ghzw->add_option("--ghz-exponent", exponent, "GHZ closed-form exponent")
        ->check(CLI::IsMember({"qubits", "cubic"}));
    ghzw->add_option("--tmax", ghz_tmax, "Final time")->check(CLI::PositiveNumber);
    ghzw->add_option("--grid", ghz_grid, "Number of time samples")->check(CLI::Range(2, 100000));
    add_output_options(ghzw, output);
    enable_config(ghzw, config_path);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kConfigError;
    }

    try {
        for (auto* sub : app.get_subcommands()) apply_config(sub, config_path);
        if (simulate->parsed()) return cmd_simulate(model, classifier, output, out, err);
        if (classify->parsed()) return cmd_classify(model, classifier, output, out);
        if (sweep_cmd->parsed())
            return cmd_sweep(family, model, r_range, theta_range, threads, classifier, output, out, err);
        if (geometry->parsed()) return cmd_geometry(geometry_samples, output, out);
        if (ghzw->parsed()) return cmd_ghzw(qubits, ghz_zeta, exponent, ghz_tmax, ghz_grid, output, out);
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    } catch (const HorizonLimitedError& e) {
        err << "horizon-limited: " << e.what() << '\n';
        return kHorizonLimited;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumericalError;
    }
    return kConfigError;
}

}  // namespace entangle::cli
