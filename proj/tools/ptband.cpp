// ptband: spectra, mode data, wave-packet evolution, dual-norm series,
// Hermitian counterparts and invariant suites for the PT-symmetric dimerized
// ring with staggered gain/loss.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ptband/algebra.hpp"
#include "ptband/bloch.hpp"
#include "ptband/checks.hpp"
#include "ptband/config.hpp"
#include "ptband/counterpart.hpp"
#include "ptband/csv.hpp"
#include "ptband/dynamics.hpp"
#include "ptband/figures.hpp"
#include "ptband/model.hpp"
#include "ptband/svg.hpp"
#include "ptband/wavepacket.hpp"

namespace {

using namespace ptband;

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 1;
constexpr int kExitCheckFailure = 2;
constexpr int kExitExceptional = 3;

constexpr double kConditionWarning = 1e3;

struct CommonModelFlags {
    double J = 1.0;
    double delta = 0.1;
    double gamma = 0.1;
    int cells = 100;
    std::string boundary = "periodic";

    void attach(CLI::App* cmd) {
        cmd->add_option("--J", J, "hopping energy");
        cmd->add_option("--delta", delta, "distortion factor");
        cmd->add_option("--gamma", gamma, "imaginary potential magnitude");
        cmd->add_option("-N,--cells", cells, "number of unit cells (2N sites)");
        cmd->add_option("--boundary", boundary, "periodic | open")
            ->check(CLI::IsMember({"periodic", "open"}));
    }

    ModelParams params() const {
        ModelParams p;
        p.J = J;
        p.delta = delta;
        p.gamma = gamma;
        p.num_cells = cells;
        p.boundary = boundary == "open" ? Boundary::Open : Boundary::Periodic;
        p.validate();
        return p;
    }
};

std::string flag_to_unit_name(TimeUnit unit) {
    return to_string(unit);
}

TimeUnit unit_from_flag(const std::string& name) {
    if (name == "1/J")
        return TimeUnit::Inverse_J;
    if (name == "T_rev")
        return TimeUnit::RevivalPeriod;
    if (name == "T_cir")
        return TimeUnit::CirclingPeriod;
    throw CLI::ValidationError("--time-unit", "expected 1/J, T_rev or T_cir");
}

void run_spectrum(const ModelParams& params, const std::string& out) {
    CsvWriter csv(out, {"k", "eps_re", "eps_im", "lambda_re", "lambda_im", "broken",
                        "exceptional"});
    for (double k : momentum_grid(params.num_cells)) {
        const Complex eps = dispersion(params, k);
        const bool exceptional = std::abs(eps) < exceptional_tol * params.J;
        const Complex lambda = exceptional ? Complex(0.0, 0.0) : params.gamma / eps;
        const bool broken = std::abs(eps.imag()) > 1e-12 * params.J;
        csv.row(std::vector<double>{k, eps.real(), eps.imag(), lambda.real(),
                                    lambda.imag(), double(broken), double(exceptional)});
    }
}

void run_modes(const ModelParams& params, const std::string& out) {
    const Matrix h = build_nonhermitian(params);
    CsvWriter csv(out, {"k", "eps_re", "eps_im", "lambda_re", "lambda_im", "phi",
                        "mu_re", "mu_im", "nu_re", "nu_im", "exceptional",
                        "eigen_residual"});
    for (const auto& mode : solve_grid(params)) {
        double residual = 0.0;
        if (!mode.is_exceptional) {
            residual = std::max(
                (h * mode.alpha_bar + mode.eps * mode.alpha_bar).norm(),
                (h * mode.beta_bar - mode.eps * mode.beta_bar).norm());
        }
        csv.row(std::vector<double>{mode.k, mode.eps.real(), mode.eps.imag(),
                                    mode.lambda.real(), mode.lambda.imag(), mode.phi,
                                    mode.mu.real(), mode.mu.imag(), mode.nu.real(),
                                    mode.nu.imag(), double(mode.is_exceptional),
                                    residual});
    }
}

std::vector<double> sample_times(double t_max, int samples) {
    std::vector<double> times;
    times.reserve(samples + 1);
    for (int i = 0; i <= samples; ++i)
        times.push_back(t_max * i / samples);
    return times;
}

struct EvolutionProduct {
    std::vector<double> times;
    std::vector<Vector> states;
    std::vector<double> dirac, biorthogonal;
    bool has_biorthogonal = false;
};

EvolutionProduct evolve_states(const ExperimentConfig& config, const Matrix& h,
                               const Vector& psi0) {
    EvolutionProduct product;
    product.times = sample_times(resolve_t_max(config), config.samples);

    const bool ring_modes = config.model.boundary == Boundary::Periodic &&
                            config.model.is_unbroken();
    std::vector<BlochMode> modes;
    std::optional<ModeDecomposition> decomp;
    if (ring_modes) {
        modes = solve_grid(config.model);
        const bool regular =
            std::none_of(modes.begin(), modes.end(),
                         [](const BlochMode& m) { return m.is_exceptional; });
        if (regular) {
            decomp = decompose(psi0, modes);
            const double condition = spectral_condition(modes);
            if (condition > kConditionWarning)
                std::fprintf(stderr,
                             "warning: biorthogonal basis condition %.3g near the "
                             "exceptional point; spectral-path results amplify "
                             "roundoff accordingly\n",
                             condition);
        } else if (config.engine == Engine::Spectral) {
            throw ExceptionalModeError(pi, 0.0);
        }
    } else if (config.engine == Engine::Spectral) {
        throw CLI::ValidationError(
            "--engine", "spectral engine needs the unbroken periodic ring");
    }

    if (config.engine == Engine::Spectral) {
        for (double t : product.times)
            product.states.push_back(evolve_spectral(*decomp, modes, t));
    } else {
        const DirectEvolver evolver(h);
        product.states = evolver.series(psi0, product.times);
    }

    product.dirac.reserve(product.times.size());
    for (const auto& psi : product.states)
        product.dirac.push_back(dirac_norm2(psi));
    if (decomp) {
        product.has_biorthogonal = true;
        const double pb0 = decomp->biorthogonal_weight();
        for (std::size_t i = 0; i < product.times.size(); ++i)
            product.biorthogonal.push_back(
                biorthogonal_norm(product.states[i], *decomp, modes, product.times[i])
                    .real() /
                pb0);
    }
    return product;
}

void write_series_csv(const std::string& path, const EvolutionProduct& product,
                      const PacketObservables& obs) {
    CsvWriter csv(path, {"t", "P_D", "P_B", "center", "width", "fidelity"});
    for (std::size_t i = 0; i < product.times.size(); ++i) {
        const double pb = product.has_biorthogonal
                              ? product.biorthogonal[i]
                              : std::numeric_limits<double>::quiet_NaN();
        csv.row(std::vector<double>{product.times[i], product.dirac[i], pb,
                                    obs.center[i], obs.width[i], obs.fidelity[i]});
    }
}

void write_snapshots_csv(const std::string& path, const ExperimentConfig& config,
                         const Matrix& h, const Vector& psi0,
                         const EvolutionProduct& product) {
    CsvWriter csv(path, {"t", "site", "prob"});
    const double t_max = resolve_t_max(config);
    const DirectEvolver evolver(h);
    for (double fraction : config.snapshot_fractions) {
        const double t = fraction * t_max;
        // reuse a series state when the grid hits the time exactly
        Vector psi;
        const double step = t_max / config.samples;
        const double index = t / step;
        if (std::abs(index - std::round(index)) < 1e-9 &&
            std::round(index) < double(product.states.size())) {
            psi = product.states[std::size_t(std::round(index))];
        } else {
            psi = evolver.at(psi0, t);
        }
        for (int site = 1; site <= psi.size(); ++site)
            csv.row(std::vector<double>{t, double(site), std::norm(psi(site - 1))});
    }
}

int run_evolution(const ExperimentConfig& config, const std::string& out_dir,
                  bool svg, bool norms_only) {
    std::filesystem::create_directories(out_dir);
    const auto path = [&](const std::string& suffix) {
        return (std::filesystem::path(out_dir) / (config.label + suffix)).string();
    };

    const Matrix h = build_nonhermitian(config.model);
    const Vector psi0 =
        build_gaussian(config.packet, config.model.num_cells, config.model.boundary);

    const auto product = evolve_states(config, h, psi0);
    const auto obs =
        packet_metrics(product.states, product.times, config.model.boundary);

    if (norms_only) {
        CsvWriter csv(path("_norms.csv"), {"t", "P_D", "P_B"});
        for (std::size_t i = 0; i < product.times.size(); ++i) {
            const double pb = product.has_biorthogonal
                                  ? product.biorthogonal[i]
                                  : std::numeric_limits<double>::quiet_NaN();
            csv.row(std::vector<double>{product.times[i], product.dirac[i], pb});
        }
    } else {
        write_series_csv(path("_series.csv"), product, obs);
        if (!config.snapshot_fractions.empty())
            write_snapshots_csv(path("_snapshots.csv"), config, h, psi0, product);
    }

    if (config.compare_uniform_ring) {
        // The gapless equivalent: uniform chain with hopping Je, same boundary.
        const Matrix he = build_hermitian_counterpart(
            effective_hopping(config.model), 0.0, 0.0, config.model.num_cells,
            config.model.boundary);
        const DirectEvolver evolver(he);
        const auto he_states = evolver.series(psi0, product.times);
        const auto he_obs =
            packet_metrics(he_states, product.times, config.model.boundary);
        CsvWriter csv(path("_he_series.csv"), {"t", "P_D", "center", "width", "fidelity"});
        for (std::size_t i = 0; i < product.times.size(); ++i)
            csv.row(std::vector<double>{product.times[i], he_states[i].squaredNorm(),
                                        he_obs.center[i], he_obs.width[i],
                                        he_obs.fidelity[i]});
    }

    if (svg) {
        SvgSeries pd{"P_D", product.times, product.dirac};
        std::vector<SvgSeries> series{pd};
        if (product.has_biorthogonal)
            series.push_back({"P_B", product.times, product.biorthogonal});
        write_line_svg(path("_norms.svg"), config.label + " norms", "t J", "norm",
                       series);
        if (!norms_only) {
            std::vector<std::vector<double>> rows;
            const std::size_t stride =
                std::max<std::size_t>(1, product.states.size() / 200);
            for (std::size_t i = 0; i < product.states.size(); i += stride) {
                std::vector<double> row(product.states[i].size());
                for (int m = 0; m < product.states[i].size(); ++m)
                    row[m] = std::norm(product.states[i](m));
                rows.push_back(std::move(row));
            }
            write_heatmap_svg(path("_heatmap.svg"), config.label + " |psi|^2",
                              "site", "t J", rows, 1.0,
                              double(config.model.num_sites()), 0.0,
                              product.times.back());
        }
    }
    return kExitOk;
}

void run_counterpart(const ModelParams& params, const std::string& out) {
    const auto family = equivalence_map(params);
    std::printf("matching ratio R = %s\n", format_g17(family.ratio).c_str());
    std::printf("canonical (Ve = 0): Je = %s, delta_e = %s\n",
                format_g17(family.canonical.Je).c_str(),
                format_g17(family.canonical.delta_e).c_str());
    std::printf("staggered (delta_e = 0): Je = %s, Ve = %s\n",
                format_g17(family.staggered.Je).c_str(),
                format_g17(family.staggered.Ve).c_str());
    if (!out.empty()) {
        CsvWriter csv(out, {"k", "eps_nonhermitian", "eps_counterpart", "abs_diff"});
        for (double k : momentum_grid(params.num_cells)) {
            const double nh = dispersion(params, k).real();
            const double he = counterpart_dispersion(family.canonical, k);
            csv.row(std::vector<double>{k, nh, he, std::abs(nh - he)});
        }
    }
}

int run_check(const ModelParams& params, const CheckOptions& options,
              const std::string& json_path) {
    const auto results = run_checks(params, options);
    for (const auto& r : results) {
        std::printf("[%s] %-32s max_err=%.3e tol=%.3e%s%s\n", r.pass ? "pass" : "FAIL",
                    r.name.c_str(), r.max_error, r.tolerance,
                    r.detail.empty() ? "" : "  ", r.detail.c_str());
    }
    if (!json_path.empty()) {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& r : results)
            j.push_back({{"name", r.name},
                         {"max_error", r.max_error},
                         {"tolerance", r.tolerance},
                         {"pass", r.pass},
                         {"detail", r.detail}});
        std::ofstream out(json_path, std::ios::binary);
        out << j.dump(2) << "\n";
    }
    const bool ok = all_passed(results);
    std::printf("%s\n", ok ? "all checks passed" : "CHECK FAILURES PRESENT");
    return ok ? kExitOk : kExitCheckFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"PT-symmetric two-band lattice toolkit"};
    app.require_subcommand(1);

    // spectrum
    auto* spectrum_cmd = app.add_subcommand("spectrum", "band energies over the grid");
    CommonModelFlags spectrum_flags;
    spectrum_flags.attach(spectrum_cmd);
    std::string spectrum_out = "spectrum.csv";
    spectrum_cmd->add_option("--out", spectrum_out, "output CSV path");

    // modes
    auto* modes_cmd = app.add_subcommand("modes", "per-momentum mode data");
    CommonModelFlags modes_flags;
    modes_flags.attach(modes_cmd);
    std::string modes_out = "modes.csv";
    modes_cmd->add_option("--out", modes_out, "output CSV path");

    // evolve / norms share configuration plumbing
    struct RunFlags {
        CommonModelFlags model;
        double alpha = 0.1, k0 = 0.0;
        int center = 0; // 0: defaults to site N (mid-index)
        double t_max = 1.0;
        std::string unit = "1/J";
        int samples = 600;
        std::string engine = "spectral";
        bool compare = false;
        std::string figure, config_file, dump_config, out_dir = ".", label;
        bool svg = false;

        void attach(CLI::App* cmd) {
            model.attach(cmd);
            cmd->add_option("--alpha", alpha, "packet width parameter");
            cmd->add_option("--k0", k0, "central momentum");
            cmd->add_option("--center", center, "center site N_A (1-based; default N)");
            cmd->add_option("--t-max", t_max, "time span (in --time-unit)");
            cmd->add_option("--time-unit", unit, "1/J | T_rev | T_cir")
                ->check(CLI::IsMember({"1/J", "T_rev", "T_cir"}));
            cmd->add_option("--samples", samples, "series sample count");
            cmd->add_option("--engine", engine, "spectral | direct")
                ->check(CLI::IsMember({"spectral", "direct"}));
            cmd->add_flag("--compare-he", compare, "also evolve under the uniform ring");
            cmd->add_option("--figure", figure, "bundled preset id (2a..6c)");
            cmd->add_option("--config", config_file, "JSON config file");
            cmd->add_option("--dump-config", dump_config,
                            "write the effective config JSON and exit");
            cmd->add_option("--out-dir", out_dir, "output directory");
            cmd->add_option("--label", label, "output file prefix");
            cmd->add_flag("--svg", svg, "emit SVG plots");
        }

        std::vector<ExperimentConfig> resolve(const CLI::App* cmd) const {
            std::vector<ExperimentConfig> configs;
            if (!figure.empty()) {
                configs = figure_configs(figure);
            } else if (!config_file.empty()) {
                configs.push_back(load_config_file(config_file));
            } else {
                ExperimentConfig c;
                c.model = model.params();
                c.packet.alpha = alpha;
                c.packet.k0 = k0;
                c.packet.center_site = center > 0 ? center : c.model.num_cells;
                c.t_max = t_max;
                c.time_unit = unit_from_flag(unit);
                c.samples = samples;
                c.engine = engine == "direct" ? Engine::Direct : Engine::Spectral;
                c.compare_uniform_ring = compare;
                c.label = label.empty() ? "run" : label;
                configs.push_back(c);
            }
            // explicit flags override preset/file values
            for (auto& c : configs) {
                if (cmd->count("--engine"))
                    c.engine = engine == "direct" ? Engine::Direct : Engine::Spectral;
                if (cmd->count("--samples"))
                    c.samples = samples;
                if (cmd->count("--label"))
                    c.label = label;
                if (cmd->count("--compare-he"))
                    c.compare_uniform_ring = compare;
                c.model.validate();
            }
            return configs;
        }
    };

    auto* evolve_cmd = app.add_subcommand("evolve", "wave-packet evolution products");
    RunFlags evolve_flags;
    evolve_flags.attach(evolve_cmd);

    auto* norms_cmd = app.add_subcommand("norms", "Dirac/biorthogonal norm series");
    RunFlags norms_flags;
    norms_flags.attach(norms_cmd);

    // counterpart
    auto* counterpart_cmd =
        app.add_subcommand("counterpart", "Hermitian equivalent parameters");
    CommonModelFlags counterpart_flags;
    counterpart_flags.attach(counterpart_cmd);
    std::string counterpart_out;
    counterpart_cmd->add_option("--out", counterpart_out, "spectra comparison CSV");

    // check
    auto* check_cmd = app.add_subcommand("check", "run the invariant suites");
    CommonModelFlags check_flags;
    check_flags.cells = 10;
    check_flags.attach(check_cmd);
    CheckOptions check_options;
    std::string check_json;
    check_cmd->add_option("--seed", check_options.seed, "RNG seed");
    check_cmd->add_option("--cases", check_options.cases, "random cases per suite");
    check_cmd->add_option("--json", check_json, "machine-readable report path");

    try {
        app.parse(argc, argv);

        if (spectrum_cmd->parsed()) {
            run_spectrum(spectrum_flags.params(), spectrum_out);
            return kExitOk;
        }
        if (modes_cmd->parsed()) {
            run_modes(modes_flags.params(), modes_out);
            return kExitOk;
        }
        for (auto [cmd, flags, norms_only] :
             {std::tuple{evolve_cmd, &evolve_flags, false},
              std::tuple{norms_cmd, &norms_flags, true}}) {
            if (!cmd->parsed())
                continue;
            const auto configs = flags->resolve(cmd);
            if (!flags->dump_config.empty()) {
                std::ofstream out(flags->dump_config, std::ios::binary);
                for (const auto& c : configs)
                    out << config_to_json(c);
                return kExitOk;
            }
            for (const auto& c : configs)
                run_evolution(c, flags->out_dir, flags->svg, norms_only);
            return kExitOk;
        }
        if (counterpart_cmd->parsed()) {
            run_counterpart(counterpart_flags.params(), counterpart_out);
            return kExitOk;
        }
        if (check_cmd->parsed())
            return run_check(check_flags.params(), check_options, check_json);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        app.exit(e);
        return kExitConfigError;
    } catch (const ExceptionalModeError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitExceptional;
    } catch (const NoCounterpartError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfigError;
    }
}
