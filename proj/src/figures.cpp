#include "ptband/figures.hpp"

#include <stdexcept>

namespace ptband {

namespace {

ModelParams near_ep_ring() {
    ModelParams p;
    p.J = 1.0;
    p.delta = 0.1;
    p.gamma = 0.2 - 1e-8;
    p.num_cells = 100;
    p.boundary = Boundary::Periodic;
    return p;
}

// The open chain cut at a weak bond keeps the spectrum real (strong bonds at
// both ends, no midgap boundary pair); in the 1-based bond convention that
// termination is delta = -0.1. Cutting at a strong bond instead leaves
// boundary modes whose PT breaking grows as e^{gamma t}.
ModelParams open_chain() {
    ModelParams p = near_ep_ring();
    p.delta = -0.1;
    p.boundary = Boundary::Open;
    return p;
}

ExperimentConfig packet_run(std::string label, const ModelParams& model, double k0,
                            double t_max, TimeUnit unit) {
    ExperimentConfig c;
    c.label = std::move(label);
    c.model = model;
    c.packet.alpha = 0.1;
    c.packet.k0 = k0;
    c.packet.center_site = 100;
    c.t_max = t_max;
    c.time_unit = unit;
    c.samples = 600;
    c.snapshot_fractions = {0.0, 1.0 / 6.0, 0.25, 1.0 / 3.0, 0.5, 2.0 / 3.0, 0.75, 1.0};
    c.engine = Engine::Spectral;
    c.compare_uniform_ring = true;
    return c;
}

ExperimentConfig norm_run(std::string label, const ModelParams& model, double k0,
                          double t_max, TimeUnit unit) {
    ExperimentConfig c = packet_run(std::move(label), model, k0, t_max, unit);
    c.samples = 1801;
    c.snapshot_fractions.clear();
    return c;
}

ExperimentConfig panel(const std::string& id) {
    const ModelParams ring = near_ep_ring();
    if (id == "2a")
        return packet_run("fig2a", ring, 0.0, 1.0, TimeUnit::RevivalPeriod);
    if (id == "2b")
        return packet_run("fig2b", ring, 3.0 * pi / 8.0, 1.0, TimeUnit::CirclingPeriod);
    if (id == "2c")
        return packet_run("fig2c", ring, pi / 2.0, 1.0, TimeUnit::CirclingPeriod);
    if (id == "3a")
        return norm_run("fig3a", ring, 0.0, 1.0, TimeUnit::RevivalPeriod);
    if (id == "3b")
        return norm_run("fig3b", ring, 3.0 * pi / 8.0, 3.0, TimeUnit::CirclingPeriod);
    if (id == "3c")
        return norm_run("fig3c", ring, pi / 2.0, 3.0, TimeUnit::CirclingPeriod);
    if (id == "4a")
        return norm_run("fig4a", ring, -3.0 * pi / 8.0, 3.0, TimeUnit::CirclingPeriod);
    if (id == "4b")
        return norm_run("fig4b", ring, -pi / 2.0, 3.0, TimeUnit::CirclingPeriod);
    if (id == "5a" || id == "5b") {
        ModelParams unbroken = ring;
        unbroken.gamma = 0.19;
        const double k0 = (id == "5a") ? pi / 2.0 : -pi / 2.0;
        return norm_run("fig" + id, unbroken, k0, 3.0, TimeUnit::CirclingPeriod);
    }
    if (id == "6a" || id == "6b" || id == "6c") {
        // Reflection+translation maps (delta, gamma, k0) to (-delta, gamma,
        // -k0), so the quasi-Hermitian packets of the strong-terminated chain
        // carry the mirrored momenta.
        const double k0 =
            (id == "6a") ? 0.0 : (id == "6b") ? -3.0 * pi / 8.0 : -pi / 2.0;
        const TimeUnit unit =
            (id == "6a") ? TimeUnit::RevivalPeriod : TimeUnit::CirclingPeriod;
        ExperimentConfig c = packet_run("fig" + id, open_chain(), k0, 1.0, unit);
        c.engine = Engine::Direct; // no Bloch decomposition off the ring
        return c;
    }
    throw std::invalid_argument("unknown figure id: " + id);
}

} // namespace

std::vector<std::string> figure_panel_ids() {
    return {"2a", "2b", "2c", "3a", "3b", "3c", "4a", "4b", "5a", "5b", "6a", "6b", "6c"};
}

std::vector<ExperimentConfig> figure_configs(const std::string& id) {
    std::vector<ExperimentConfig> configs;
    if (id == "2" || id == "3" || id == "4" || id == "5" || id == "6") {
        for (const auto& panel_id : figure_panel_ids())
            if (panel_id.substr(0, 1) == id)
                configs.push_back(panel(panel_id));
        return configs;
    }
    configs.push_back(panel(id));
    return configs;
}

} // namespace ptband
