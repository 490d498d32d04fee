#include "ptband/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ptband {

std::string to_string(TimeUnit u) {
    switch (u) {
    case TimeUnit::Inverse_J:
        return "1/J";
    case TimeUnit::RevivalPeriod:
        return "T_rev";
    case TimeUnit::CirclingPeriod:
        return "T_cir";
    }
    return "1/J";
}

namespace {

TimeUnit time_unit_from(const std::string& s) {
    if (s == "1/J")
        return TimeUnit::Inverse_J;
    if (s == "T_rev")
        return TimeUnit::RevivalPeriod;
    if (s == "T_cir")
        return TimeUnit::CirclingPeriod;
    throw std::invalid_argument("unknown time unit: " + s);
}

Boundary boundary_from(const std::string& s) {
    if (s == "periodic")
        return Boundary::Periodic;
    if (s == "open")
        return Boundary::Open;
    throw std::invalid_argument("unknown boundary: " + s);
}

Engine engine_from(const std::string& s) {
    if (s == "spectral")
        return Engine::Spectral;
    if (s == "direct")
        return Engine::Direct;
    throw std::invalid_argument("unknown engine: " + s);
}

} // namespace

double resolve_t_max(const ExperimentConfig& config) {
    switch (config.time_unit) {
    case TimeUnit::Inverse_J:
        return config.t_max;
    case TimeUnit::RevivalPeriod:
        return config.t_max * revival_time(config.model);
    case TimeUnit::CirclingPeriod:
        return config.t_max * circling_period(config.model).period;
    }
    return config.t_max;
}

std::string config_to_json(const ExperimentConfig& c) {
    nlohmann::ordered_json j;
    j["label"] = c.label;
    j["model"] = {{"J", c.model.J},
                  {"delta", c.model.delta},
                  {"gamma", c.model.gamma},
                  {"N", c.model.num_cells},
                  {"boundary", to_string(c.model.boundary)}};
    j["packet"] = {{"alpha", c.packet.alpha},
                   {"k0", c.packet.k0},
                   {"center_site", c.packet.center_site}};
    j["time"] = {{"t_max", c.t_max},
                 {"unit", to_string(c.time_unit)},
                 {"samples", c.samples}};
    j["snapshot_fractions"] = c.snapshot_fractions;
    j["engine"] = to_string(c.engine);
    j["compare_uniform_ring"] = c.compare_uniform_ring;
    j["seed"] = c.seed;
    return j.dump(2) + "\n";
}

ExperimentConfig config_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    ExperimentConfig c;
    c.label = j.at("label").get<std::string>();
    const auto& m = j.at("model");
    c.model.J = m.at("J").get<double>();
    c.model.delta = m.at("delta").get<double>();
    c.model.gamma = m.at("gamma").get<double>();
    c.model.num_cells = m.at("N").get<int>();
    c.model.boundary = boundary_from(m.at("boundary").get<std::string>());
    const auto& p = j.at("packet");
    c.packet.alpha = p.at("alpha").get<double>();
    c.packet.k0 = p.at("k0").get<double>();
    c.packet.center_site = p.at("center_site").get<int>();
    const auto& t = j.at("time");
    c.t_max = t.at("t_max").get<double>();
    c.time_unit = time_unit_from(t.at("unit").get<std::string>());
    c.samples = t.at("samples").get<int>();
    c.snapshot_fractions = j.at("snapshot_fractions").get<std::vector<double>>();
    c.engine = engine_from(j.at("engine").get<std::string>());
    c.compare_uniform_ring = j.at("compare_uniform_ring").get<bool>();
    c.seed = j.at("seed").get<std::uint64_t>();
    return c;
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return config_from_json(buffer.str());
}

} // namespace ptband
