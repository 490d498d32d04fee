#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ptband/model.hpp"
#include "ptband/wavepacket.hpp"

namespace ptband {

/// Time spans are given in one of these units and resolved against the
/// model parameters at run time.
enum class TimeUnit { Inverse_J, RevivalPeriod, CirclingPeriod };

std::string to_string(TimeUnit u);

/// Everything one evolution/norm run needs, serializable to JSON and back
/// without loss.
struct ExperimentConfig {
    std::string label = "run";
    ModelParams model;
    WavePacketSpec packet;
    double t_max = 1.0;
    TimeUnit time_unit = TimeUnit::Inverse_J;
    int samples = 600;
    std::vector<double> snapshot_fractions; ///< of t_max
    Engine engine = Engine::Spectral;
    bool compare_uniform_ring = false;
    std::uint64_t seed = 12345;
};

/// t_max in units of 1/J.
double resolve_t_max(const ExperimentConfig& config);

std::string config_to_json(const ExperimentConfig& config);
ExperimentConfig config_from_json(const std::string& text);
ExperimentConfig load_config_file(const std::string& path);

} // namespace ptband
