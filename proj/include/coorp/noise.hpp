#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

namespace coorp {

/// Exploration noise: a seeded sum of sinusoids per input channel,
/// amplitude-bounded and deterministic, so the learning data stays
/// essentially bounded and reproducible.
struct NoiseSpec {
    double amplitude = 5.0;     // total amplitude budget per channel
    int terms = 24;             // sinusoids per channel
    double freq_low = 0.1;      // rad/s, log-spaced band
    double freq_high = 50.0;
    std::uint64_t seed = 1;

    void validate() const;
};

class ExplorationNoise {
public:
    /// Phases are drawn once from the seed; `channel_offset` decorrelates
    /// agents sharing one spec (agent i uses offset i).
    ExplorationNoise(const NoiseSpec& spec, int channels, int channel_offset = 0);

    /// Fully explicit single-channel signal: sum of per_term_amplitude *
    /// sin(freq_j t + phase_j).
    ExplorationNoise(double per_term_amplitude,
                     const Eigen::VectorXd& frequencies,
                     const Eigen::VectorXd& phases);

    /// Noise vector at time t; bounded by spec.amplitude per channel.
    Eigen::VectorXd at(double t) const;

    int channels() const { return channels_; }

private:
    int channels_;
    double term_gain_;
    Eigen::VectorXd frequencies_;
    std::vector<Eigen::VectorXd> phases_; // one vector per channel
};

} // namespace coorp
