#include "coorp/noise.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace coorp {

void NoiseSpec::validate() const
{
    if (amplitude < 0.0 || terms < 0) {
        throw std::invalid_argument("noise: amplitude and term count must be nonnegative");
    }
    if (terms > 0 && !(freq_low > 0.0 && freq_high >= freq_low)) {
        throw std::invalid_argument("noise: frequency band must satisfy 0 < low <= high");
    }
}

namespace {

// Uniform double in [0, 1) from raw engine output; avoids the
// implementation-defined distribution classes so phases are identical
// across standard libraries.
double canonical(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

ExplorationNoise::ExplorationNoise(const NoiseSpec& spec, int channels, int channel_offset)
    : channels_(channels)
{
    spec.validate();
    const int k = spec.terms;
    term_gain_ = k > 0 ? spec.amplitude / static_cast<double>(k) : 0.0;

    frequencies_.resize(k);
    for (int j = 0; j < k; ++j) {
        const double frac = k > 1 ? static_cast<double>(j) / (k - 1) : 0.0;
        frequencies_(j) = spec.freq_low * std::pow(spec.freq_high / spec.freq_low, frac);
    }

    phases_.resize(channels_);
    for (int c = 0; c < channels_; ++c) {
        const std::uint64_t stream =
            spec.seed ^ (0x9e3779b97f4a7c15ULL *
                         static_cast<std::uint64_t>(256 * (channel_offset + 1) + c + 1));
        std::mt19937_64 rng(stream);
        Eigen::VectorXd ph(k);
        for (int j = 0; j < k; ++j) {
            ph(j) = 2.0 * std::numbers::pi * canonical(rng);
        }
        phases_[c] = ph;
    }
}

ExplorationNoise::ExplorationNoise(double per_term_amplitude,
                                   const Eigen::VectorXd& frequencies,
                                   const Eigen::VectorXd& phases)
    : channels_(1), term_gain_(per_term_amplitude), frequencies_(frequencies)
{
    if (frequencies.size() != phases.size()) {
        throw std::invalid_argument("noise: frequency and phase counts differ");
    }
    phases_.push_back(phases);
}

Eigen::VectorXd ExplorationNoise::at(double t) const
{
    Eigen::VectorXd out = Eigen::VectorXd::Zero(channels_);
    for (int c = 0; c < channels_; ++c) {
        double sum = 0.0;
        for (Eigen::Index j = 0; j < frequencies_.size(); ++j) {
            sum += std::sin(frequencies_(j) * t + phases_[c](j));
        }
        out(c) = term_gain_ * sum;
    }
    return out;
}

} // namespace coorp
