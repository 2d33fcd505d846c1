#include "coorp/trajectory.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace coorp {

std::size_t TrajectoryLog::index_of(double t) const
{
    if (dt <= 0.0 || time.empty()) {
        throw std::invalid_argument("trajectory: empty log");
    }
    const double offset = (t - time.front()) / dt;
    const auto idx = static_cast<std::ptrdiff_t>(std::llround(offset));
    if (idx < 0 || idx >= static_cast<std::ptrdiff_t>(time.size()) ||
        std::abs(offset - static_cast<double>(idx)) > 1e-6) {
        throw std::invalid_argument("trajectory: requested time is off the grid");
    }
    return static_cast<std::size_t>(idx);
}

void TrajectoryLog::write_csv(std::ostream& out) const
{
    out.precision(17);
    out << "t";
    for (Eigen::Index k = 0; k < exo.cols(); ++k) {
        out << ",v" << k + 1;
    }
    for (std::size_t i = 0; i < agents.size(); ++i) {
        const auto& a = agents[i];
        const auto tag = std::to_string(i + 1);
        for (Eigen::Index k = 0; k < a.x.cols(); ++k) out << ",x_" << tag << "_" << k + 1;
        for (Eigen::Index k = 0; k < a.u.cols(); ++k) out << ",u_" << tag << "_" << k + 1;
        for (Eigen::Index k = 0; k < a.eta.cols(); ++k) out << ",eta_" << tag << "_" << k + 1;
        for (Eigen::Index k = 0; k < a.what.cols(); ++k) out << ",what_" << tag << "_" << k + 1;
        out << ",epsnorm_" << tag;
        for (Eigen::Index k = 0; k < a.err.cols(); ++k) out << ",e_" << tag << "_" << k + 1;
    }
    out << "\n";
    for (std::size_t s = 0; s < samples(); ++s) {
        out << time[s];
        for (Eigen::Index k = 0; k < exo.cols(); ++k) out << "," << exo(s, k);
        for (const auto& a : agents) {
            for (Eigen::Index k = 0; k < a.x.cols(); ++k) out << "," << a.x(s, k);
            for (Eigen::Index k = 0; k < a.u.cols(); ++k) out << "," << a.u(s, k);
            for (Eigen::Index k = 0; k < a.eta.cols(); ++k) out << "," << a.eta(s, k);
            for (Eigen::Index k = 0; k < a.what.cols(); ++k) out << "," << a.what(s, k);
            out << "," << a.eps_norm(s);
            for (Eigen::Index k = 0; k < a.err.cols(); ++k) out << "," << a.err(s, k);
        }
        out << "\n";
    }
}

} // namespace coorp
