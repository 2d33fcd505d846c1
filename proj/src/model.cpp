#include "coorp/model.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <stdexcept>

namespace coorp {

namespace {

int numeric_rank(const Eigen::MatrixXcd& m, double tol)
{
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) {
        return 0;
    }
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > tol * sv(0)) {
            ++rank;
        }
    }
    return rank;
}

int numeric_rank(const Eigen::MatrixXd& m, double tol)
{
    return numeric_rank(Eigen::MatrixXcd(m.cast<std::complex<double>>()), tol);
}

} // namespace

Eigen::MatrixXd harmonic_matrix(const Eigen::VectorXd& frequencies)
{
    const int q = 2 * static_cast<int>(frequencies.size());
    Eigen::MatrixXd e = Eigen::MatrixXd::Zero(q, q);
    for (int r = 0; r < frequencies.size(); ++r) {
        e(2 * r, 2 * r + 1) = frequencies(r);
        e(2 * r + 1, 2 * r) = -frequencies(r);
    }
    return e;
}

ExosystemModel::ExosystemModel(Eigen::VectorXd frequencies)
    : frequencies_(std::move(frequencies))
{
    if (frequencies_.size() == 0) {
        throw std::invalid_argument("exosystem: at least one frequency required");
    }
    for (Eigen::Index r = 0; r < frequencies_.size(); ++r) {
        if (!(frequencies_(r) > 0.0)) {
            throw std::invalid_argument("exosystem: frequencies must be positive");
        }
        for (Eigen::Index s = r + 1; s < frequencies_.size(); ++s) {
            if (frequencies_(r) == frequencies_(s)) {
                throw std::invalid_argument("exosystem: frequencies must be distinct");
            }
        }
    }
    e_ = harmonic_matrix(frequencies_);
}

void AgentModel::validate_dimensions() const
{
    const int n = state_dim();
    const int m = input_dim();
    const int p = output_dim();
    const int q = exo_dim();
    if (A.rows() != n || A.cols() != n || B.rows() != n || B.cols() != m ||
        C.rows() != p || C.cols() != n || D.rows() != n || D.cols() != q ||
        F.rows() != p || F.cols() != q) {
        throw std::invalid_argument("agent model: inconsistent matrix dimensions");
    }
    if (n == 0 || m == 0 || p == 0) {
        throw std::invalid_argument("agent model: empty dimensions");
    }
}

bool AgentModel::stabilizable(double tol) const
{
    const int n = state_dim();
    Eigen::MatrixXd ctrb(n, n * input_dim());
    Eigen::MatrixXd power = B;
    for (int k = 0; k < n; ++k) {
        ctrb.middleCols(k * input_dim(), input_dim()) = power;
        power = A * power;
    }
    if (numeric_rank(ctrb, tol) == n) {
        return true;
    }
    // Not controllable: every unstable mode must still be reachable.
    Eigen::EigenSolver<Eigen::MatrixXd> eig(A);
    for (Eigen::Index k = 0; k < n; ++k) {
        const std::complex<double> lambda = eig.eigenvalues()(k);
        if (lambda.real() < 0.0) {
            continue;
        }
        Eigen::MatrixXcd pencil(n, n + input_dim());
        pencil << A.cast<std::complex<double>>() -
                      lambda * Eigen::MatrixXcd::Identity(n, n),
            B.cast<std::complex<double>>();
        if (numeric_rank(pencil, tol) < n) {
            return false;
        }
    }
    return true;
}

bool AgentModel::observable(double tol) const
{
    const int n = state_dim();
    const int p = output_dim();
    Eigen::MatrixXd obs(n * p, n);
    Eigen::MatrixXd power = C;
    for (int k = 0; k < n; ++k) {
        obs.middleRows(k * p, p) = power;
        power = power * A;
    }
    return numeric_rank(obs, tol) == n;
}

bool AgentModel::transmission_condition(const Eigen::MatrixXd& E, double tol) const
{
    const int n = state_dim();
    const int m = input_dim();
    const int p = output_dim();
    Eigen::VectorXcd modes = Eigen::EigenSolver<Eigen::MatrixXd>(E).eigenvalues();
    for (Eigen::Index k = 0; k < modes.size(); ++k) {
        Eigen::MatrixXcd rosenbrock(n + p, n + m);
        rosenbrock.setZero();
        rosenbrock.topLeftCorner(n, n) =
            A.cast<std::complex<double>>() - modes(k) * Eigen::MatrixXcd::Identity(n, n);
        rosenbrock.topRightCorner(n, m) = B.cast<std::complex<double>>();
        rosenbrock.bottomLeftCorner(p, n) = C.cast<std::complex<double>>();
        if (numeric_rank(rosenbrock, tol) < n + p) {
            return false;
        }
    }
    return true;
}

} // namespace coorp
