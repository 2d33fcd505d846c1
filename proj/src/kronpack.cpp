#include "coorp/kronpack.hpp"

#include <stdexcept>

namespace coorp {

Eigen::VectorXd vec(const Eigen::MatrixXd& m)
{
    return Eigen::Map<const Eigen::VectorXd>(m.data(), m.size());
}

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b)
{
    Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Eigen::VectorXd kron(const Eigen::VectorXd& a, const Eigen::VectorXd& b)
{
    Eigen::VectorXd out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

Eigen::VectorXd vecs(const Eigen::MatrixXd& p, double tol)
{
    if (p.rows() != p.cols()) {
        throw std::invalid_argument("vecs: matrix must be square");
    }
    if ((p - p.transpose()).cwiseAbs().maxCoeff() > tol) {
        throw std::invalid_argument("vecs: matrix is not symmetric within tolerance");
    }
    const Eigen::MatrixXd s = 0.5 * (p + p.transpose());
    const int n = static_cast<int>(s.rows());
    Eigen::VectorXd out(vecs_size(n));
    int idx = 0;
    for (int i = 0; i < n; ++i) {
        out(idx++) = s(i, i);
        for (int j = i + 1; j < n; ++j) {
            out(idx++) = 2.0 * s(i, j);
        }
    }
    return out;
}

Eigen::VectorXd vecv(const Eigen::VectorXd& a)
{
    const int n = static_cast<int>(a.size());
    Eigen::VectorXd out(vecs_size(n));
    int idx = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            out(idx++) = a(i) * a(j);
        }
    }
    return out;
}

Eigen::MatrixXd unvecs(const Eigen::VectorXd& packed, int n)
{
    if (packed.size() != vecs_size(n)) {
        throw std::invalid_argument("unvecs: packed length does not match dimension");
    }
    Eigen::MatrixXd p(n, n);
    int idx = 0;
    for (int i = 0; i < n; ++i) {
        p(i, i) = packed(idx++);
        for (int j = i + 1; j < n; ++j) {
            p(i, j) = 0.5 * packed(idx);
            p(j, i) = 0.5 * packed(idx);
            ++idx;
        }
    }
    return p;
}

} // namespace coorp
