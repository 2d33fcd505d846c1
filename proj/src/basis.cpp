#include "coorp/basis.hpp"

#include "coorp/kronpack.hpp"

#include <Eigen/Dense>
#include <stdexcept>

namespace coorp {

BasisFamily null_basis(const Eigen::MatrixXd& C, const Eigen::MatrixXd& F, int q)
{
    const int n = static_cast<int>(C.cols());
    const int p = static_cast<int>(C.rows());
    if (F.rows() != p || F.cols() != q) {
        throw std::invalid_argument("null_basis: F dimension mismatch");
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> c_svd(C, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (c_svd.singularValues().size() < p ||
        c_svd.singularValues()(p - 1) <= 1e-12 * c_svd.singularValues()(0)) {
        throw std::invalid_argument("null_basis: C must have full row rank");
    }

    BasisFamily fam;
    fam.anchor = c_svd.solve(-F); // minimum-norm solution of C X = -F

    const Eigen::MatrixXd lifted = kron(Eigen::MatrixXd::Identity(q, q), C);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(lifted, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > 1e-12 * sv(0)) ++rank;
    }
    const Eigen::MatrixXd null_vecs = svd.matrixV().rightCols(n * q - rank);
    for (Eigen::Index k = 0; k < null_vecs.cols(); ++k) {
        fam.kernel.push_back(
            Eigen::Map<const Eigen::MatrixXd>(null_vecs.col(k).data(), n, q));
    }
    return fam;
}

} // namespace coorp
