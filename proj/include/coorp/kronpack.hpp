#pragma once

#include <Eigen/Core>

namespace coorp {

/// Column-stacking vectorization.
Eigen::VectorXd vec(const Eigen::MatrixXd& m);

/// Kronecker product a (x) b.
Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);
Eigen::VectorXd kron(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

/// Packs a symmetric matrix row-major along the upper triangle with
/// off-diagonal entries doubled: [p11, 2p12, ..., 2p1n, p22, ...].
/// Inputs are symmetrized first; asymmetry beyond `tol` is rejected.
Eigen::VectorXd vecs(const Eigen::MatrixXd& p, double tol = 1e-10);

/// Quadratic-form companion of vecs: packs the monomials
/// [a1^2, a1 a2, ..., a1 an, a2^2, ...] so that
/// vecv(a) . vecs(P) = a' P a for every symmetric P.
Eigen::VectorXd vecv(const Eigen::VectorXd& a);

/// Inverse of vecs: rebuilds the symmetric matrix.
Eigen::MatrixXd unvecs(const Eigen::VectorXd& packed, int n);

/// Length of vecs/vecv output for dimension n.
inline int vecs_size(int n) { return n * (n + 1) / 2; }

} // namespace coorp
