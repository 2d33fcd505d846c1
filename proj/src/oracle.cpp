#include "coorp/oracle.hpp"

#include "coorp/kronpack.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <stdexcept>

namespace coorp {

double spectral_abscissa(const Eigen::MatrixXd& a)
{
    return Eigen::EigenSolver<Eigen::MatrixXd>(a, false)
        .eigenvalues()
        .real()
        .maxCoeff();
}

Eigen::MatrixXd lyapunov_solve(const Eigen::MatrixXd& a_cl, const Eigen::MatrixXd& w)
{
    const int n = static_cast<int>(a_cl.rows());
    if (a_cl.cols() != n || w.rows() != n || w.cols() != n) {
        throw std::invalid_argument("lyapunov_solve: dimension mismatch");
    }
    if (spectral_abscissa(a_cl) >= 0.0) {
        throw std::invalid_argument("lyapunov_solve: closed-loop matrix is not Hurwitz");
    }
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
    const Eigen::MatrixXd at = a_cl.transpose();
    const Eigen::MatrixXd lhs = kron(id, at) + kron(at, id);
    const Eigen::VectorXd p_vec = lhs.partialPivLu().solve(-vec(w));
    Eigen::MatrixXd p = Eigen::Map<const Eigen::MatrixXd>(p_vec.data(), n, n);
    return 0.5 * (p + p.transpose());
}

KleinmanResult kleinman(const Eigen::MatrixXd& A,
                        const Eigen::MatrixXd& B,
                        const Eigen::MatrixXd& Q_out,
                        const Eigen::MatrixXd& R,
                        const Eigen::MatrixXd& K0,
                        double tol,
                        int max_iter)
{
    if (spectral_abscissa(A - B * K0) >= 0.0) {
        throw std::invalid_argument("kleinman: initial gain is not stabilizing");
    }
    const auto r_solver = R.ldlt();
    KleinmanResult out;
    Eigen::MatrixXd k = K0;
    for (int it = 1; it <= max_iter; ++it) {
        const Eigen::MatrixXd w = Q_out + k.transpose() * R * k;
        const Eigen::MatrixXd p = lyapunov_solve(A - B * k, w);
        out.history.push_back(p);
        out.iterations = it;
        k = r_solver.solve(B.transpose() * p);
        if (out.history.size() >= 2) {
            const auto sz = out.history.size();
            if ((out.history[sz - 1] - out.history[sz - 2]).norm() < tol) {
                break;
            }
        }
    }
    out.P = out.history.back();
    out.K = k;
    return out;
}

namespace {

/// Minimizes |Wx (x0 + Mx y)|^2 + |Wu (u0 + Mu y)|^2 over y and returns the
/// minimizer; blocks may have zero columns (no freedom -> empty y).
Eigen::VectorXd minimize_stacked(const Eigen::MatrixXd& wx_mx,
                                 const Eigen::MatrixXd& wu_mu,
                                 const Eigen::VectorXd& wx_x0,
                                 const Eigen::VectorXd& wu_u0)
{
    const Eigen::Index cols = wx_mx.cols();
    if (cols == 0) {
        return Eigen::VectorXd(0);
    }
    Eigen::MatrixXd lhs(wx_mx.rows() + wu_mu.rows(), cols);
    lhs << wx_mx, wu_mu;
    Eigen::VectorXd rhs(wx_x0.size() + wu_u0.size());
    rhs << -wx_x0, -wu_u0;
    return lhs.colPivHouseholderQr().solve(rhs);
}

Eigen::MatrixXd matrix_sqrt(const Eigen::MatrixXd& m)
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m);
    if (eig.eigenvalues().minCoeff() <= 0.0) {
        throw std::invalid_argument("regulator: weight matrices must be positive definite");
    }
    return eig.operatorSqrt();
}

} // namespace

RegulatorPair exact_regulator(const Eigen::MatrixXd& A,
                              const Eigen::MatrixXd& B,
                              const Eigen::MatrixXd& C,
                              const Eigen::MatrixXd& D,
                              const Eigen::MatrixXd& F,
                              const Eigen::MatrixXd& E,
                              const Eigen::MatrixXd& Qbar,
                              const Eigen::MatrixXd& Rbar)
{
    const int n = static_cast<int>(A.rows());
    const int m = static_cast<int>(B.cols());
    const int p = static_cast<int>(C.rows());
    const int q = static_cast<int>(E.rows());

    // Stacked linear system in [vec(X); vec(U)]:
    //   (E' (x) I - I (x) A) vec(X) - (I (x) B) vec(U) = vec(D)
    //   (I (x) C) vec(X)                              = -vec(F)
    const Eigen::MatrixXd iq = Eigen::MatrixXd::Identity(q, q);
    const Eigen::MatrixXd in = Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd sys = Eigen::MatrixXd::Zero(n * q + p * q, n * q + m * q);
    sys.topLeftCorner(n * q, n * q) = kron(E.transpose(), in) - kron(iq, A);
    sys.topRightCorner(n * q, m * q) = -kron(iq, B);
    sys.bottomLeftCorner(p * q, n * q) = kron(iq, C);
    Eigen::VectorXd rhs(n * q + p * q);
    rhs << vec(D), -vec(F);

    // Particular solution plus null-space basis from the SVD.
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys, Eigen::ComputeThinU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double cutoff = sv.size() > 0 ? 1e-12 * sv(0) : 0.0;
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > cutoff) ++rank;
    }
    Eigen::VectorXd coeff = svd.matrixU().transpose() * rhs;
    Eigen::VectorXd z0 = Eigen::VectorXd::Zero(sys.cols());
    for (int i = 0; i < rank; ++i) {
        z0 += (coeff(i) / sv(i)) * svd.matrixV().col(i);
    }
    if ((sys * z0 - rhs).norm() > 1e-8 * (1.0 + rhs.norm())) {
        throw std::invalid_argument(
            "exact_regulator: regulator equations are unsolvable "
            "(transmission-zero condition violated)");
    }
    const Eigen::MatrixXd null_basis =
        svd.matrixV().rightCols(svd.matrixV().cols() - rank);

    // Minimize Tr(X' Qbar X + U' Rbar U) over z0 + null_basis * y.
    const Eigen::MatrixXd wx = kron(iq, matrix_sqrt(Qbar));
    const Eigen::MatrixXd wu = kron(iq, matrix_sqrt(Rbar));
    const Eigen::MatrixXd nx = null_basis.topRows(n * q);
    const Eigen::MatrixXd nu = null_basis.bottomRows(m * q);
    const Eigen::VectorXd y = minimize_stacked(wx * nx, wu * nu,
                                               wx * z0.head(n * q),
                                               wu * z0.tail(m * q));
    const Eigen::VectorXd z = null_basis.cols() > 0 ? (z0 + null_basis * y).eval() : z0;

    RegulatorPair pair;
    pair.X = Eigen::Map<const Eigen::MatrixXd>(z.data(), n, q);
    pair.U = Eigen::Map<const Eigen::MatrixXd>(z.data() + n * q, m, q);
    return pair;
}

OracleSolution optimal_policy(const AgentModel& model,
                              const Eigen::MatrixXd& E,
                              const Eigen::MatrixXd& Q_out,
                              const Eigen::MatrixXd& R,
                              const Eigen::MatrixXd& Qbar,
                              const Eigen::MatrixXd& Rbar)
{
    const Eigen::MatrixXd k0 = stabilizing_gain(model.A, model.B);
    const KleinmanResult ric = kleinman(model.A, model.B, Q_out, R, k0);
    const RegulatorPair reg =
        exact_regulator(model.A, model.B, model.C, model.D, model.F, E, Qbar, Rbar);
    OracleSolution sol;
    sol.P = ric.P;
    sol.K = ric.K;
    sol.X = reg.X;
    sol.U = reg.U;
    sol.L = reg.U + ric.K * reg.X;
    return sol;
}

Eigen::MatrixXd stabilizing_gain(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B)
{
    const int n = static_cast<int>(A.rows());
    const int m = static_cast<int>(B.cols());
    if (m == 1) {
        // Ackermann placement at -1, -2, ..., -n.
        Eigen::MatrixXd ctrb(n, n);
        Eigen::MatrixXd power = B;
        for (int k = 0; k < n; ++k) {
            ctrb.col(k) = power;
            power = A * power;
        }
        Eigen::MatrixXd phi = Eigen::MatrixXd::Identity(n, n);
        for (int k = 1; k <= n; ++k) {
            phi = phi * (A + static_cast<double>(k) * Eigen::MatrixXd::Identity(n, n));
        }
        const Eigen::FullPivLU<Eigen::MatrixXd> lu(ctrb);
        if (!lu.isInvertible()) {
            throw std::invalid_argument("stabilizing_gain: pair (A, B) is not controllable");
        }
        Eigen::RowVectorXd last = Eigen::RowVectorXd::Zero(n);
        last(n - 1) = 1.0;
        Eigen::MatrixXd k = last * lu.solve(phi);
        return k;
    }

    // Lyapunov-based construction: with beta above the spectral radius,
    // (A + beta I) Z + Z (A + beta I)' = 2 B B' has Z > 0 for controllable
    // pairs and K = B' Z^{-1} makes A - B K Hurwitz.
    const double beta = A.norm() + 0.5;
    const Eigen::MatrixXd shifted =
        -(A + beta * Eigen::MatrixXd::Identity(n, n)).transpose();
    const Eigen::MatrixXd z = lyapunov_solve(shifted, 2.0 * B * B.transpose());
    Eigen::LDLT<Eigen::MatrixXd> zfac(z);
    if (zfac.info() != Eigen::Success || !zfac.isPositive()) {
        throw std::invalid_argument("stabilizing_gain: pair (A, B) is not controllable");
    }
    return zfac.solve(B).transpose();
}

} // namespace coorp
