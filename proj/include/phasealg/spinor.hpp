#pragma once

// Dirac gamma matrices, the four-dimensional spinor representation of the
// {F, p} subalgebra at kappa = lambda = 0, and the Robertson uncertainty
// relation evaluated on spinor states.

#include <Eigen/Dense>

#include <array>
#include <cmath>

#include "phasealg/representation.hpp"

namespace phasealg {

using Matrix4c = Eigen::Matrix4cd;

/// Dirac basis: gamma_0 = diag(1, 1, -1, -1), gamma_k = [[0, sigma_k], [-sigma_k, 0]],
/// gamma_5 = i gamma_0 gamma_1 gamma_2 gamma_3, S_ij = (i/4)[gamma_i, gamma_j].
struct GammaBasis {
    std::array<Matrix4c, 4> gamma;
    Matrix4c gamma5;
    std::array<std::array<Matrix4c, 4>, 4> spin;  // S_ij
};

inline GammaBasis gamma_basis() {
    const Complex i(0.0, 1.0);
    Eigen::Matrix2cd sigma[3];
    sigma[0] << 0, 1, 1, 0;
    sigma[1] << 0, -i, i, 0;
    sigma[2] << 1, 0, 0, -1;

    GammaBasis g;
    g.gamma[0] = Matrix4c::Zero();
    g.gamma[0].diagonal() << 1, 1, -1, -1;
    for (int k = 0; k < 3; ++k) {
        g.gamma[k + 1] = Matrix4c::Zero();
        g.gamma[k + 1].topRightCorner<2, 2>() = sigma[k];
        g.gamma[k + 1].bottomLeftCorner<2, 2>() = -sigma[k];
    }
    g.gamma5 = i * g.gamma[0] * g.gamma[1] * g.gamma[2] * g.gamma[3];
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            g.spin[a][b] = (i / 4.0) * (g.gamma[a] * g.gamma[b] - g.gamma[b] * g.gamma[a]);
    return g;
}

/// rho(F_ij) = S_ij, rho(p_i) = (sqrt|mu^2|/2) gamma5 gamma_i for mu^2 > 0 (spatial
/// momenta Hermitian, so(1,4)) and (sqrt|mu^2|/2) gamma_i for mu^2 < 0 (so(2,3),
/// non-unitary). The brackets are checked before returning.
inline Representation spinor_momentum_rep(double mu_sq, double tol = 1e-12) {
    if (!std::isfinite(mu_sq)) throw InvalidInput("mu_sq must be finite");
    if (mu_sq == 0.0) throw PreconditionError("spinor_momentum_rep requires mu_sq != 0");
    const GammaBasis g = gamma_basis();
    const double scale = std::sqrt(std::abs(mu_sq)) / 2.0;
    Representation rep(4, mu_sq > 0 ? "spinor so(1,4)" : "spinor so(2,3), non-unitary");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) rep.set(GeneratorIndex::F(i, j), g.spin[i][j]);
    for (int i = 0; i < 4; ++i)
        rep.set(GeneratorIndex::P(i), scale * (mu_sq > 0 ? Matrix4c(g.gamma5 * g.gamma[i]) : g.gamma[i]));

    const double residual = rep.bracket_residual(structure_constants(ParameterSet<double>(0.0, 0.0, mu_sq)));
    if (residual > tol * std::max(1.0, std::abs(mu_sq)))
        throw ConsistencyError("spinor representation fails the brackets (residual " + std::to_string(residual) + ")");
    return rep;
}

/// Unit-norm state vector.
class StateVector {
public:
    explicit StateVector(Eigen::VectorXcd psi, double tol = 1e-12) : psi_(std::move(psi)) {
        if (std::abs(psi_.norm() - 1.0) > tol) throw InvalidInput("state vector is not normalized");
    }
    static StateVector normalized(Eigen::VectorXcd psi) {
        const double n = psi.norm();
        if (n == 0.0) throw InvalidInput("cannot normalize the zero vector");
        return StateVector(psi / n);
    }
    const Eigen::VectorXcd& vector() const { return psi_; }
    Eigen::Index size() const { return psi_.size(); }

private:
    Eigen::VectorXcd psi_;
};

/// Eigenvector of rho(F_12) = S_12 with eigenvalue +1/2 (spin up along the third axis).
inline StateVector spin_up_state(const Representation& rep) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(rep[GeneratorIndex::F(1, 2)]);
    const auto& ev = solver.eigenvalues();
    for (Eigen::Index k = 0; k < ev.size(); ++k)
        if (std::abs(ev(k) - 0.5) < 1e-12) return StateVector::normalized(solver.eigenvectors().col(k));
    throw InvalidInput("rho(F12) has no +1/2 eigenvalue in this representation");
}

struct UncertaintyReport {
    double mean_a = 0.0;
    double mean_b = 0.0;
    double delta_a = 0.0;
    double delta_b = 0.0;
    Complex commutator_expectation;
    double bound = 0.0;
    bool satisfied = false;
};

/// Robertson relation delta_A delta_B >= |<[A, B]>| / 2 for Hermitian rho(a), rho(b).
inline UncertaintyReport robertson(const Representation& rep, const StateVector& psi, GeneratorIndex a,
                                   GeneratorIndex b, double tol = kDefaultTolerance) {
    const CMatrix& A = rep[a];
    const CMatrix& B = rep[b];
    if (!is_hermitian(A, tol) || !is_hermitian(B, tol))
        throw InvalidInput("Robertson relation requires Hermitian operators (" + a.name() + ", " + b.name() + ")");
    if (psi.size() != rep.dim()) throw InvalidInput("state dimension does not match representation");
    const Eigen::VectorXcd& v = psi.vector();
    auto expect = [&](const CMatrix& m) { return v.dot(m * v); };  // <psi|m|psi>

    UncertaintyReport r;
    r.mean_a = expect(A).real();
    r.mean_b = expect(B).real();
    const CMatrix id = CMatrix::Identity(rep.dim(), rep.dim());
    const CMatrix da = A - r.mean_a * id;
    const CMatrix db = B - r.mean_b * id;
    r.delta_a = std::sqrt(std::max(0.0, expect(da * da).real()));
    r.delta_b = std::sqrt(std::max(0.0, expect(db * db).real()));
    r.commutator_expectation = expect(commutator(A, B));
    r.bound = std::abs(r.commutator_expectation) / 2.0;
    r.satisfied = r.delta_a * r.delta_b >= r.bound - tol;
    if (!r.satisfied) throw ConsistencyError("Robertson inequality violated for Hermitian operators");
    return r;
}

}  // namespace phasealg
