#pragma once

// Quark-mass relations from the reduced Dirac-Gursey-Lee operator. MeV throughout.

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "phasealg/spinor.hpp"

namespace phasealg {

struct MassInputs {
    double m_constituent;  // m
    double m_current;      // m0

    MassInputs(double m, double m0) : m_constituent(m), m_current(m0) {
        if (!std::isfinite(m) || !std::isfinite(m0)) throw InvalidInput("masses must be finite");
        if (m <= 0.0) throw DomainError("constituent mass must be positive");
        if (m0 < 0.0) throw DomainError("current mass must be nonnegative");
        if (!(m > m0)) throw DomainError("constituent mass must exceed the current mass (m > m0)");
    }
};

/// |mu_s| from m = m0 + 2 i mu_s with mu_s = -i|mu_s|.
inline double mu_s_from_masses(const MassInputs& mi) { return (mi.m_constituent - mi.m_current) / 2.0; }

/// m0 = m - 2|mu_s|.
inline double current_mass(double m_constituent, double mu_abs) {
    if (!std::isfinite(m_constituent) || !std::isfinite(mu_abs)) throw InvalidInput("masses must be finite");
    if (mu_abs < 0.0) throw DomainError("|mu_s| must be nonnegative");
    const double m0 = m_constituent - 2.0 * mu_abs;
    if (m0 <= 0.0)
        throw DomainError("current mass would be nonpositive: m - 2|mu_s| = " + std::to_string(m0) +
                          " MeV; need m > 2|mu_s|");
    return m0;
}

/// Switches for the ground-state reduction of the Dirac-Gursey-Lee operator.
/// The orbital generators L^ij (and with them the d p0 L term of the total
/// momentum p_F, d = mu_s/m0) have no matrix realization here, so
/// include_orbital must stay false.
struct DGLOptions {
    bool include_orbital = false;
    bool include_spin_spin = false;  // the 2 i mu_s S_ij S^ij term
    double mu_s_imag = 0.0;          // mu_s = -i * mu_s_imag, MeV

    DGLOptions(double mu_abs, bool spin_spin = false, bool orbital = false)
        : include_orbital(orbital), include_spin_spin(spin_spin), mu_s_imag(mu_abs) {
        if (orbital) throw UnsupportedDomain("orbital terms (L^ij) are not supported");
        if (!std::isfinite(mu_abs) || mu_abs <= 0.0) throw InvalidInput("mu_s_imag must be positive");
    }
};

/// D = m0 gamma_0 + (i mu_s/2) gamma_i gamma^i [+ 2 i mu_s S_ij S^ij], on shell at
/// p0 = (m0, 0, 0, 0). With mu_s = -i|mu_s| the middle term is +2|mu_s|.
inline Matrix4c dgl_operator(double m0, const DGLOptions& opts) {
    if (opts.include_orbital) throw UnsupportedDomain("orbital terms (L^ij) are not supported");
    const GammaBasis g = gamma_basis();
    const Complex i(0.0, 1.0);
    const Complex mu_s(0.0, -opts.mu_s_imag);
    Matrix4c slash = Matrix4c::Zero();  // gamma_i gamma^i
    for (int k = 0; k < 4; ++k) slash += double(MinkowskiMetric::diag(k)) * g.gamma[k] * g.gamma[k];
    Matrix4c d = m0 * g.gamma[0] + (i * mu_s / 2.0) * slash;
    if (opts.include_spin_spin) {
        Matrix4c ss = Matrix4c::Zero();  // S_ij S^ij, all i, j
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                ss += double(MinkowskiMetric::diag(a) * MinkowskiMetric::diag(b)) * g.spin[a][b] * g.spin[a][b];
        d += 2.0 * i * mu_s * ss;
    }
    return d;
}

/// Eigenvalues of the reduced operator, sorted by decreasing real part.
inline std::vector<Complex> dgl_spectrum(double m0, const DGLOptions& opts) {
    if (!std::isfinite(m0) || m0 < 0.0) throw InvalidInput("m0 must be finite and nonnegative");
    Eigen::ComplexEigenSolver<Matrix4c> solver(dgl_operator(m0, opts), false);
    std::vector<Complex> ev(solver.eigenvalues().begin(), solver.eigenvalues().end());
    std::sort(ev.begin(), ev.end(), [](const Complex& a, const Complex& b) {
        return a.real() != b.real() ? a.real() > b.real() : a.imag() > b.imag();
    });
    return ev;
}

}  // namespace phasealg
