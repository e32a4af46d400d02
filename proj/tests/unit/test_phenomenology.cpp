#include <gtest/gtest.h>

#include <random>

#include "phasealg/phenomenology.hpp"

using namespace phasealg;

TEST(MuS, UpQuarkNumbers) { EXPECT_EQ(mu_s_from_masses(MassInputs(316, 2)), 157.0); }

TEST(MuS, OtherArithmetic) { EXPECT_EQ(mu_s_from_masses(MassInputs(500, 186)), 157.0); }

TEST(MuS, RequiresConstituentAboveCurrent) {
    EXPECT_THROW(MassInputs(100, 100), DomainError);
    EXPECT_THROW(MassInputs(90, 100), DomainError);
    EXPECT_THROW(MassInputs(-1, 0), DomainError);
    EXPECT_THROW(MassInputs(std::nan(""), 0), InvalidInput);
}

TEST(MuS, Monotone) {
    EXPECT_LT(mu_s_from_masses(MassInputs(300, 2)), mu_s_from_masses(MassInputs(316, 2)));
    EXPECT_GT(mu_s_from_masses(MassInputs(316, 1)), mu_s_from_masses(MassInputs(316, 2)));
}

TEST(CurrentMass, Inversion) {
    EXPECT_EQ(current_mass(316, 157), 2.0);
    EXPECT_EQ(current_mass(500, 157), 186.0);
    EXPECT_THROW(current_mass(300, 157), DomainError);
}

TEST(CurrentMass, RoundTrip) {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> m0d(0, 4000), gap(1, 4000);
    for (int n = 0; n < 1000; ++n) {
        // Quarter-MeV grid keeps every intermediate exactly representable.
        double m0 = m0d(rng) / 4.0 + 0.25, m = m0 + gap(rng) / 4.0;
        EXPECT_EQ(current_mass(m, mu_s_from_masses(MassInputs(m, m0))), m0);
    }
}

TEST(Dgl, GroundStateReduction) {
    auto ev = dgl_spectrum(2, DGLOptions(157));
    ASSERT_EQ(ev.size(), 4u);
    std::vector<Complex> expected{316, 316, 312, 312};
    for (int k = 0; k < 4; ++k) EXPECT_EQ(ev[k], expected[k]);
}

TEST(Dgl, MasslessCurrentQuark) {
    for (const auto& z : dgl_spectrum(0, DGLOptions(157))) EXPECT_EQ(z, Complex(314, 0));
}

TEST(Dgl, SpreadAndMean) {
    for (double m0 : {0.5, 2.0, 95.0}) {
        for (double mu : {10.0, 157.0}) {
            auto ev = dgl_spectrum(m0, DGLOptions(mu));
            EXPECT_EQ(ev.front().real() - ev.back().real(), 2 * m0);
            Complex mean = (ev[0] + ev[1] + ev[2] + ev[3]) / 4.0;
            EXPECT_EQ(mean, Complex(2 * mu, 0));
            for (const auto& z : ev) EXPECT_EQ(z.imag(), 0.0);
        }
    }
}

TEST(Dgl, SpinSpinTermShiftsSpectrum) {
    // Brute-force S_ij S^ij over all (i, j) with Dirac-basis gammas.
    GammaBasis g = gamma_basis();
    Matrix4c ss = Matrix4c::Zero();
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            ss += double(MinkowskiMetric::diag(a) * MinkowskiMetric::diag(b)) * g.spin[a][b] * g.spin[a][b];
    const Complex contraction = ss(0, 0);
    ASSERT_LE(max_abs(CMatrix(ss - contraction * Matrix4c::Identity())), 1e-15);
    EXPECT_EQ(contraction, Complex(3, 0));

    auto plain = dgl_spectrum(2, DGLOptions(157));
    auto with = dgl_spectrum(2, DGLOptions(157, true));
    for (int k = 0; k < 4; ++k) EXPECT_NEAR(std::abs(with[k] - (plain[k] + 2.0 * 157.0 * contraction)), 0.0, 1e-9);
    // 316 becomes 1258: the spin-spin piece is not part of the mass relation.
    EXPECT_NEAR(with[0].real(), 316 + 6 * 157, 1e-9);
}

TEST(Dgl, OptionErrors) {
    EXPECT_THROW(DGLOptions(157, false, true), UnsupportedDomain);
    EXPECT_THROW(DGLOptions(0), InvalidInput);
    EXPECT_THROW(dgl_spectrum(-1, DGLOptions(157)), InvalidInput);
}
