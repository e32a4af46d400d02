#include <gtest/gtest.h>

#include <random>

#include "../oracles.hpp"
#include "phasealg/spinor.hpp"

using namespace phasealg;
using G = GeneratorIndex;

TEST(Gamma, MatchesIndependentConstruction) {
    GammaBasis g = gamma_basis();
    oracle::Dirac d;
    for (int k = 0; k < 4; ++k) EXPECT_TRUE(CMatrix(g.gamma[k]) == d.gamma[k]) << k;
    EXPECT_TRUE(CMatrix(g.gamma5) == d.gamma5);
}

TEST(Gamma, CliffordRelationsExact) {
    GammaBasis g = gamma_basis();
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            Matrix4c anti = g.gamma[a] * g.gamma[b] + g.gamma[b] * g.gamma[a];
            EXPECT_TRUE(anti == (2.0 * MinkowskiMetric::g(a, b)) * Matrix4c::Identity()) << a << b;
        }
    Matrix4c g11 = g.gamma[1] * g.gamma[1] + g.gamma[1] * g.gamma[1];
    EXPECT_TRUE(g11 == -2.0 * Matrix4c::Identity());
    EXPECT_TRUE(g.gamma5 * g.gamma5 == Matrix4c::Identity());
    for (int a = 0; a < 4; ++a) EXPECT_TRUE(Matrix4c(g.gamma5 * g.gamma[a] + g.gamma[a] * g.gamma5) == Matrix4c::Zero());
}

TEST(Gamma, SpinGeneratorsCloseOnLorentzBracket) {
    GammaBasis g = gamma_basis();
    auto t = structure_constants(ParameterSet<double>(0, 0, 0));
    for (int p = 0; p < 6; ++p)
        for (int q = 0; q < 6; ++q) {
            auto a = G::from_index(p), b = G::from_index(q);
            Matrix4c lhs = g.spin[a.first()][a.second()] * g.spin[b.first()][b.second()] -
                           g.spin[b.first()][b.second()] * g.spin[a.first()][a.second()];
            Matrix4c rhs = Matrix4c::Zero();
            for (const auto& term : t.terms(p, q)) {
                auto c = G::from_index(term.index);
                rhs += Complex(0, term.value) * g.spin[c.first()][c.second()];
            }
            EXPECT_TRUE(lhs == rhs) << a.name() << " " << b.name();
        }
    // [S01, S12] closes onto S02 with coefficient +i g_11 ... = -i S02 per the F bracket
    Matrix4c c = g.spin[0][1] * g.spin[1][2] - g.spin[1][2] * g.spin[0][1];
    EXPECT_TRUE(c == Complex(0, -1) * g.spin[0][2]);
}

TEST(Gamma, S12SpectrumIsSpinHalf) {
    GammaBasis g = gamma_basis();
    Eigen::SelfAdjointEigenSolver<Matrix4c> s(g.spin[1][2]);
    Eigen::Vector4d expected(-0.5, -0.5, 0.5, 0.5);
    EXPECT_LE((s.eigenvalues() - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(SpinorRep, BracketsForSeveralMomentumScales) {
    for (double mu_sq : {0.25, 1.0, 4.0, 157.0 * 157.0 * 1e-6, -0.25, -1.0, -4.0}) {
        auto rep = spinor_momentum_rep(mu_sq);
        EXPECT_LE(rep.bracket_residual(structure_constants(ParameterSet<double>(0, 0, mu_sq))), 1e-12) << mu_sq;
    }
}

TEST(SpinorRep, MomentumCommutatorScalesWithMuSquared) {
    auto rep = spinor_momentum_rep(4.0);
    CMatrix c = commutator(rep[G::P(1)], rep[G::P(2)]);
    EXPECT_LE(max_abs(c - Complex(0, 4) * rep[G::F(1, 2)]), 1e-15);
    auto ads = spinor_momentum_rep(-4.0);
    CMatrix d = commutator(ads[G::P(1)], ads[G::P(2)]);
    EXPECT_LE(max_abs(d - Complex(0, -4) * ads[G::F(1, 2)]), 1e-15);
}

TEST(SpinorRep, ExplicitMomentumAtUnitScale) {
    auto rep = spinor_momentum_rep(1.0);
    CMatrix expected = CMatrix::Zero(4, 4);
    expected(0, 1) = expected(1, 0) = -0.5;
    expected(2, 3) = expected(3, 2) = 0.5;
    EXPECT_LE(max_abs(rep[G::P(1)] - expected), 1e-15);
    for (int k = 1; k < 4; ++k) EXPECT_TRUE(is_hermitian(rep[G::P(k)], 1e-15));
}

TEST(SpinorRep, RejectsZeroScale) { EXPECT_THROW(spinor_momentum_rep(0.0), PreconditionError); }

TEST(Robertson, SpinUpSaturatesBound) {
    auto rep = spinor_momentum_rep(4.0);
    auto psi = spin_up_state(rep);
    Eigen::VectorXcd s12psi = rep[G::F(1, 2)] * psi.vector();
    EXPECT_LE((s12psi - 0.5 * psi.vector()).norm(), 1e-15);
    auto r = robertson(rep, psi, G::P(1), G::P(2));
    EXPECT_NEAR(r.delta_a, 1.0, 1e-12);
    EXPECT_NEAR(r.delta_b, 1.0, 1e-12);
    EXPECT_NEAR(std::abs(r.commutator_expectation - Complex(0, 2)), 0.0, 1e-12);
    EXPECT_NEAR(r.bound, 1.0, 1e-12);
    EXPECT_NEAR(r.delta_a * r.delta_b, 4.0 / 4.0, 1e-12);
    // Each uncertainty equals mu/2 in the saturating case.
    EXPECT_NEAR(r.delta_a, std::sqrt(4.0) / 2, 1e-12);
    EXPECT_TRUE(r.satisfied);
}

TEST(Robertson, SelfCommutatorBoundZero) {
    auto rep = spinor_momentum_rep(4.0);
    auto r = robertson(rep, spin_up_state(rep), G::P(1), G::P(1));
    EXPECT_EQ(r.bound, 0.0);
    EXPECT_TRUE(r.satisfied);
}

TEST(Robertson, RandomStatesNeverViolate) {
    auto rep = spinor_momentum_rep(4.0);
    std::mt19937_64 rng(2024);
    std::normal_distribution<double> n;
    for (int s = 0; s < 10000; ++s) {
        Eigen::VectorXcd v(4);
        for (int k = 0; k < 4; ++k) v(k) = Complex(n(rng), n(rng));
        auto r = robertson(rep, StateVector::normalized(v), G::P(1), G::P(2));
        ASSERT_TRUE(r.satisfied);
        ASSERT_LE(std::min(r.delta_a, r.delta_b), std::sqrt(r.delta_a * r.delta_b) + 1e-15);
    }
}

TEST(Robertson, RefusesNonHermitianAndUnnormalized) {
    auto ads = spinor_momentum_rep(-4.0);
    Eigen::VectorXcd e0 = Eigen::VectorXcd::Zero(4);
    e0(0) = 1;
    EXPECT_THROW(robertson(ads, StateVector(e0), G::P(1), G::P(2)), InvalidInput);
    EXPECT_THROW(StateVector(Eigen::VectorXcd::Ones(4)), InvalidInput);
}
