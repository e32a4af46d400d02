#pragma once

// Casimir operators evaluated in finite-dimensional matrix representations.

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <vector>

#include "phasealg/classify.hpp"
#include "phasealg/representation.hpp"

namespace phasealg {

struct CasimirReport {
    CMatrix matrix;
    double centrality_residual = 0.0;
    std::optional<Complex> scalar_value;
};

/// max over represented a of ||[C, rho_a]||_inf.
inline double centrality_residual(const CMatrix& c, const Representation& rep) {
    double worst = 0.0;
    for (int a = 0; a < kNumGenerators; ++a)
        if (rep.has(a)) worst = std::max(worst, max_abs(commutator(c, rep.at(a))));
    return worst;
}

inline CasimirReport make_casimir_report(CMatrix c, const Representation& rep, double tol) {
    CasimirReport report;
    report.centrality_residual = centrality_residual(c, rep);
    const Complex mean = c.trace() / static_cast<double>(c.rows());
    if (max_abs(c - mean * CMatrix::Identity(c.rows(), c.cols())) <= tol) report.scalar_value = mean;
    report.matrix = std::move(c);
    return report;
}

namespace detail {

template <Scalar S>
void require_matching_rep(const Representation& rep, const ParameterSet<S>& params, double tol) {
    const double residual = rep.bracket_residual(structure_constants(params));
    if (residual > tol)
        throw InvalidInput("representation does not satisfy the brackets for these parameters (residual " +
                           std::to_string(residual) + ")");
}

// sum_{i<j} rho(F_ij) rho(F^ij); F^ij = g^ii g^jj F_ij.
inline CMatrix lorentz_square(const Representation& rep) {
    CMatrix sum = CMatrix::Zero(rep.dim(), rep.dim());
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            const CMatrix& f = rep[GeneratorIndex::F(i, j)];
            sum += double(MinkowskiMetric::diag(i) * MinkowskiMetric::diag(j)) * (f * f);
        }
    return sum;
}

// sum_i rho(a_i) rho(b^i).
inline CMatrix contract(const Representation& rep, GeneratorIndex (*a)(int), GeneratorIndex (*b)(int)) {
    CMatrix sum = CMatrix::Zero(rep.dim(), rep.dim());
    for (int i = 0; i < 4; ++i) sum += double(MinkowskiMetric::diag(i)) * (rep[a(i)] * rep[b(i)]);
    return sum;
}

inline CMatrix k2_operator(const Representation& rep, double lorentz_coeff, double kappa_coeff, double xx_coeff,
                           double pp_coeff) {
    using G = GeneratorIndex;
    const CMatrix& id = rep[G::Id()];
    return lorentz_coeff * lorentz_square(rep) + id * id +
           kappa_coeff * (contract(rep, &G::X, &G::P) + contract(rep, &G::P, &G::X)) -
           xx_coeff * contract(rep, &G::X, &G::X) - pp_coeff * contract(rep, &G::P, &G::P);
}

}  // namespace detail

/// Quadratic Casimir in natural units:
///   (l^2 m^2 - k^2) sum_{i<j} F_ij F^ij + I^2 + k (x_i p^i + p_i x^i) - m^2 x_i x^i - l^2 p_i p^i.
/// The same operator, acting on a field, is the modified Klein-Gordon-Fock operator.
template <Scalar S>
CasimirReport casimir_k2(const Representation& rep, const ParameterSet<S>& params, double tol = kDefaultTolerance) {
    if (!rep.complete()) throw InvalidInput("casimir_k2 needs all 15 generators represented");
    detail::require_matching_rep(rep, params, tol);
    const double k = to_double(params.kappa), l2 = to_double(params.lambda_sq), m2 = to_double(params.mu_sq);
    return make_casimir_report(detail::k2_operator(rep, l2 * m2 - k * k, k, m2, l2), rep, tol);
}

/// The quadratic Casimir written with M, L, H:
///   sum F F^ (1/(M^2 L^2) - 1/H^2) + I^2 + (x p^ + p x^)/H - x x^/L^2 - p p^/M^2.
inline CasimirReport casimir_k2_units(const Representation& rep, const UnitsParams<double>& u,
                                      double tol = kDefaultTolerance) {
    if (!rep.complete()) throw InvalidInput("casimir_k2_units needs all 15 generators represented");
    convert_units(u);
    const double h = std::sqrt(u.H_sq);
    return make_casimir_report(
        detail::k2_operator(rep, 1.0 / (u.M_sq * u.L_sq) - 1.0 / u.H_sq, 1.0 / h, 1.0 / u.L_sq, 1.0 / u.M_sq), rep,
        tol);
}

/// Casimir of the ten-generator {F, p} subalgebra (kappa = lambda = 0):
///   mu^2 sum_{i<j} F_ij F^ij - p_i p^i.
inline CasimirReport casimir_momentum_subalgebra(const Representation& rep, double mu_sq,
                                                 double tol = kDefaultTolerance) {
    using G = GeneratorIndex;
    detail::require_matching_rep(rep, ParameterSet<double>(0.0, 0.0, mu_sq), tol);
    CMatrix c = mu_sq * detail::lorentz_square(rep) - detail::contract(rep, &G::P, &G::P);
    return make_casimir_report(std::move(c), rep, tol);
}

enum class EpsCasimir { K1, K3 };

namespace detail {

struct PairTerm {
    std::array<int, 3> pairs;  // J-basis indices of (A<B), (C<D), (E<F)
    int sign;                  // epsilon_{ABCDEF}
};

inline int permutation_sign(const std::array<int, 6>& p) {
    int sign = 1;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (p[i] > p[j]) sign = -sign;
    return sign;
}

// All 90 ordered triples of disjoint ordered pairs partitioning {0..5}.
inline const std::vector<PairTerm>& epsilon_pair_terms() {
    static const std::vector<PairTerm> terms = [] {
        std::vector<PairTerm> out;
        std::array<int, 6> p{0, 1, 2, 3, 4, 5};
        do {
            if (p[0] < p[1] && p[2] < p[3] && p[4] < p[5])
                out.push_back({{pair_index(p[0], p[1], 6), pair_index(p[2], p[3], 6), pair_index(p[4], p[5], 6)},
                               permutation_sign(p)});
        } while (std::next_permutation(p.begin(), p.end()));
        return out;
    }();
    return terms;
}

inline std::array<std::pair<int, int>, kNumPairs6> six_pairs() {
    std::array<std::pair<int, int>, kNumPairs6> out{};
    int n = 0;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b) out[n++] = {a, b};
    return out;
}

}  // namespace detail

/// Epsilon-contracted Casimirs in the J_AB basis of an embedding:
///   K1 = eps_{ABCDEF} J^AB J^CD J^EF,
///   K3 = G_AB G^AB with G_AB = eps_{ABCDEF} J^CD J^EF.
/// The full index sum runs over every ordering of the J factors, so both are
/// already symmetrized. `identity_slot` (a J-basis index) replaces that J by the
/// identity matrix, which breaks centrality; used to test the residual check.
inline CasimirReport casimir_eps(const Representation& rep, const Embedding& emb, EpsCasimir kind,
                                 double tol = kDefaultTolerance, std::optional<int> identity_slot = std::nullopt) {
    if (!rep.complete()) throw InvalidInput("casimir_eps needs all 15 generators represented");
    const int dim = rep.dim();
    const auto pairs = detail::six_pairs();

    std::array<CMatrix, kNumPairs6> upper;  // J^AB
    for (int n = 0; n < kNumPairs6; ++n) {
        CMatrix j = CMatrix::Zero(dim, dim);
        for (int a = 0; a < kNumGenerators; ++a)
            if (emb.basis_map(n, a) != 0.0) j += emb.basis_map(n, a) * rep.at(a);
        if (identity_slot && *identity_slot == n) j = CMatrix::Identity(dim, dim);
        upper[n] = double(emb.six_metric[pairs[n].first] * emb.six_metric[pairs[n].second]) * j;
    }

    const auto& terms = detail::epsilon_pair_terms();
    CMatrix c = CMatrix::Zero(dim, dim);
    if (kind == EpsCasimir::K1) {
        // 2^3 from the A<->B orderings inside each pair.
        for (const auto& t : terms) c += double(8 * t.sign) * (upper[t.pairs[0]] * upper[t.pairs[1]] * upper[t.pairs[2]]);
    } else {
        std::array<CMatrix, kNumPairs6> g;
        for (auto& m : g) m = CMatrix::Zero(dim, dim);
        for (const auto& t : terms) g[t.pairs[0]] += double(4 * t.sign) * (upper[t.pairs[1]] * upper[t.pairs[2]]);
        // sum over all (A, B) = 2 sum_{A<B}; G^AB = eta^AA eta^BB G_AB
        for (int n = 0; n < kNumPairs6; ++n)
            c += double(2 * emb.six_metric[pairs[n].first] * emb.six_metric[pairs[n].second]) * (g[n] * g[n]);
    }
    return make_casimir_report(std::move(c), rep, tol);
}

struct KgfResult {
    std::optional<Complex> eigenvalue;
    bool satisfied = false;
    bool scalar = false;
};

/// Whether every vector of the representation space solves the modified
/// Klein-Gordon-Fock equation C Phi = 0. Complete representations use the full
/// quadratic Casimir; {F, p} representations (kappa = lambda = 0) use the
/// subalgebra Casimir. A non-scalar operator is satisfied only if it vanishes.
template <Scalar S>
KgfResult kgf_check(const Representation& rep, const ParameterSet<S>& params, double tol = kDefaultTolerance) {
    CasimirReport report;
    if (rep.complete()) {
        report = casimir_k2(rep, params, tol);
    } else {
        if (!ScalarTraits<S>::is_zero(params.kappa, tol) || !ScalarTraits<S>::is_zero(params.lambda_sq, tol))
            throw InvalidInput("partial representations are only supported for kappa = lambda = 0");
        report = casimir_momentum_subalgebra(rep, to_double(params.mu_sq), tol);
    }
    KgfResult result;
    result.scalar = report.scalar_value.has_value();
    result.eigenvalue = report.scalar_value;
    result.satisfied = result.scalar ? std::abs(*report.scalar_value) <= tol : max_abs(report.matrix) <= tol;
    return result;
}

}  // namespace phasealg
