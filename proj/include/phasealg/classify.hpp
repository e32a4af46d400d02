#pragma once

// Adjoint representation, Killing-Cartan form, Sylvester inertia and the
// pseudoorthogonal classification/embedding of the deformed algebra.

#include <Eigen/Dense>

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "phasealg/algebra.hpp"
#include "phasealg/representation.hpp"

namespace phasealg {

template <Scalar S>
Representation adjoint_representation(const StructureTensor<S>& t) {
    if (t.dim() != kNumGenerators) throw InvalidInput("adjoint_representation expects the 15-generator tensor");
    Representation rep(kNumGenerators, "adjoint");
    for (int a = 0; a < kNumGenerators; ++a) {
        CMatrix m = CMatrix::Zero(kNumGenerators, kNumGenerators);
        for (int b = 0; b < kNumGenerators; ++b)
            for (const auto& term : t.terms(a, b)) m(term.index, b) = Complex(0.0, to_double(term.value));
        rep.set(GeneratorIndex::from_index(a), std::move(m));
    }
    return rep;
}

/// Dense symmetric n x n matrix over S.
template <Scalar S>
class SymmetricForm {
public:
    explicit SymmetricForm(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, S(0)) {}

    static SymmetricForm identity(int n) {
        SymmetricForm k(n);
        for (int i = 0; i < n; ++i) k.set(i, i, S(1));
        return k;
    }

    int size() const { return n_; }
    const S& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }
    void set(int i, int j, const S& v) {
        data_[static_cast<std::size_t>(i) * n_ + j] = v;
        data_[static_cast<std::size_t>(j) * n_ + i] = v;
    }
    bool is_symmetric() const {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    Eigen::MatrixXd to_eigen() const {
        Eigen::MatrixXd m(n_, n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) m(i, j) = to_double((*this)(i, j));
        return m;
    }

private:
    int n_;
    std::vector<S> data_;
};

/// K_ab = sum_{c,d} f^c_ad f^d_bc, the trace form of the real adjoint action
/// X_a = -i T_a. With this sign rotations are negative and boosts positive.
template <Scalar S>
SymmetricForm<S> killing_form(const StructureTensor<S>& t) {
    const int n = t.dim();
    struct Entry {
        int row, col;
        S value;
    };
    std::vector<std::vector<Entry>> ad(n);
    for (int a = 0; a < n; ++a)
        for (int d = 0; d < n; ++d)
            for (const auto& term : t.terms(a, d)) ad[a].push_back({term.index, d, term.value});

    SymmetricForm<S> k(n);
    for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
            S sum(0);
            for (const auto& e : ad[a]) {
                const S& other = t(e.col, b, e.row);
                if (!ScalarTraits<S>::is_zero(other, 0.0)) sum += e.value * other;
            }
            k.set(a, b, sum);
        }
    }
    return k;
}

/// Determinant by Gaussian elimination (exact in rational mode).
template <Scalar S>
S determinant(const SymmetricForm<S>& k) {
    const int n = k.size();
    std::vector<std::vector<S>> m(n, std::vector<S>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = k(i, j);
    S det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        if constexpr (ScalarTraits<S>::exact) {
            for (int r = col; r < n; ++r)
                if (sgn(m[r][col]) != 0) {
                    pivot = r;
                    break;
                }
        } else {
            double best = 0.0;
            for (int r = col; r < n; ++r)
                if (std::abs(m[r][col]) > best) {
                    best = std::abs(m[r][col]);
                    pivot = r;
                }
        }
        if (pivot < 0) return S(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (ScalarTraits<S>::is_zero(m[r][col], 0.0)) continue;
            S factor = m[r][col] / m[col][col];
            for (int c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
        }
    }
    return det;
}

struct Inertia {
    int n_pos = 0;
    int n_neg = 0;
    int n_zero = 0;

    int total() const { return n_pos + n_neg + n_zero; }
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

inline std::string to_string(const Inertia& in) {
    return "(" + std::to_string(in.n_pos) + ", " + std::to_string(in.n_neg) + ", " + std::to_string(in.n_zero) + ")";
}

/// Sylvester inertia by symmetric congruence elimination. Zero diagonals with a
/// nonzero off-diagonal entry are repaired by the congruence row_i += row_j.
template <Scalar S>
Inertia congruence_inertia(const SymmetricForm<S>& k, double tol = kDefaultTolerance) {
    using T = ScalarTraits<S>;
    const int n = k.size();
    std::vector<std::vector<S>> a(n, std::vector<S>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = k(i, j);

    auto swap_index = [&](int i, int j) {
        if (i == j) return;
        std::swap(a[i], a[j]);
        for (auto& row : a) std::swap(row[i], row[j]);
    };

    Inertia result;
    for (int p = 0; p < n; ++p) {
        int diag = -1;
        for (int i = p; i < n && diag < 0; ++i)
            if (!T::is_zero(a[i][i], tol)) diag = i;
        if (diag < 0) {
            int pi = -1, pj = -1;
            for (int i = p; i < n && pi < 0; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (!T::is_zero(a[i][j], tol)) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi < 0) {
                result.n_zero += n - p;
                break;
            }
            for (int c = 0; c < n; ++c) a[pi][c] += a[pj][c];
            for (int r = 0; r < n; ++r) a[r][pi] += a[r][pj];
            diag = pi;
        }
        swap_index(p, diag);
        const S pivot = a[p][p];
        (T::sign(pivot, tol) > 0 ? result.n_pos : result.n_neg)++;
        for (int r = p + 1; r < n; ++r) {
            if (T::is_zero(a[r][p], 0.0)) continue;
            S factor = a[r][p] / pivot;
            for (int c = p + 1; c < n; ++c) a[r][c] -= factor * a[p][c];
        }
        for (int r = p + 1; r < n; ++r) a[r][p] = a[p][r] = S(0);
    }
    return result;
}

/// Exact mode: congruence diagonalization. Float mode: eigenvalue signs with
/// |lambda| <= tol counted as zero.
template <Scalar S>
Inertia inertia(const SymmetricForm<S>& k, double tol = kDefaultTolerance) {
    if (!k.is_symmetric()) throw InvalidInput("inertia requires a symmetric form");
    if constexpr (ScalarTraits<S>::exact) {
        return congruence_inertia(k, tol);
    } else {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(k.to_eigen(), Eigen::EigenvaluesOnly);
        Inertia in;
        for (double ev : solver.eigenvalues()) {
            if (std::abs(ev) <= tol)
                ++in.n_zero;
            else
                ++(ev > 0 ? in.n_pos : in.n_neg);
        }
        return in;
    }
}

/// lambda^2 mu^2 - kappa^2, the determinant of Q = [[mu^2, kappa], [kappa, lambda^2]].
/// Nonzero exactly when the algebra is semisimple.
template <Scalar S>
S semisimplicity_indicator(const ParameterSet<S>& p) {
    return S(p.lambda_sq * p.mu_sq - p.kappa * p.kappa);
}

class AlgebraClass {
public:
    enum class Kind { SO24, SO15, SO33, Degenerate };

    static AlgebraClass so24() { return AlgebraClass(Kind::SO24, {}); }
    static AlgebraClass so15() { return AlgebraClass(Kind::SO15, {}); }
    static AlgebraClass so33() { return AlgebraClass(Kind::SO33, {}); }
    static AlgebraClass degenerate(std::string reason) { return AlgebraClass(Kind::Degenerate, std::move(reason)); }

    /// From the signature (p, q) of a six-dimensional metric, p = number of +1 entries.
    static AlgebraClass from_signature(int p, int q) {
        if (p > q) std::swap(p, q);
        if (p == 2 && q == 4) return so24();
        if (p == 1 && q == 5) return so15();
        if (p == 3 && q == 3) return so33();
        throw ConsistencyError("unexpected six-metric signature (" + std::to_string(p) + "," + std::to_string(q) + ")");
    }

    Kind kind() const { return kind_; }
    bool semisimple() const { return kind_ != Kind::Degenerate; }
    const std::string& reason() const { return reason_; }

    std::string name() const {
        switch (kind_) {
            case Kind::SO24: return "SO(2,4)";
            case Kind::SO15: return "SO(1,5)";
            case Kind::SO33: return "SO(3,3)";
            default: return "Degenerate";
        }
    }

    /// (p, q) with p <= q; Degenerate has none.
    std::pair<int, int> signature() const {
        switch (kind_) {
            case Kind::SO24: return {2, 4};
            case Kind::SO15: return {1, 5};
            case Kind::SO33: return {3, 3};
            default: throw PreconditionError("degenerate algebra has no pseudoorthogonal signature");
        }
    }

    friend bool operator==(const AlgebraClass& a, const AlgebraClass& b) { return a.kind_ == b.kind_; }

private:
    AlgebraClass(Kind k, std::string reason) : kind_(k), reason_(std::move(reason)) {}
    Kind kind_;
    std::string reason_;
};

/// Killing inertia of so(p,q): pq noncompact (positive) and the compact
/// so(p) + so(q) generators (negative).
inline Inertia so_pq_killing_inertia(int p, int q) {
    return Inertia{p * q, p * (p - 1) / 2 + q * (q - 1) / 2, 0};
}

/// det Q < 0 -> SO(2,4); det Q > 0 with Q positive definite -> SO(1,5), negative
/// definite -> SO(3,3); det Q = 0 -> Degenerate.
template <Scalar S>
AlgebraClass classify(const ParameterSet<S>& p, double tol = kDefaultTolerance) {
    using T = ScalarTraits<S>;
    const S det = semisimplicity_indicator(p);
    const int s = T::sign(det, tol);
    if (s == 0) {
        if (T::is_zero(p.kappa, tol) && T::is_zero(p.lambda_sq, tol) && T::is_zero(p.mu_sq, tol))
            return AlgebraClass::degenerate("det Q = 0 (canonical limit)");
        return AlgebraClass::degenerate("det Q = 0");
    }
    if (s < 0) return AlgebraClass::so24();
    return T::sign(p.mu_sq, tol) > 0 ? AlgebraClass::so15() : AlgebraClass::so33();
}

using SixMetric = std::array<int, 6>;

inline constexpr int kNumPairs6 = 15;

/// Canonical so(eta) constants in the J_AB basis (A < B, lexicographic):
/// [J_AB, J_CD] = i(eta_BC J_AD - eta_AC J_BD + eta_AD J_BC - eta_BD J_AC).
template <Scalar S>
StructureTensor<S> pseudo_orthogonal_constants(const SixMetric& eta) {
    auto signed_pair = [](int a, int b) -> SignedGenerator {
        if (a == b) return {0, 0};
        return a < b ? SignedGenerator{pair_index(a, b, 6), 1} : SignedGenerator{pair_index(b, a, 6), -1};
    };
    auto metric = [&](int a, int b) { return a == b ? eta[a] : 0; };
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b) pairs.emplace_back(a, b);

    StructureTensor<S> t(kNumPairs6);
    for (int p = 0; p < kNumPairs6; ++p) {
        for (int q = p + 1; q < kNumPairs6; ++q) {
            auto [A, B] = pairs[p];
            auto [C, D] = pairs[q];
            const std::array<std::pair<int, SignedGenerator>, 4> parts = {{
                {metric(B, C), signed_pair(A, D)},
                {-metric(A, C), signed_pair(B, D)},
                {metric(A, D), signed_pair(B, C)},
                {-metric(B, D), signed_pair(A, C)},
            }};
            for (const auto& [g, target] : parts)
                if (g != 0 && target.sign != 0) t.add_antisymmetric(p, q, target.index, S(g * target.sign));
        }
    }
    return t;
}

/// Structure constants in a new basis J_n = sum_a B(n, a) T_a.
inline StructureTensor<double> transform_constants(const StructureTensor<double>& t, const Eigen::MatrixXd& basis_map) {
    const int n = t.dim();
    const Eigen::MatrixXd inv = basis_map.inverse();
    StructureTensor<double> out(n);
    for (int l = 0; l < n; ++l) {
        for (int m = l + 1; m < n; ++m) {
            Eigen::VectorXd old_coeffs = Eigen::VectorXd::Zero(n);
            for (int a = 0; a < n; ++a) {
                if (basis_map(l, a) == 0.0) continue;
                for (int b = 0; b < n; ++b) {
                    if (basis_map(m, b) == 0.0) continue;
                    for (const auto& term : t.terms(a, b))
                        old_coeffs(term.index) += basis_map(l, a) * basis_map(m, b) * term.value;
                }
            }
            // T_c = sum_k inv(c, k) J_k
            Eigen::VectorXd new_coeffs = inv.transpose() * old_coeffs;
            for (int k = 0; k < n; ++k)
                if (new_coeffs(k) != 0.0) out.add_antisymmetric(l, m, k, new_coeffs(k));
        }
    }
    return out;
}

inline double max_deviation(const StructureTensor<double>& a, const StructureTensor<double>& b) {
    double worst = 0.0;
    for (int c = 0; c < a.dim(); ++c)
        for (int x = 0; x < a.dim(); ++x)
            for (int y = 0; y < a.dim(); ++y) worst = std::max(worst, std::abs(a(c, x, y) - b(c, x, y)));
    return worst;
}

/// Isomorphism onto so(eta) with eta = diag(+1, -1, -1, -1, eps4, eps5).
struct Embedding {
    SixMetric six_metric{};
    Eigen::MatrixXd basis_map;   // 15 x 15, row n = J_n in the generator basis
    Eigen::Matrix2d congruence;  // S with S^T Q S = diag(sigma4, sigma5)
    std::array<int, 2> sigma{};
    double max_deviation = 0.0;

    std::pair<int, int> signature() const {
        int p = 0;
        for (int e : six_metric) p += e > 0 ? 1 : 0;
        return {p, 6 - p};
    }
    AlgebraClass algebra_class() const {
        auto [p, q] = signature();
        return AlgebraClass::from_signature(p, q);
    }
};

/// Builds J_ij = F_ij, (J_i4, J_i5) = (p_i, x_i) S, J_45 = -det(S) I, where S
/// diagonalizes Q by congruence to diag(sigma4, sigma5); then eps_k = -sigma_k.
/// Verifies the transformed constants against the canonical ones and throws
/// ConsistencyError on any mismatch.
template <Scalar S>
Embedding pseudo_orthogonal_embedding(const ParameterSet<S>& params, double tol = kDefaultTolerance) {
    const ParameterSet<double> p(to_double(params.kappa), to_double(params.lambda_sq), to_double(params.mu_sq));
    if (!classify(params, tol).semisimple())
        throw PreconditionError("pseudo_orthogonal_embedding requires semisimple parameters (det Q != 0)");

    Eigen::Matrix2d q;
    q << p.mu_sq, p.kappa, p.kappa, p.lambda_sq;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(q);
    const Eigen::Vector2d ev = solver.eigenvalues();
    Embedding emb;
    emb.congruence = solver.eigenvectors() * Eigen::Vector2d(1.0 / std::sqrt(std::abs(ev(0))), 1.0 / std::sqrt(std::abs(ev(1)))).asDiagonal();
    for (int k = 0; k < 2; ++k) emb.sigma[k] = ev(k) > 0 ? 1 : -1;
    emb.six_metric = {1, -1, -1, -1, -emb.sigma[0], -emb.sigma[1]};

    using G = GeneratorIndex;
    const Eigen::Matrix2d& s = emb.congruence;
    emb.basis_map = Eigen::MatrixXd::Zero(kNumGenerators, kNumGenerators);
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) emb.basis_map(pair_index(i, j, 6), G::F(i, j).index()) = 1.0;
        for (int k = 0; k < 2; ++k) {
            const int row = pair_index(i, 4 + k, 6);
            emb.basis_map(row, G::P(i).index()) = s(0, k);
            emb.basis_map(row, G::X(i).index()) = s(1, k);
        }
    }
    emb.basis_map(pair_index(4, 5, 6), G::Id().index()) = -s.determinant();

    const auto transformed = transform_constants(structure_constants(p), emb.basis_map);
    emb.max_deviation = max_deviation(transformed, pseudo_orthogonal_constants<double>(emb.six_metric));
    if (emb.max_deviation > tol)
        throw ConsistencyError("embedding does not reproduce canonical constants (deviation " +
                               std::to_string(emb.max_deviation) + ")");
    if (!(emb.algebra_class() == classify(p, tol)))
        throw ConsistencyError("embedding signature disagrees with classify()");
    return emb;
}

}  // namespace phasealg
