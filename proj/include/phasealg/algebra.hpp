#pragma once

// The 15-generator algebra of Lorentz generators F_ij, momenta p_i, coordinates
// x_i and the generator I, deformed by (kappa, lambda^2, mu^2).
//
// Brackets are stored with the factor i pulled out:
//     [T_a, T_b] = i * sum_c f^c_{ab} T_c,
// so every structure constant is a real number (or an exact rational).

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "phasealg/errors.hpp"
#include "phasealg/scalar.hpp"

namespace phasealg {

inline constexpr int kNumGenerators = 15;

/// Minkowski metric diag(+1, -1, -1, -1), index 0 timelike.
struct MinkowskiMetric {
    static constexpr int g(int i, int j) { return i != j ? 0 : (i == 0 ? 1 : -1); }
    static constexpr int diag(int i) { return i == 0 ? 1 : -1; }
};

/// Index of the unordered pair (i < j) among the n(n-1)/2 pairs in lexicographic order.
constexpr int pair_index(int i, int j, int n) { return i * (2 * n - i - 1) / 2 + (j - i - 1); }

enum class GeneratorKind { F, P, X, Id };

/// Canonical order: F(0,1) F(0,2) F(0,3) F(1,2) F(1,3) F(2,3), P(0..3), X(0..3), Id.
class GeneratorIndex {
public:
    static constexpr GeneratorIndex F(int i, int j) {
        if (!(0 <= i && i < j && j <= 3)) throw InvalidInput("F(i,j) requires 0 <= i < j <= 3");
        return GeneratorIndex(pair_index(i, j, 4));
    }
    static constexpr GeneratorIndex P(int i) { return GeneratorIndex(6 + check_vector(i)); }
    static constexpr GeneratorIndex X(int i) { return GeneratorIndex(10 + check_vector(i)); }
    static constexpr GeneratorIndex Id() { return GeneratorIndex(14); }
    static constexpr GeneratorIndex from_index(int index) {
        if (index < 0 || index >= kNumGenerators) throw InvalidInput("generator index out of range");
        return GeneratorIndex(index);
    }

    constexpr int index() const { return index_; }
    constexpr GeneratorKind kind() const {
        if (index_ < 6) return GeneratorKind::F;
        if (index_ < 10) return GeneratorKind::P;
        if (index_ < 14) return GeneratorKind::X;
        return GeneratorKind::Id;
    }
    /// Spacetime index i of p_i / x_i, or the first index of F_ij.
    constexpr int first() const {
        switch (kind()) {
            case GeneratorKind::F: return kFPairs[index_][0];
            case GeneratorKind::P: return index_ - 6;
            case GeneratorKind::X: return index_ - 10;
            default: return -1;
        }
    }
    constexpr int second() const { return kind() == GeneratorKind::F ? kFPairs[index_][1] : -1; }

    std::string name() const {
        switch (kind()) {
            case GeneratorKind::F: return "F" + std::to_string(first()) + std::to_string(second());
            case GeneratorKind::P: return "P" + std::to_string(first());
            case GeneratorKind::X: return "X" + std::to_string(first());
            default: return "I";
        }
    }

    /// Accepts the names produced by name(): "F12", "P1", "X0", "I".
    static GeneratorIndex parse(std::string_view s) {
        auto digit = [&](std::size_t k) {
            if (k >= s.size() || s[k] < '0' || s[k] > '3') throw InvalidInput("bad generator name '" + std::string(s) + "'");
            return s[k] - '0';
        };
        if (s == "I" || s == "Id") return Id();
        if (s.size() == 3 && s[0] == 'F') return F(digit(1), digit(2));
        if (s.size() == 2 && s[0] == 'P') return P(digit(1));
        if (s.size() == 2 && s[0] == 'X') return X(digit(1));
        throw InvalidInput("bad generator name '" + std::string(s) + "'");
    }

    friend constexpr bool operator==(GeneratorIndex, GeneratorIndex) = default;

private:
    constexpr explicit GeneratorIndex(int index) : index_(index) {}
    static constexpr int check_vector(int i) {
        if (i < 0 || i > 3) throw InvalidInput("vector index must be in 0..3");
        return i;
    }
    static constexpr int kFPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    int index_;
};

/// F_ij for arbitrary (i, j): F_ji = -F_ij and F_ii = 0 (sign 0).
struct SignedGenerator {
    int index;
    int sign;
};

constexpr SignedGenerator lorentz(int i, int j) {
    if (i == j) return {0, 0};
    return i < j ? SignedGenerator{pair_index(i, j, 4), 1} : SignedGenerator{pair_index(j, i, 4), -1};
}

/// Deformation constants in natural units (c = hbar = 1).
template <Scalar S>
struct ParameterSet {
    S kappa{0};
    S lambda_sq{0};
    S mu_sq{0};

    ParameterSet() = default;
    ParameterSet(S k, S l2, S m2) : kappa(std::move(k)), lambda_sq(std::move(l2)), mu_sq(std::move(m2)) {
        if (!ScalarTraits<S>::is_finite(kappa) || !ScalarTraits<S>::is_finite(lambda_sq) ||
            !ScalarTraits<S>::is_finite(mu_sq))
            throw InvalidInput("parameters must be finite");
    }
};

/// Dimensional constants of the algebra written with f (action), M, L, H.
/// Squares are stored; M_sq and L_sq may be negative.
template <Scalar S>
struct UnitsParams {
    S f{1};
    S M_sq{1};
    S L_sq{1};
    S H_sq{1};
};

namespace detail {

inline Rational exact_sqrt(const Rational& x) {
    mpz_class num = x.get_num(), den = x.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        throw UnsupportedDomain("H_sq = " + x.get_str() + " has no rational square root; use float mode");
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(rn, rd);
}

template <Scalar S>
S positive_sqrt(const S& x) {
    if constexpr (ScalarTraits<S>::exact)
        return exact_sqrt(x);
    else
        return std::sqrt(x);
}

}  // namespace detail

/// kappa = 1/H (H = +sqrt(H_sq)), lambda^2 = 1/M^2, mu^2 = 1/L^2. f only fixes the
/// overall normalization of the bracket and drops out of the natural-units constants.
template <Scalar S>
ParameterSet<S> convert_units(const UnitsParams<S>& u) {
    using T = ScalarTraits<S>;
    for (const S* v : {&u.f, &u.M_sq, &u.L_sq, &u.H_sq})
        if (!T::is_finite(*v)) throw InvalidInput("units parameters must be finite");
    if (T::sign(u.f, 0.0) == 0 || T::sign(u.M_sq, 0.0) == 0 || T::sign(u.L_sq, 0.0) == 0 ||
        T::sign(u.H_sq, 0.0) == 0)
        throw InvalidInput("f, M_sq, L_sq and H_sq must be nonzero");
    if (T::sign(u.H_sq, 0.0) < 0) throw UnsupportedDomain("H_sq < 0 (imaginary H) is not supported");
    S one{1};
    S kappa = one / detail::positive_sqrt(u.H_sq);
    S lambda_sq = one / u.M_sq;
    S mu_sq = one / u.L_sq;
    return ParameterSet<S>(kappa, lambda_sq, mu_sq);
}

/// Real structure constants f^c_{ab} over an n-dimensional basis, with a sparse
/// index of the nonzero entries of every bracket [T_a, T_b].
template <Scalar S>
class StructureTensor {
public:
    struct Term {
        int index;
        S value;
    };

    explicit StructureTensor(int dim = kNumGenerators)
        : dim_(dim), data_(static_cast<std::size_t>(dim) * dim * dim, S(0)), terms_(static_cast<std::size_t>(dim) * dim) {}

    int dim() const { return dim_; }

    const S& operator()(int c, int a, int b) const { return data_[offset(c, a, b)]; }

    /// Nonzero coefficients of [T_a, T_b] / i.
    std::span<const Term> terms(int a, int b) const { return terms_[pair(a, b)]; }

    void set(int c, int a, int b, S value) {
        data_[offset(c, a, b)] = std::move(value);
        reindex(a, b);
    }

    /// Adds v to f^c_{ab} and subtracts it from f^c_{ba}.
    void add_antisymmetric(int a, int b, int c, const S& v) {
        if (a == b || ScalarTraits<S>::is_zero(v, 0.0)) return;
        data_[offset(c, a, b)] += v;
        data_[offset(c, b, a)] -= v;
        reindex(a, b);
        reindex(b, a);
    }

    StructureTensor with_entry(int c, int a, int b, S value) const {
        StructureTensor copy = *this;
        copy.set(c, a, b, std::move(value));
        return copy;
    }

    bool is_antisymmetric() const {
        for (int c = 0; c < dim_; ++c)
            for (int a = 0; a < dim_; ++a)
                for (int b = a; b < dim_; ++b)
                    if ((*this)(c, a, b) != -(*this)(c, b, a)) return false;
        return true;
    }

    friend bool operator==(const StructureTensor& x, const StructureTensor& y) {
        return x.dim_ == y.dim_ && x.data_ == y.data_;
    }

private:
    std::size_t offset(int c, int a, int b) const {
        return (static_cast<std::size_t>(c) * dim_ + a) * dim_ + b;
    }
    std::size_t pair(int a, int b) const { return static_cast<std::size_t>(a) * dim_ + b; }
    void reindex(int a, int b) {
        auto& list = terms_[pair(a, b)];
        list.clear();
        for (int c = 0; c < dim_; ++c)
            if (!ScalarTraits<S>::is_zero((*this)(c, a, b), 0.0)) list.push_back({c, (*this)(c, a, b)});
    }

    int dim_;
    std::vector<S> data_;
    std::vector<std::vector<Term>> terms_;
};

namespace detail {

// Bracket coefficients shared by the natural-units and (f, M, L, H) forms.
template <Scalar S>
struct BracketCoefficients {
    S lorentz;     // [F,F], [F,p], [F,x]
    S pp;          // [p_i,p_j] -> F_ij
    S xx;          // [x_i,x_j] -> F_ij
    S px_identity; // [p_i,x_j] -> g_ij I
    S px_lorentz;  // [p_i,x_j] -> F_ij
    S pI_x, pI_p;  // [p_i,I] -> x_i, p_i
    S xI_x, xI_p;  // [x_i,I] -> x_i, p_i
};

template <Scalar S>
StructureTensor<S> build_tensor(const BracketCoefficients<S>& k) {
    using G = GeneratorIndex;
    using M = MinkowskiMetric;
    StructureTensor<S> t;
    const int id = G::Id().index();

    auto add_lorentz = [&](int a, int b, SignedGenerator target, int g, const S& coeff) {
        if (target.sign == 0 || g == 0) return;
        t.add_antisymmetric(a, b, target.index, coeff * S(target.sign * g));
    };

    // [F_ij, F_kl] = g_jk F_il - g_ik F_jl + g_il F_jk - g_jl F_ik
    for (int p = 0; p < 6; ++p) {
        for (int q = p + 1; q < 6; ++q) {
            G a = G::from_index(p), b = G::from_index(q);
            int i = a.first(), j = a.second(), kk = b.first(), l = b.second();
            add_lorentz(p, q, lorentz(i, l), M::g(j, kk), k.lorentz);
            add_lorentz(p, q, lorentz(j, l), -M::g(i, kk), k.lorentz);
            add_lorentz(p, q, lorentz(j, kk), M::g(i, l), k.lorentz);
            add_lorentz(p, q, lorentz(i, kk), -M::g(j, l), k.lorentz);
        }
    }
    // [F_ij, v_k] = g_jk v_i - g_ik v_j for v = p, x
    for (int p = 0; p < 6; ++p) {
        G a = G::from_index(p);
        int i = a.first(), j = a.second();
        for (int kk = 0; kk < 4; ++kk) {
            for (auto vec : {&G::P, &G::X}) {
                int b = vec(kk).index();
                if (M::g(j, kk) != 0) t.add_antisymmetric(p, b, vec(i).index(), k.lorentz * S(M::g(j, kk)));
                if (M::g(i, kk) != 0) t.add_antisymmetric(p, b, vec(j).index(), k.lorentz * S(-M::g(i, kk)));
            }
        }
    }
    // [p_i, p_j], [x_i, x_j]
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            t.add_antisymmetric(G::P(i).index(), G::P(j).index(), G::F(i, j).index(), k.pp);
            t.add_antisymmetric(G::X(i).index(), G::X(j).index(), G::F(i, j).index(), k.xx);
        }
    }
    // [p_i, x_j] = g_ij I + (px_lorentz) F_ij
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            int a = G::P(i).index(), b = G::X(j).index();
            if (M::g(i, j) != 0) t.add_antisymmetric(a, b, id, k.px_identity * S(M::g(i, j)));
            SignedGenerator f = lorentz(i, j);
            if (f.sign != 0) t.add_antisymmetric(a, b, f.index, k.px_lorentz * S(f.sign));
        }
    }
    // [p_i, I], [x_i, I]
    for (int i = 0; i < 4; ++i) {
        int p = G::P(i).index(), x = G::X(i).index();
        t.add_antisymmetric(p, id, x, k.pI_x);
        t.add_antisymmetric(p, id, p, k.pI_p);
        t.add_antisymmetric(x, id, x, k.xI_x);
        t.add_antisymmetric(x, id, p, k.xI_p);
    }
    return t;
}

}  // namespace detail

/// Structure constants of the natural-units algebra:
///   [p_i,p_j] = i mu^2 F_ij,  [x_i,x_j] = i lambda^2 F_ij,
///   [p_i,x_j] = i(g_ij I + kappa F_ij),
///   [p_i,I] = i(mu^2 x_i - kappa p_i),  [x_i,I] = i(kappa x_i - lambda^2 p_i),
/// plus the Lorentz relations of F with everything and [F, I] = 0.
template <Scalar S>
StructureTensor<S> structure_constants(const ParameterSet<S>& params) {
    const S& k = params.kappa;
    const S& l2 = params.lambda_sq;
    const S& m2 = params.mu_sq;
    if (!ScalarTraits<S>::is_finite(k) || !ScalarTraits<S>::is_finite(l2) || !ScalarTraits<S>::is_finite(m2))
        throw InvalidInput("parameters must be finite");
    detail::BracketCoefficients<S> c{S(1), m2, l2, S(1), k, m2, S(-k), k, S(-l2)};
    return detail::build_tensor(c);
}

/// The same algebra written with f, M, L, H: every bracket carries a factor f and
/// the deformations read f/L^2, f/M^2, f/H.
template <Scalar S>
StructureTensor<S> structure_constants_units(const UnitsParams<S>& u) {
    convert_units(u);  // validates the domain
    const S& f = u.f;
    S h = detail::positive_sqrt(u.H_sq);
    detail::BracketCoefficients<S> c{f,         S(f / u.L_sq), S(f / u.M_sq), f,          S(f / h),
                                     S(f / u.L_sq), S(-f / h),     S(f / h),     S(-f / u.M_sq)};
    return detail::build_tensor(c);
}

/// Coefficient vector over the 15 generators.
template <Scalar S>
struct Element {
    std::array<S, kNumGenerators> coeffs{};

    Element() { coeffs.fill(S(0)); }

    static Element basis(GeneratorIndex g) {
        Element e;
        e.coeffs[g.index()] = S(1);
        return e;
    }

    S& operator[](int i) { return coeffs[i]; }
    const S& operator[](int i) const { return coeffs[i]; }

    friend Element operator+(Element a, const Element& b) {
        for (int i = 0; i < kNumGenerators; ++i) a.coeffs[i] += b.coeffs[i];
        return a;
    }
    friend Element operator-(Element a, const Element& b) {
        for (int i = 0; i < kNumGenerators; ++i) a.coeffs[i] -= b.coeffs[i];
        return a;
    }
    friend Element operator*(const S& s, Element a) {
        for (auto& c : a.coeffs) c *= s;
        return a;
    }
    friend bool operator==(const Element& a, const Element& b) { return a.coeffs == b.coeffs; }
};

/// Coefficients of [A, B] / i.
template <Scalar S>
Element<S> bracket(const Element<S>& a, const Element<S>& b, const StructureTensor<S>& t) {
    if (t.dim() != kNumGenerators) throw InvalidInput("bracket requires a 15-generator tensor");
    Element<S> out;
    for (int i = 0; i < kNumGenerators; ++i) {
        if (ScalarTraits<S>::is_zero(a[i], 0.0)) continue;
        for (int j = 0; j < kNumGenerators; ++j) {
            if (ScalarTraits<S>::is_zero(b[j], 0.0)) continue;
            S w = a[i] * b[j];
            for (const auto& term : t.terms(i, j)) out[term.index] += w * term.value;
        }
    }
    return out;
}

/// max over (a,b,c,d) of |sum_e f^e_ab f^d_ec + f^e_bc f^d_ea + f^e_ca f^d_eb|.
template <Scalar S>
S jacobi_residual(const StructureTensor<S>& t) {
    const int n = t.dim();
    // The cyclic sum is totally antisymmetric in (a,b,c) when f is antisymmetric.
    const bool antisymmetric = t.is_antisymmetric();
    std::vector<S> acc(n);
    S worst(0);
    auto accumulate = [&](int a, int b, int c) {
        for (const auto& first : t.terms(a, b))
            for (const auto& second : t.terms(first.index, c)) acc[second.index] += first.value * second.value;
    };
    for (int a = 0; a < n; ++a) {
        for (int b = antisymmetric ? a + 1 : 0; b < n; ++b) {
            for (int c = antisymmetric ? b + 1 : 0; c < n; ++c) {
                std::fill(acc.begin(), acc.end(), S(0));
                accumulate(a, b, c);
                accumulate(b, c, a);
                accumulate(c, a, b);
                for (const S& v : acc) {
                    S m = ScalarTraits<S>::abs(v);
                    if (m > worst) worst = m;
                }
            }
        }
    }
    return worst;
}

}  // namespace phasealg
