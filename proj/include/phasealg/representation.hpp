#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <optional>
#include <string>

#include "phasealg/algebra.hpp"

namespace phasealg {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

/// Largest absolute entry.
inline double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

inline CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

inline bool is_hermitian(const CMatrix& m, double tol) { return max_abs(m - m.adjoint()) <= tol; }

/// Complex matrices rho(T_a) for (a subset of) the 15 generators. Generators
/// without a matrix are outside the represented subalgebra.
class Representation {
public:
    explicit Representation(int dim, std::string label = {}) : dim_(dim), label_(std::move(label)) {
        if (dim <= 0) throw InvalidInput("representation dimension must be positive");
    }

    int dim() const { return dim_; }
    const std::string& label() const { return label_; }

    bool has(GeneratorIndex g) const { return mats_[g.index()].has_value(); }
    bool has(int a) const { return mats_[a].has_value(); }
    bool complete() const {
        for (const auto& m : mats_)
            if (!m) return false;
        return true;
    }

    const CMatrix& operator[](GeneratorIndex g) const { return at(g.index()); }
    const CMatrix& at(int a) const {
        if (!mats_[a]) throw InvalidInput("generator " + GeneratorIndex::from_index(a).name() + " is not represented");
        return *mats_[a];
    }

    void set(GeneratorIndex g, CMatrix m) {
        if (m.rows() != dim_ || m.cols() != dim_) throw InvalidInput("matrix size does not match representation");
        mats_[g.index()] = std::move(m);
    }

    /// max over represented (a, b) of ||[rho_a, rho_b] - i sum_c f^c_ab rho_c||_inf.
    /// Throws InvalidInput when a bracket leaves the represented subalgebra.
    template <Scalar S>
    double bracket_residual(const StructureTensor<S>& t) const {
        double worst = 0.0;
        for (int a = 0; a < kNumGenerators; ++a) {
            if (!mats_[a]) continue;
            for (int b = a + 1; b < kNumGenerators; ++b) {
                if (!mats_[b]) continue;
                CMatrix expected = CMatrix::Zero(dim_, dim_);
                for (const auto& term : t.terms(a, b)) {
                    if (!mats_[term.index])
                        throw InvalidInput("bracket [" + GeneratorIndex::from_index(a).name() + ", " +
                                           GeneratorIndex::from_index(b).name() + "] leaves the represented generators");
                    expected += Complex(0.0, to_double(term.value)) * *mats_[term.index];
                }
                worst = std::max(worst, max_abs(commutator(*mats_[a], *mats_[b]) - expected));
            }
        }
        return worst;
    }

private:
    int dim_;
    std::string label_;
    std::array<std::optional<CMatrix>, kNumGenerators> mats_;
};

}  // namespace phasealg
