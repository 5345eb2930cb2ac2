#pragma once

#include <array>

#include "sl3lab/matrix_ops.hpp"

namespace sl3lab {

/// Three distinct real eigenvalues sorted descending by value, with unit
/// right eigenvectors. values[k] pairs with vectors[k].
struct EigenTriple {
    std::array<double, 3> values{};
    std::array<Vec3, 3> vectors{};
};

enum class SignClass { A0, A1 };

/// Eigen data of a real 3x3 matrix from its characteristic polynomial:
/// trigonometric roots in the three-real-root regime, one inverse-iteration
/// refinement per pair. Throws ComplexPair when the cubic has a conjugate
/// pair, NotDistinct when two roots are within tol_eig * spectral scale.
EigenTriple eigen_real_3(const Mat3& m, double tol_eig);
inline EigenTriple eigen_real_3(const Mat3& m, const Tolerances& tol = default_tol()) {
    return eigen_real_3(m, tol.eig);
}

/// A0 iff all three eigenvalues are positive, A1 iff exactly one is.
/// Requires a unimodular source: value product ~ +1 (DetMismatch), and
/// refuses eigenvalues within tolerance of zero (NearZeroEigenvalue).
SignClass sign_class(const EigenTriple& e, const Tolerances& tol = default_tol());

/// Real distinct eigen pair of a 2x2 matrix, larger eigenvalue first.
/// Throws NotDistinct when the discriminant is not safely positive.
struct EigenPair2 {
    std::array<double, 2> values{};
    std::array<Eigen::Vector2d, 2> vectors{};
};
EigenPair2 eigen_real_2(const Mat2& m, double tol_eig);

} // namespace sl3lab
