#pragma once

#include <Eigen/Dense>
#include <random>

#include "sl3lab/dd.hpp"
#include "sl3lab/errors.hpp"
#include "sl3lab/tolerances.hpp"

namespace sl3lab {

using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;
using Vec3 = Eigen::Vector3d;

/// Scale M to determinant one through the real cube root, so the sign of
/// the matrix survives. Throws SingularMatrix below tol.sing.
Mat3 sl_normalize(const Mat3& m, const Tolerances& tol = default_tol());

/// Same for 2x2, via the (positive) square root of det; throws if det <= 0
/// since SL(2,R) has no -1-determinant members to absorb the sign into.
Mat2 sl_normalize2(const Mat2& m, const Tolerances& tol = default_tol());

/// Numerical rank: singular values above tol_rank * sigma_max.
int rank_tol(const Eigen::MatrixXd& m, double tol_rank);

/// Spectral gap of the rank decision: smallest kept / largest dropped
/// singular value. Infinity when nothing is dropped.
double rank_gap(const Eigen::MatrixXd& m, double tol_rank);

/// min(||M-N||, ||M+N||) / ||M||, Frobenius. Absorbs the projective sign.
double proj_distance(const Eigen::MatrixXd& m, const Eigen::MatrixXd& n);

/// Random matrix with entries uniform in [-1,1], det-normalized. Redraws
/// while nearly singular or (optionally) above the condition cap.
Mat3 random_unimodular3(std::mt19937_64& rng, double cond_cap = 0.0);

DDMat to_dd(const Eigen::MatrixXd& m);

} // namespace sl3lab
