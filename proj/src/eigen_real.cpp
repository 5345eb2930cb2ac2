#include "sl3lab/eigen_real.hpp"

#include <algorithm>
#include <cmath>

namespace sl3lab {

namespace {

// Kernel direction of the (numerically rank-2) matrix m - lambda*I via the
// largest cross product of two rows.
Vec3 null_direction(const Mat3& a) {
    Vec3 r0 = a.row(0), r1 = a.row(1), r2 = a.row(2);
    Vec3 c01 = r0.cross(r1), c02 = r0.cross(r2), c12 = r1.cross(r2);
    Vec3 best = c01;
    if (c02.norm() > best.norm()) best = c02;
    if (c12.norm() > best.norm()) best = c12;
    return best;
}

struct Pair {
    double value;
    Vec3 vec;
};

Pair refine_pair(const Mat3& m, double lambda, double scale) {
    Mat3 shifted = m - lambda * Mat3::Identity();
    Vec3 v = null_direction(shifted);
    if (v.norm() < 1e-300) v = Vec3::UnitX();
    v.normalize();
    // one inverse-iteration step; tiny diagonal shift keeps the LU finite
    Mat3 it = shifted + (scale * 1e-13) * Mat3::Identity();
    Vec3 w = it.fullPivLu().solve(v);
    if (w.allFinite() && w.norm() > 0.0) {
        w.normalize();
        if ((m * w - lambda * w).norm() < (m * v - lambda * v).norm()) v = w;
    }
    // residual-minimizing eigenvalue for the refined vector
    double num = v.dot(m * v);
    double den = v.squaredNorm();
    double refined = (den > 0.0) ? num / den : lambda;
    if (std::abs(refined - lambda) < 1e-6 * scale) lambda = refined;
    return {lambda, v};
}

} // namespace

EigenTriple eigen_real_3(const Mat3& m, double tol_eig) {
    if (!m.allFinite())
        throw Error(Err::InvalidArgument, "matrix has non-finite entries");

    const double c1 = m.trace();
    const double c2 = 0.5 * (c1 * c1 - (m * m).trace());
    const double c3 = m.determinant();

    // depressed cubic x^3 + p x + q, lambda = x + c1/3
    const double shift = c1 / 3.0;
    const double p = c2 - c1 * c1 / 3.0;
    const double q = -2.0 * c1 * c1 * c1 / 27.0 + c1 * c2 / 3.0 - c3;

    const double disc = -4.0 * p * p * p - 27.0 * q * q;
    const double disc_scale = std::max({std::abs(4.0 * p * p * p), 27.0 * q * q, 1e-300});
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());

    if (disc < -1e-12 * disc_scale)
        throw Error(Err::ComplexPair, "characteristic discriminant " + std::to_string(disc));

    std::array<double, 3> roots;
    if (p >= 0.0) {
        // p ~ 0 with disc >= 0 forces a (near-)triple root
        roots = {shift, shift, shift};
    } else {
        double r = 2.0 * std::sqrt(-p / 3.0);
        double arg = 3.0 * q / (p * r); // = (3q)/(2p) * sqrt(-3/p)
        arg = std::clamp(arg, -1.0, 1.0);
        double phi = std::acos(arg);
        for (int k = 0; k < 3; ++k)
            roots[k] = shift + r * std::cos((phi - 2.0 * M_PI * k) / 3.0);
    }
    std::sort(roots.begin(), roots.end(), std::greater<double>());

    double root_scale =
        std::max({std::abs(roots[0]), std::abs(roots[1]), std::abs(roots[2]), 1e-300});
    if (roots[0] - roots[1] <= tol_eig * root_scale ||
        roots[1] - roots[2] <= tol_eig * root_scale)
        throw Error(Err::NotDistinct, "eigenvalue gap below tolerance");

    EigenTriple out;
    for (int k = 0; k < 3; ++k) {
        Pair pr = refine_pair(m, roots[k], scale);
        out.values[k] = pr.value;
        out.vectors[k] = pr.vec;
    }
    // refinement must not reorder
    if (!(out.values[0] > out.values[1] && out.values[1] > out.values[2]))
        throw Error(Err::NotDistinct, "eigenvalues collided during refinement");
    return out;
}

SignClass sign_class(const EigenTriple& e, const Tolerances& tol) {
    double prod = e.values[0] * e.values[1] * e.values[2];
    if (std::abs(prod - 1.0) > tol.det * 1e3) // det drifts faster than single entries
        throw Error(Err::DetMismatch, "eigenvalue product " + std::to_string(prod));
    double top = std::max({std::abs(e.values[0]), std::abs(e.values[1]), std::abs(e.values[2])});
    double low = std::min({std::abs(e.values[0]), std::abs(e.values[1]), std::abs(e.values[2])});
    if (low < tol.eig * top)
        throw Error(Err::NearZeroEigenvalue, "smallest |eigenvalue| " + std::to_string(low));
    int pos = 0;
    for (double v : e.values)
        if (v > 0.0) ++pos;
    if (pos == 3) return SignClass::A0;
    if (pos == 1) return SignClass::A1;
    // unreachable for value product +1
    throw Error(Err::DetMismatch, "sign pattern inconsistent with det +1");
}

EigenPair2 eigen_real_2(const Mat2& m, double tol_eig) {
    double tr = m.trace();
    double det = m.determinant();
    double disc = tr * tr - 4.0 * det;
    double scale = std::max(1.0, std::abs(tr));
    if (disc <= tol_eig * scale * scale)
        throw Error(Err::NotDistinct, "2x2 discriminant " + std::to_string(disc));
    double s = std::sqrt(disc);
    EigenPair2 out;
    out.values = {(tr + s) / 2.0, (tr - s) / 2.0};
    for (int k = 0; k < 2; ++k) {
        double lam = out.values[k];
        Eigen::Vector2d cand1(m(0, 1), lam - m(0, 0));
        Eigen::Vector2d cand2(lam - m(1, 1), m(1, 0));
        Eigen::Vector2d v = cand1.norm() >= cand2.norm() ? cand1 : cand2;
        if (v.norm() == 0.0) v = Eigen::Vector2d::UnitX(); // diagonal matrix
        out.vectors[k] = v.normalized();
    }
    return out;
}

} // namespace sl3lab
