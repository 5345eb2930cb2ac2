#include "sl3lab/matrix_ops.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <limits>

namespace sl3lab {

const char* err_name(Err e) {
    switch (e) {
        case Err::SingularMatrix: return "SingularMatrix";
        case Err::ComplexPair: return "ComplexPair";
        case Err::NotDistinct: return "NotDistinct";
        case Err::DetMismatch: return "DetMismatch";
        case Err::NearZeroEigenvalue: return "NearZeroEigenvalue";
        case Err::BallTooLarge: return "BallTooLarge";
        case Err::ResidualTooLarge: return "ResidualTooLarge";
        case Err::NotBlockForm: return "NotBlockForm";
        case Err::ZeroLambda: return "ZeroLambda";
        case Err::NotCertified: return "NotCertified";
        case Err::NotReducible: return "NotReducible";
        case Err::NotRadialPair: return "NotRadialPair";
        case Err::NotTransverse: return "NotTransverse";
        case Err::NotProximal: return "NotProximal";
        case Err::NoOverlap: return "NoOverlap";
        case Err::LengthMismatch: return "LengthMismatch";
        case Err::IndexingUnsupported: return "IndexingUnsupported";
        case Err::ExactnessViolation: return "ExactnessViolation";
        case Err::InvalidArgument: return "InvalidArgument";
        case Err::Io: return "Io";
    }
    return "Unknown";
}

Mat3 sl_normalize(const Mat3& m, const Tolerances& tol) {
    double d = m.determinant();
    if (std::abs(d) < tol.sing)
        throw Error(Err::SingularMatrix, "determinant " + std::to_string(d));
    return m / std::cbrt(d);
}

Mat2 sl_normalize2(const Mat2& m, const Tolerances& tol) {
    double d = m.determinant();
    if (d < tol.sing)
        throw Error(Err::SingularMatrix, "2x2 determinant " + std::to_string(d) +
                                             " not positive");
    return m / std::sqrt(d);
}

int rank_tol(const Eigen::MatrixXd& m, double tol_rank) {
    if (m.size() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    double cut = tol_rank * sv(0);
    int r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cut) ++r;
    return r;
}

double rank_gap(const Eigen::MatrixXd& m, double tol_rank) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return std::numeric_limits<double>::infinity();
    double cut = tol_rank * sv(0);
    double kept = 0.0, dropped = 0.0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > cut)
            kept = sv(i); // descending order: last kept is the smallest
        else {
            dropped = sv(i); // first dropped is the largest
            break;
        }
    }
    if (dropped == 0.0) return std::numeric_limits<double>::infinity();
    return kept / dropped;
}

double proj_distance(const Eigen::MatrixXd& m, const Eigen::MatrixXd& n) {
    double scale = m.norm();
    if (scale == 0.0) return n.norm();
    return std::min((m - n).norm(), (m + n).norm()) / scale;
}

Mat3 random_unimodular3(std::mt19937_64& rng, double cond_cap) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (;;) {
        Mat3 m;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m(i, j) = u(rng);
        if (std::abs(m.determinant()) < 1e-3) continue;
        if (cond_cap > 0.0) {
            Eigen::JacobiSVD<Mat3> svd(m);
            const auto& sv = svd.singularValues();
            if (sv(2) <= 0.0 || sv(0) / sv(2) >= cond_cap) continue;
        }
        return sl_normalize(m);
    }
}

DDMat to_dd(const Eigen::MatrixXd& m) {
    DDMat r(static_cast<int>(m.rows()));
    for (int i = 0; i < r.n; ++i)
        for (int j = 0; j < r.n; ++j) r.at(i, j) = DD{m(i, j)};
    return r;
}

namespace {

DD dd_det2(const DDMat& m, int r0, int r1, int c0, int c1) {
    return dd_sub(dd_mul(m.at(r0, c0), m.at(r1, c1)), dd_mul(m.at(r0, c1), m.at(r1, c0)));
}

} // namespace

DDMat dd_inverse(const DDMat& m) {
    DDMat inv(m.n);
    if (m.n == 2) {
        DD det = dd_det2(m, 0, 1, 0, 1);
        inv.at(0, 0) = dd_div(m.at(1, 1), det);
        inv.at(0, 1) = dd_div(DD{-m.at(0, 1).hi, -m.at(0, 1).lo}, det);
        inv.at(1, 0) = dd_div(DD{-m.at(1, 0).hi, -m.at(1, 0).lo}, det);
        inv.at(1, 1) = dd_div(m.at(0, 0), det);
        return inv;
    }
    if (m.n == 3) {
        // adjugate / det
        DD c00 = dd_det2(m, 1, 2, 1, 2);
        DD c01 = dd_det2(m, 1, 2, 0, 2);
        DD c02 = dd_det2(m, 1, 2, 0, 1);
        DD det = dd_add(dd_sub(dd_mul(m.at(0, 0), c00), dd_mul(m.at(0, 1), c01)),
                        dd_mul(m.at(0, 2), c02));
        auto neg = [](DD v) { return DD{-v.hi, -v.lo}; };
        inv.at(0, 0) = dd_div(c00, det);
        inv.at(1, 0) = dd_div(neg(c01), det);
        inv.at(2, 0) = dd_div(c02, det);
        inv.at(0, 1) = dd_div(neg(dd_det2(m, 0, 2, 1, 2)), det);
        inv.at(1, 1) = dd_div(dd_det2(m, 0, 2, 0, 2), det);
        inv.at(2, 1) = dd_div(neg(dd_det2(m, 0, 2, 0, 1)), det);
        inv.at(0, 2) = dd_div(dd_det2(m, 0, 1, 1, 2), det);
        inv.at(1, 2) = dd_div(neg(dd_det2(m, 0, 1, 0, 2)), det);
        inv.at(2, 2) = dd_div(dd_det2(m, 0, 1, 0, 1), det);
        return inv;
    }
    throw Error(Err::InvalidArgument, "dd_inverse supports n = 2, 3 only");
}

double dd_dist_to_identity(const DDMat& m) {
    DD acc{0.0};
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) {
            DD d = dd_sub(m.at(i, j), DD{i == j ? 1.0 : 0.0});
            acc = dd_add(acc, dd_mul(d, d));
        }
    return std::sqrt(acc.value());
}

} // namespace sl3lab
