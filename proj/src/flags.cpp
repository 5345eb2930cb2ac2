#include "sl3lab/flags.hpp"

#include <algorithm>
#include <cmath>

namespace sl3lab {

Vec3 canonicalize(const Vec3& v) {
    double n2 = v.squaredNorm();
    if (n2 == 0.0 || !v.allFinite())
        throw Error(Err::InvalidArgument, "degenerate homogeneous vector");
    // skip the division when already unit, so that exact symmetries
    // (coordinate swaps, sign flips) stay exact through canonicalization
    Vec3 u = (std::abs(n2 - 1.0) <= 2e-15) ? v : Vec3(v / std::sqrt(n2));
    for (int i = 0; i < 3; ++i) {
        if (std::abs(u(i)) > 1e-12) {
            if (u(i) < 0.0) u = -u;
            break;
        }
    }
    return u;
}

Flag make_flag(const Vec3& point, const Vec3& line, const Tolerances& tol) {
    Flag f{make_point(point), make_line(line)};
    if (std::abs(f.line.v.dot(f.point.v)) > tol.inc)
        throw Error(Err::InvalidArgument,
                    "flag incidence " + std::to_string(f.line.v.dot(f.point.v)));
    return f;
}

Flag apply(const Mat3& m, const Flag& f) {
    Vec3 p = m * f.point.v;
    Vec3 l = m.inverse().transpose() * f.line.v;
    return {make_point(p), make_line(l)};
}

namespace {

// principal angle between spans of unit vectors; the cross-product form is
// exact near zero, where the comparisons happen
double span_angle(const Vec3& a, const Vec3& b) {
    double s = std::clamp(a.cross(b).norm(), 0.0, 1.0);
    double c = a.dot(b);
    return (std::abs(c) >= s) ? std::asin(s) : std::acos(std::abs(c));
}

} // namespace

double point_angle(const ProjPoint& a, const ProjPoint& b) { return span_angle(a.v, b.v); }
double line_angle(const ProjLine& a, const ProjLine& b) { return span_angle(a.v, b.v); }
double flag_distance(const Flag& a, const Flag& b) {
    return std::max(point_angle(a.point, b.point), line_angle(a.line, b.line));
}

bool transverse(const Flag& f1, const Flag& f2, const Tolerances& tol) {
    return std::abs(f2.line.v.dot(f1.point.v)) > tol.trans &&
           std::abs(f1.line.v.dot(f2.point.v)) > tol.trans;
}

const char* triple_tag_name(TripleTag t) {
    switch (t) {
        case TripleTag::Generic: return "Generic";
        case TripleTag::PointCollinear: return "PointCollinear";
        case TripleTag::LineConcurrent: return "LineConcurrent";
        case TripleTag::DoublyDegenerate: return "DoublyDegenerate";
    }
    return "?";
}

std::array<Flag, 3> normal_form_triple(TripleTag tag, double x) {
    const Vec3 e1 = Vec3::UnitX(), e2 = Vec3::UnitY(), e3 = Vec3::UnitZ();
    Flag f1 = make_flag(e1, e3); // line e3^perp carries covector e3
    Flag f2 = make_flag(e3, e1);
    switch (tag) {
        case TripleTag::Generic:
            return {f1, f2, make_flag(e1 - e2 + e3, Vec3(1.0, 1.0 + x, x))};
        case TripleTag::PointCollinear:
            return {f1, f2, make_flag(e1 + e3, Vec3(1.0, 1.0, -1.0))};
        case TripleTag::LineConcurrent:
            return {f1, f2, make_flag(e1 + e2 + e3, Vec3(1.0, 0.0, -1.0))};
        case TripleTag::DoublyDegenerate:
            return {f1, f2, make_flag(e1 + e3, Vec3(1.0, 0.0, -1.0))};
    }
    throw Error(Err::InvalidArgument, "bad triple tag");
}

TripleClass classify_triple(const Flag& f1, const Flag& f2, const Flag& f3,
                            const Tolerances& tol) {
    if (!transverse(f1, f2, tol) || !transverse(f1, f3, tol) || !transverse(f2, f3, tol))
        throw Error(Err::NotTransverse, "triple is not pairwise transverse");

    TripleClass out;
    // degeneracy data: third point on the line through the first two points,
    // third line through the meet of the first two lines
    Vec3 span_line = f1.point.v.cross(f2.point.v).normalized();
    Vec3 meet_point = f1.line.v.cross(f2.line.v).normalized();
    out.c_pt = std::abs(span_line.dot(f3.point.v));
    out.c_ln = std::abs(f3.line.v.dot(meet_point));

    const bool collinear = out.c_pt <= tol.inc;
    const bool concurrent = out.c_ln <= tol.inc;
    auto in_band = [&](double v) { return v > tol.inc && v <= tol.inc_warn; };
    out.condition_warning = in_band(out.c_pt) || in_band(out.c_ln);

    if (collinear && concurrent)
        out.tag = TripleTag::DoublyDegenerate;
    else if (collinear)
        out.tag = TripleTag::PointCollinear;
    else if (concurrent)
        out.tag = TripleTag::LineConcurrent;
    else
        out.tag = TripleTag::Generic;

    // frame map: point1 -> e1, meet of the two lines -> e2, point2 -> e3;
    // this already sends line1 to span(e1,e2) and line2 to span(e2,e3)
    Mat3 frame;
    frame.col(0) = f1.point.v;
    frame.col(1) = meet_point;
    frame.col(2) = f2.point.v;
    Mat3 b0 = frame.inverse();

    Vec3 y = b0 * f3.point.v;                 // image of the third point
    Vec3 m = b0.inverse().transpose() * f3.line.v; // image of the third line

    // diagonal scaling pinning the third flag to the printed representative
    Vec3 d;
    switch (out.tag) {
        case TripleTag::Generic:
            d = Vec3(1.0 / y(0), -1.0 / y(1), 1.0 / y(2));
            break;
        case TripleTag::PointCollinear:
            d = Vec3(1.0 / y(0), 0.0, 1.0 / y(2));
            d(1) = m(1) * d(0) / m(0); // line goes to (1,1,-1)
            break;
        case TripleTag::LineConcurrent:
            d = Vec3(1.0 / y(0), 1.0 / y(1), 1.0 / y(2));
            break;
        case TripleTag::DoublyDegenerate:
            d = Vec3(1.0 / y(0), 0.0, 1.0 / y(2));
            d(1) = std::sqrt(std::abs(d(0) * d(2))); // stabilizer freedom; pinned
            break;
    }
    out.normalizer = sl_normalize(Mat3(d.asDiagonal() * b0), tol);

    if (out.tag == TripleTag::Generic) {
        Vec3 mm = out.normalizer.inverse().transpose() * f3.line.v;
        out.x = mm(2) / mm(0);
        if (std::abs(out.x) < tol.x_excl || std::abs(out.x + 1.0) < tol.x_excl)
            out.condition_warning = true;
    }

    auto target = normal_form_triple(out.tag, out.x);
    const Flag* input[3] = {&f1, &f2, &f3};
    for (int k = 0; k < 3; ++k)
        out.roundtrip_error = std::max(
            out.roundtrip_error, flag_distance(apply(out.normalizer, *input[k]), target[k]));
    return out;
}

Mat3 StabilizerType::element(double lambda) const {
    Mat3 d = Mat3::Zero();
    d(0, 0) = lambda;
    d(1, 1) = 1.0 / (lambda * lambda);
    d(2, 2) = lambda;
    return normalizer.inverse() * d * normalizer;
}

StabilizerType stabilizer_type(const TripleClass& c) {
    StabilizerType s;
    s.normalizer = c.normalizer;
    s.one_parameter = (c.tag == TripleTag::DoublyDegenerate);
    return s;
}

Flag attracting_flag(const Mat3& m, const Tolerances& tol) {
    EigenTriple e;
    try {
        e = eigen_real_3(m, tol);
    } catch (const Error& err) {
        throw Error(Err::NotProximal, err.what());
    }
    std::array<int, 3> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return std::abs(e.values[a]) > std::abs(e.values[b]);
    });
    double top = std::abs(e.values[idx[0]]);
    if (std::abs(e.values[idx[0]]) - std::abs(e.values[idx[1]]) <= tol.eig * top ||
        std::abs(e.values[idx[1]]) - std::abs(e.values[idx[2]]) <= tol.eig * top)
        throw Error(Err::NotProximal, "eigenvalue moduli not separated");
    Vec3 p = e.vectors[idx[0]];
    Vec3 l = p.cross(e.vectors[idx[1]]); // annihilates the top two directions
    if (l.norm() < tol.sing) throw Error(Err::NotProximal, "top eigendirections collapse");
    // exact incidence
    Vec3 lc = canonicalize(l);
    Vec3 pc = canonicalize(p);
    lc = canonicalize(lc - lc.dot(pc) * pc);
    return Flag{ProjPoint{pc}, ProjLine{lc}};
}

Flag involution_s(const Flag& f) {
    // s = antidiag(1,-1,1) lies in SL(3,R), is symmetric and involutive, so
    // the line transforms by s as well
    Mat3 s = Mat3::Zero();
    s(0, 2) = 1.0;
    s(1, 1) = -1.0;
    s(2, 0) = 1.0;
    return Flag{make_point(s * f.point.v), make_line(s * f.line.v)};
}

bool in_standard_domain(const Flag& f, const Tolerances& tol) {
    return std::abs(f.point.v(1)) > tol.domain && std::abs(f.line.v(1)) > tol.domain;
}

} // namespace sl3lab
