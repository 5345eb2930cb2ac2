#pragma once

#include <array>

#include "sl3lab/eigen_real.hpp"

namespace sl3lab {

/// Homogeneous coordinates, unit norm, first coordinate of magnitude
/// above 1e-12 made positive. Points and lines share the representation;
/// lines live in the dual and transform contragradiently.
Vec3 canonicalize(const Vec3& v);

struct ProjPoint {
    Vec3 v;
};
struct ProjLine {
    Vec3 v;
};

inline ProjPoint make_point(const Vec3& v) { return {canonicalize(v)}; }
inline ProjLine make_line(const Vec3& v) { return {canonicalize(v)}; }

/// Incident (point, line) pair: |<line, point>| <= tol.inc.
struct Flag {
    ProjPoint point;
    ProjLine line;
};

Flag make_flag(const Vec3& point, const Vec3& line, const Tolerances& tol = default_tol());

/// Projective action: point -> m p, line -> m^-T l.
Flag apply(const Mat3& m, const Flag& f);

double point_angle(const ProjPoint& a, const ProjPoint& b);
double line_angle(const ProjLine& a, const ProjLine& b);

/// max(angle between points, angle between lines); a comparison metric
/// for matched samples, invariant only under orthogonal changes.
double flag_distance(const Flag& a, const Flag& b);

/// Both cross pairings f2(v1), f1(v2) exceed tol.trans in magnitude.
bool transverse(const Flag& f1, const Flag& f2, const Tolerances& tol = default_tol());

enum class TripleTag { Generic, PointCollinear, LineConcurrent, DoublyDegenerate };

const char* triple_tag_name(TripleTag t);

struct TripleClass {
    TripleTag tag = TripleTag::Generic;
    double x = 0.0;  // valid for Generic; x outside {0,-1}
    Mat3 normalizer; // sends the input triple to the tagged normal form
    double c_pt = 0.0, c_ln = 0.0; // raw incidence magnitudes
    bool condition_warning = false; // incidences in the ambiguous band
    double roundtrip_error = 0.0;   // worst flag distance to the normal form
};

/// The four PGL(3,R)-orbit representatives of pairwise transverse triples;
/// x is used only for the generic family.
std::array<Flag, 3> normal_form_triple(TripleTag tag, double x = 2.0);

TripleClass classify_triple(const Flag& f1, const Flag& f2, const Flag& f3,
                            const Tolerances& tol = default_tol());

/// Nontrivial exactly for the doubly degenerate triple, where the
/// stabilizer is the conjugated family diag(l, 1/l^2, l).
struct StabilizerType {
    bool one_parameter = false;
    Mat3 normalizer;

    Mat3 element(double lambda) const; // normalizer^-1 diag(l,1/l^2,l) normalizer
};
StabilizerType stabilizer_type(const TripleClass& c);

/// Attracting flag of a proximal matrix: top eigendirection by modulus,
/// together with the span of the top two. Throws NotProximal.
Flag attracting_flag(const Mat3& m, const Tolerances& tol = default_tol());

/// Flag action of the antidiagonal involution swapping e1 and e3.
Flag involution_s(const Flag& f);

/// Membership in the standard domain of discontinuity: point off the
/// limit line (middle coordinate nonzero) and line off its dual pencil.
bool in_standard_domain(const Flag& f, const Tolerances& tol = default_tol());

} // namespace sl3lab
