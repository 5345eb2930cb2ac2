#include "sl3lab/representation.hpp"

#include <cmath>
#include <complex>
#include <fstream>
#include <json.hpp>

namespace sl3lab {

using json = nlohmann::ordered_json;
using cplx = std::complex<double>;

Evaluator::Evaluator(const Representation& rep) : rep_(&rep) {
    inv_.reserve(rep.images.size());
    for (const auto& m : rep.images) inv_.push_back(m.inverse());
}

Eigen::MatrixXd Evaluator::operator()(const Word& w) const {
    Eigen::MatrixXd acc = Eigen::MatrixXd::Identity(rep_->rank, rep_->rank);
    for (Letter l : w.letters)
        acc = acc * (letter_inverse(l) ? inv_[letter_gen(l)] : rep_->images[letter_gen(l)]);
    return acc;
}

Eigen::MatrixXd evaluate(const Representation& rep, const Word& w) {
    return Evaluator(rep)(w);
}

double relation_residual_dd(const Representation& rep) {
    Word r = relator(rep.presentation());
    std::vector<DDMat> gens, invs;
    for (const auto& m : rep.images) {
        gens.push_back(to_dd(m));
        invs.push_back(dd_inverse(gens.back()));
    }
    DDMat acc = DDMat::identity(rep.rank);
    for (Letter l : r.letters)
        acc = dd_matmul(acc, letter_inverse(l) ? invs[letter_gen(l)] : gens[letter_gen(l)]);
    return dd_dist_to_identity(acc);
}

// ---------------------------------------------------------------------------
// Fuchsian construction: regular 4g-gon in the upper half-plane model,
// side pairings of the commutator edge labeling a1 b1 a1^-1 b1^-1 ...
// ---------------------------------------------------------------------------

namespace {

cplx moebius(const Mat2& m, cplx z) {
    return (m(0, 0) * z + m(0, 1)) / (m(1, 0) * z + m(1, 1));
}

// z -> (z - x)/y, sends P = x + iy to i.
Mat2 translate_to_i(cplx p) {
    double x = p.real(), y = p.imag();
    Mat2 m;
    m << 1.0, -x, 0.0, y;
    return m / std::sqrt(y);
}

// Elliptic element fixing i that rotates the disk picture by angle psi.
Mat2 rotation_about_i(double psi) {
    Mat2 m;
    m << std::cos(psi / 2.0), std::sin(psi / 2.0), -std::sin(psi / 2.0), std::cos(psi / 2.0);
    return m;
}

cplx to_disk(cplx z_half) { return (z_half - cplx(0, 1)) / (z_half + cplx(0, 1)); }
cplx to_half(cplx z_disk) { return cplx(0, 1) * (1.0 + z_disk) / (1.0 - z_disk); }

// Isometry sending P to i and Q onto the geodesic ray from i through e^s i.
Mat2 normalize_segment(cplx p, cplx q) {
    Mat2 t = translate_to_i(p);
    cplx w = to_disk(moebius(t, q));
    double psi = std::atan2(w.imag(), w.real());
    return rotation_about_i(-psi) * t;
}

// Orientation-preserving isometry with g(p1) = p2 and g(q1) = q2; requires
// d(p1,q1) = d(p2,q2), which regularity of the polygon guarantees.
Mat2 pair_map(cplx p1, cplx q1, cplx p2, cplx q2) {
    Mat2 m1 = normalize_segment(p1, q1);
    Mat2 m2 = normalize_segment(p2, q2);
    return m2.inverse() * m1;
}

} // namespace

Representation fuchsian(int genus, const Tolerances& tol) {
    if (genus < 2) throw Error(Err::InvalidArgument, "genus must be >= 2");
    const int n = 4 * genus;

    // circumradius R with vertex angle 2pi/n: cosh R = cot^2(pi/n)
    const double cot = 1.0 / std::tan(M_PI / n);
    const double cosh_r = cot * cot;
    const double disk_radius = std::sqrt((cosh_r - 1.0) / (cosh_r + 1.0));

    std::vector<cplx> vertex(n);
    for (int k = 0; k < n; ++k) {
        double ang = 2.0 * M_PI * k / n;
        vertex[k] = to_half(disk_radius * cplx(std::cos(ang), std::sin(ang)));
    }
    auto v = [&](int k) { return vertex[((k % n) + n) % n]; };

    // Edge e_k joins vertices k, k+1 counterclockwise. Reading the boundary
    // word a_i b_i a_i^-1 b_i^-1 per handle, the pairing for a_i identifies
    // the directed edge (v_{4i}, v_{4i+1}) with (v_{4i+3}, v_{4i+2}) and the
    // one for b_i identifies (v_{4i+1}, v_{4i+2}) with (v_{4i+4}, v_{4i+3}).
    // As deck transformations the a_i act as the inverse pairing and the
    // b_i as the pairing itself; that assignment closes the relator.
    Representation rep;
    rep.genus = genus;
    rep.rank = 2;
    rep.construction = "fuchsian";
    rep.images.resize(2 * genus);
    for (int i = 0; i < genus; ++i) {
        Mat2 a = pair_map(v(4 * i), v(4 * i + 1), v(4 * i + 3), v(4 * i + 2)).inverse();
        Mat2 b = pair_map(v(4 * i + 1), v(4 * i + 2), v(4 * i + 4), v(4 * i + 3));
        if (a.trace() < 0) a = -a;
        if (b.trace() < 0) b = -b;
        rep.images[2 * i] = sl_normalize2(a, tol);
        rep.images[2 * i + 1] = sl_normalize2(b, tol);
    }

    rep.relation_residual = relation_residual_dd(rep);
    if (rep.relation_residual > tol.rel)
        throw Error(Err::ResidualTooLarge,
                    "relator residual " + std::to_string(rep.relation_residual));
    return rep;
}

Representation embed_iota(const Representation& rep2) {
    if (rep2.rank != 2) throw Error(Err::InvalidArgument, "embed_iota expects rank 2");
    Representation out;
    out.genus = rep2.genus;
    out.rank = 3;
    out.construction = "iota(" + rep2.construction + ")";
    for (const auto& m : rep2.images) {
        Mat3 e = Mat3::Zero();
        e(0, 0) = m(0, 0);
        e(0, 2) = m(0, 1);
        e(2, 0) = m(1, 0);
        e(2, 2) = m(1, 1);
        e(1, 1) = 1.0;
        out.images.push_back(e);
    }
    out.relation_residual = relation_residual_dd(out);
    return out;
}

Representation sym2(const Representation& rep2) {
    if (rep2.rank != 2) throw Error(Err::InvalidArgument, "sym2 expects rank 2");
    Representation out;
    out.genus = rep2.genus;
    out.rank = 3;
    out.construction = "sym2(" + rep2.construction + ")";
    for (const auto& m : rep2.images) {
        double p = m(0, 0), q = m(0, 1), s = m(1, 0), t = m(1, 1);
        Mat3 e;
        e << p * p, 2.0 * p * q, q * q,
             p * s, p * t + q * s, q * t,
             s * s, 2.0 * s * t, t * t;
        out.images.push_back(sl_normalize(e));
    }
    out.relation_residual = relation_residual_dd(out);
    return out;
}

namespace {

void require_block_form(const Eigen::MatrixXd& m, const Tolerances& tol, const char* who) {
    static const Mat3 j = j13();
    double dev = (m * j - j * m).norm();
    if (dev > tol.comm * std::max(1.0, m.norm()))
        throw Error(Err::NotBlockForm,
                    std::string(who) + ": commutator with J13 has norm " + std::to_string(dev));
}

} // namespace

Representation twist(const Representation& rep3, const HomToZ2& phi, const Tolerances& tol) {
    if (rep3.rank != 3) throw Error(Err::InvalidArgument, "twist expects rank 3");
    if (static_cast<int>(phi.bits.size()) != 2 * rep3.genus)
        throw Error(Err::InvalidArgument, "phi must have 2g bits");
    for (const auto& m : rep3.images) require_block_form(m, tol, "twist");

    Representation out = rep3;
    out.construction = "twist(" + rep3.construction + ")";
    const Mat3 j = j13();
    for (size_t k = 0; k < out.images.size(); ++k)
        if (phi.bits[k] & 1) out.images[k] = out.images[k] * j;
    out.relation_residual = relation_residual_dd(out);
    return out;
}

Representation radial_deform(const Representation& rep3, const HomToRStar& lambda,
                             const Mat3& conj, const Tolerances& tol) {
    if (rep3.rank != 3) throw Error(Err::InvalidArgument, "radial_deform expects rank 3");
    if (static_cast<int>(lambda.values.size()) != 2 * rep3.genus)
        throw Error(Err::InvalidArgument, "lambda must have 2g values");
    const Mat3 conj_inv = conj.inverse();
    for (const auto& m : rep3.images)
        require_block_form(conj * m * conj_inv, tol, "radial_deform");

    Representation out = rep3;
    out.construction = "radial(" + rep3.construction + ")";
    for (size_t k = 0; k < out.images.size(); ++k) {
        double l = lambda.values[k];
        if (l == 0.0 || !std::isfinite(l))
            throw Error(Err::ZeroLambda, "lambda[" + std::to_string(k) + "]");
        Mat3 d = Mat3::Zero();
        d(0, 0) = l;
        d(1, 1) = 1.0 / (l * l);
        d(2, 2) = l;
        out.images[k] = sl_normalize(conj_inv * d * (conj * rep3.images[k] * conj_inv) * conj, tol);
    }
    out.relation_residual = relation_residual_dd(out);
    return out;
}

SignSignature f_invariant(const Representation& rep3, const Tolerances& tol) {
    if (rep3.rank != 3) throw Error(Err::InvalidArgument, "f_invariant expects rank 3");
    SignSignature sig;
    for (size_t k = 0; k < rep3.images.size(); ++k) {
        try {
            EigenTriple e = eigen_real_3(Mat3(rep3.images[k]), tol);
            sig.bits.push_back(sign_class(e, tol) == SignClass::A0 ? 0 : 1);
        } catch (const Error& err) {
            Word g;
            g.letters.push_back(make_letter(static_cast<int>(k), false));
            throw Error(Err::NotCertified, "generator " + word_to_string(g) + ": " + err.what());
        }
    }
    return sig;
}

SpectralScan anosov_spectral_certificate(const Representation& rep3, int radius,
                                         const Tolerances& tol) {
    if (rep3.rank != 3) throw Error(Err::InvalidArgument, "certificate expects rank 3");
    Evaluator eval(rep3);
    SpectralScan scan;
    for (const Word& w : free_ball(rep3.presentation(), radius)) {
        if (w.empty()) continue;
        ++scan.words_checked;
        try {
            eigen_real_3(Mat3(eval(w)), tol);
        } catch (const Error&) {
            scan.certified = false;
            scan.counterexample = w;
            return scan;
        }
    }
    scan.certified = true;
    return scan;
}

// ---------------------------------------------------------------------------
// Reducibility: common eigenvector / invariant line search
// ---------------------------------------------------------------------------

namespace {

// Residual of v against being an eigenvector of m: component of m*v
// orthogonal to v, relative to |m*v|.
double eigvec_residual(const Mat3& m, const Vec3& v) {
    Vec3 u = m * v;
    double n = u.norm();
    if (n == 0.0) return 0.0;
    return (u - u.dot(v) * v).norm() / n;
}

// Candidates: eigenvectors of the first generator image with three
// distinct real eigenvalues; survivors are eigenvectors of every image.
std::vector<Vec3> common_eigenvectors(const std::vector<Mat3>& mats, const Tolerances& tol,
                                      std::string& diag) {
    std::vector<Vec3> candidates;
    for (const auto& m : mats) {
        try {
            EigenTriple e = eigen_real_3(m, tol);
            candidates.assign(e.vectors.begin(), e.vectors.end());
            break;
        } catch (const Error&) {
            continue;
        }
    }
    if (candidates.empty()) {
        diag = "no generator image with three distinct real eigenvalues";
        return {};
    }
    std::vector<Vec3> common;
    for (const Vec3& v : candidates) {
        bool ok = true;
        for (const auto& m : mats)
            if (eigvec_residual(m, v) > tol.inv) {
                ok = false;
                break;
            }
        if (ok) common.push_back(v);
    }
    return common;
}

} // namespace

ReducibilityResult detect_reducible(const Representation& rep3, const Tolerances& tol) {
    if (rep3.rank != 3) throw Error(Err::InvalidArgument, "detect_reducible expects rank 3");
    ReducibilityResult res;

    std::vector<Mat3> mats, mats_t;
    for (const auto& m : rep3.images) {
        mats.push_back(Mat3(m));
        mats_t.push_back(Mat3(m.transpose()));
    }

    std::string diag;
    std::vector<Vec3> points = common_eigenvectors(mats, tol, diag);
    if (points.empty()) {
        res.diagnostic = diag.empty() ? "no common eigenvector" : diag;
        return res;
    }
    std::vector<Vec3> lines = common_eigenvectors(mats_t, tol, diag);
    if (lines.empty()) {
        res.diagnostic = diag.empty() ? "no common invariant line" : diag;
        return res;
    }

    auto canonical_sign = [](Vec3 u) {
        int imax = 0;
        u.cwiseAbs().maxCoeff(&imax);
        return u(imax) < 0.0 ? Vec3(-u) : u;
    };
    const Vec3 v = canonical_sign(points.front());
    const Vec3 f = canonical_sign(lines.front());
    if (std::abs(f.dot(v)) < tol.inv) {
        res.diagnostic = "invariant point lies on the invariant line (not completely reducible)";
        return res;
    }

    // basis (x1, v, x3) with x1, x3 spanning the invariant line ker f,
    // aligned with the coordinate axes so that block-form inputs get a
    // conjugator close to the identity
    Mat3 proj = Mat3::Identity() - f * f.transpose();
    std::array<Vec3, 3> cand = {proj.col(0), proj.col(1), proj.col(2)};
    int i1 = 0;
    for (int i = 1; i < 3; ++i)
        if (cand[i].norm() > cand[i1].norm() + 1e-12) i1 = i;
    Vec3 x1 = cand[i1].normalized();
    int i3 = -1;
    double best = -1.0;
    for (int i = 0; i < 3; ++i) {
        if (i == i1) continue;
        double score = (cand[i] - cand[i].dot(x1) * x1).norm();
        if (score > best + 1e-12) {
            best = score;
            i3 = i;
        }
    }
    Vec3 x3 = (cand[i3] - cand[i3].dot(x1) * x1).normalized();
    Mat3 basis;
    basis.col(0) = x1;
    basis.col(1) = v;
    basis.col(2) = x3;
    Mat3 conj = sl_normalize(Mat3(basis.inverse()), tol);
    Mat3 conj_inv = conj.inverse();

    Representation factor;
    factor.genus = rep3.genus;
    factor.rank = 2;
    factor.construction = "sl2-factor(" + rep3.construction + ")";
    double worst = 0.0;
    for (const auto& m : mats) {
        Mat3 b = conj * m * conj_inv;
        double off = std::max({std::abs(b(0, 1)), std::abs(b(2, 1)), std::abs(b(1, 0)),
                               std::abs(b(1, 2))});
        worst = std::max(worst, off / std::max(1.0, b.norm()));
        double mid = b(1, 1);
        if (mid <= 0.0) {
            res.diagnostic = "conjugated middle entry not positive";
            return res;
        }
        Mat2 block;
        block << b(0, 0), b(0, 2), b(2, 0), b(2, 2);
        factor.images.push_back(Mat2(std::sqrt(mid) * block));
    }
    factor.relation_residual = relation_residual_dd(factor);

    res.reducible = true;
    res.witness.conjugator = conj;
    res.witness.sl2_factor = std::move(factor);
    res.witness.residual = worst;
    return res;
}

namespace {

// Validated diag(l, 1/l^2, l) extraction; returns l.
double read_radial_entry(const Mat3& d, const Tolerances& tol) {
    double scale = std::max(1.0, d.cwiseAbs().maxCoeff());
    double off = std::max({std::abs(d(0, 1)), std::abs(d(0, 2)), std::abs(d(1, 0)),
                           std::abs(d(1, 2)), std::abs(d(2, 0)), std::abs(d(2, 1))});
    if (off > tol.diag * scale)
        throw Error(Err::NotRadialPair, "off-diagonal magnitude " + std::to_string(off));
    double l = d(0, 0);
    if (std::abs(l) < tol.sing)
        throw Error(Err::NotRadialPair, "vanishing diagonal entry");
    if (std::abs(d(2, 2) - l) > tol.diag * scale)
        throw Error(Err::NotRadialPair, "corner entries disagree");
    if (std::abs(d(1, 1) * l * l - 1.0) > tol.diag * std::max(1.0, std::abs(d(1, 1)) * l * l))
        throw Error(Err::NotRadialPair, "middle entry is not 1/l^2");
    return l;
}

} // namespace

LambdaExtraction extract_lambda(const Representation& rho1, const Representation& rho2,
                                const Tolerances& tol) {
    if (rho1.rank != 3 || rho2.rank != 3 || rho1.genus != rho2.genus)
        throw Error(Err::InvalidArgument, "extract_lambda expects matching rank-3 inputs");

    ReducibilityResult red = detect_reducible(rho1, tol);
    if (!red.reducible) throw Error(Err::NotReducible, red.diagnostic);
    const Mat3 conj = red.witness.conjugator;
    const Mat3 conj_inv = conj.inverse();

    Evaluator eval1(rho1), eval2(rho2);
    auto radial_of = [&](const Word& w) {
        Mat3 d = conj * Mat3(Eigen::MatrixXd(eval1(w)).inverse() * eval2(w)) * conj_inv;
        return read_radial_entry(d, tol);
    };

    LambdaExtraction out;
    out.conjugator = conj;
    const int ng = 2 * rho1.genus;
    std::vector<Word> gens(ng);
    for (int k = 0; k < ng; ++k) gens[k].letters.push_back(make_letter(k, false));
    for (int k = 0; k < ng; ++k) out.lambda.values.push_back(radial_of(gens[k]));

    double worst = 0.0;
    for (int i = 0; i < ng; ++i)
        for (int j = 0; j < ng; ++j) {
            double lw = radial_of(concat(gens[i], gens[j]));
            worst = std::max(worst,
                             std::abs(lw - out.lambda.values[i] * out.lambda.values[j]));
        }
    out.hom_residual = worst;
    return out;
}

// ---------------------------------------------------------------------------
// JSON file format
// ---------------------------------------------------------------------------

std::string representation_to_json(const Representation& rep) {
    json j;
    j["genus"] = rep.genus;
    j["rank"] = rep.rank;
    json gens = json::array();
    for (const auto& m : rep.images) {
        json row = json::array();
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        gens.push_back(row);
    }
    j["generators"] = gens;
    j["meta"] = {{"construction", rep.construction},
                 {"relation_residual", rep.relation_residual},
                 {"tolerances", {{"det", default_tol().det}, {"rel", default_tol().rel}}}};
    return j.dump(2) + "\n";
}

Representation representation_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw Error(Err::Io, std::string("bad representation JSON: ") + e.what());
    }
    Representation rep;
    try {
        rep.genus = j.at("genus").get<int>();
        rep.rank = j.at("rank").get<int>();
        if (rep.genus < 2 || (rep.rank != 2 && rep.rank != 3))
            throw Error(Err::Io, "genus/rank out of range");
        const auto& gens = j.at("generators");
        if (static_cast<int>(gens.size()) != 2 * rep.genus)
            throw Error(Err::Io, "expected 2g generator matrices");
        for (const auto& row : gens) {
            if (static_cast<int>(row.size()) != rep.rank * rep.rank)
                throw Error(Err::Io, "generator entry count mismatch");
            Eigen::MatrixXd m(rep.rank, rep.rank);
            int idx = 0;
            for (int r = 0; r < rep.rank; ++r)
                for (int c = 0; c < rep.rank; ++c) m(r, c) = row[idx++].get<double>();
            rep.images.push_back(m);
        }
        if (j.contains("meta")) {
            const auto& meta = j.at("meta");
            if (meta.contains("construction")) rep.construction = meta.at("construction");
        }
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw Error(Err::Io, std::string("bad representation JSON: ") + e.what());
    }
    for (const auto& m : rep.images)
        if (std::abs(m.determinant() - 1.0) > 1e-6)
            throw Error(Err::Io, "generator matrix is not unimodular");
    rep.relation_residual = relation_residual_dd(rep);
    return rep;
}

void save_representation(const std::string& path, const Representation& rep) {
    std::ofstream os(path);
    if (!os) throw Error(Err::Io, "cannot open " + path + " for writing");
    os << representation_to_json(rep);
    if (!os) throw Error(Err::Io, "write failed: " + path);
}

Representation load_representation(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw Error(Err::Io, "cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    return representation_from_json(text);
}

} // namespace sl3lab
