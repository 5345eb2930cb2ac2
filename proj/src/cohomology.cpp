#include "sl3lab/cohomology.hpp"

#include <cmath>
#include <json.hpp>

namespace sl3lab {

const char* coeff_tag_name(CoeffTag t) {
    switch (t) {
        case CoeffTag::Trivial: return "trivial";
        case CoeffTag::Standard2: return "standard2";
        case CoeffTag::Adjoint2: return "adjoint2";
        case CoeffTag::Adjoint3: return "adjoint3";
    }
    return "?";
}

Eigen::MatrixXd CoefficientAction::of_word(const Word& w) const {
    Eigen::MatrixXd acc = Eigen::MatrixXd::Identity(dim, dim);
    for (Letter l : w.letters)
        acc = acc * (letter_inverse(l) ? act_inv[letter_gen(l)] : act[letter_gen(l)]);
    return acc;
}

Eigen::MatrixXd CoefficientAction::of_fox(const FoxExpression& e) const {
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(dim, dim);
    for (const auto& [w, c] : e.terms) acc += static_cast<double>(c) * of_word(w);
    return acc;
}

CoefficientAction trivial_action(int dim, int genus) {
    CoefficientAction c;
    c.tag = CoeffTag::Trivial;
    c.dim = dim;
    c.genus = genus;
    for (int k = 0; k < 2 * genus; ++k) {
        c.act.push_back(Eigen::MatrixXd::Identity(dim, dim));
        c.act_inv.push_back(Eigen::MatrixXd::Identity(dim, dim));
    }
    return c;
}

CoefficientAction standard2_action(const Representation& rep2) {
    if (rep2.rank != 2) throw Error(Err::InvalidArgument, "standard2_action expects rank 2");
    CoefficientAction c;
    c.tag = CoeffTag::Standard2;
    c.dim = 2;
    c.genus = rep2.genus;
    for (const auto& m : rep2.images) {
        c.act.push_back(m);
        c.act_inv.push_back(m.inverse());
    }
    return c;
}

namespace {

// conjugation action expressed in a fixed basis of a trace-zero space
CoefficientAction conjugation_action(CoeffTag tag, int genus,
                                     const std::vector<Eigen::MatrixXd>& images,
                                     const std::vector<Eigen::MatrixXd>& basis) {
    const int n = static_cast<int>(basis.size());
    const int r = static_cast<int>(basis.front().rows());
    Eigen::MatrixXd phi(r * r, n);
    for (int j = 0; j < n; ++j)
        phi.col(j) = Eigen::Map<const Eigen::VectorXd>(basis[j].data(), r * r);
    Eigen::MatrixXd pinv = (phi.transpose() * phi).inverse() * phi.transpose();

    CoefficientAction c;
    c.tag = tag;
    c.dim = n;
    c.genus = genus;
    for (const auto& g : images) {
        Eigen::MatrixXd ginv = g.inverse();
        Eigen::MatrixXd a(n, n);
        for (int j = 0; j < n; ++j) {
            Eigen::MatrixXd img = g * basis[j] * ginv;
            a.col(j) = pinv * Eigen::Map<const Eigen::VectorXd>(img.data(), r * r);
        }
        c.act.push_back(a);
        c.act_inv.push_back(a.inverse());
    }
    return c;
}

} // namespace

CoefficientAction adjoint2_action(const Representation& rep2) {
    if (rep2.rank != 2) throw Error(Err::InvalidArgument, "adjoint2_action expects rank 2");
    std::vector<Eigen::MatrixXd> basis;
    Eigen::MatrixXd b(2, 2);
    b << 0, 1, 0, 0;
    basis.push_back(b);
    b << 0, 0, 1, 0;
    basis.push_back(b);
    b << 1, 0, 0, -1;
    basis.push_back(b);
    return conjugation_action(CoeffTag::Adjoint2, rep2.genus, rep2.images, basis);
}

CoefficientAction adjoint3_action(const Representation& rep3) {
    if (rep3.rank != 3) throw Error(Err::InvalidArgument, "adjoint3_action expects rank 3");
    std::vector<Eigen::MatrixXd> basis;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            Eigen::MatrixXd e = Eigen::MatrixXd::Zero(3, 3);
            e(i, j) = 1.0;
            basis.push_back(e);
        }
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(3, 3);
    d.diagonal() << 1, 0, -1;
    basis.push_back(d);
    d.diagonal() << -1, 2, -1;
    basis.push_back(d);
    return conjugation_action(CoeffTag::Adjoint3, rep3.genus, rep3.images, basis);
}

CochainComplex build_complex(const CoefficientAction& c, const Tolerances& tol) {
    const int n = c.dim;
    const int ng = 2 * c.genus;
    Presentation pres(c.genus);
    Word r = relator(pres);

    // the action must respect the relator, otherwise the complex is
    // invalid; the deviation is judged against the worst intermediate
    // partial-product norm, which bounds the roundoff of a correct action
    Eigen::MatrixXd acc = Eigen::MatrixXd::Identity(n, n);
    double partial_scale = 1.0;
    for (Letter l : r.letters) {
        acc = acc * (letter_inverse(l) ? c.act_inv[letter_gen(l)] : c.act[letter_gen(l)]);
        partial_scale = std::max(partial_scale, acc.norm());
    }
    double rel_dev = (acc - Eigen::MatrixXd::Identity(n, n)).norm();
    if (rel_dev > tol.exact * partial_scale)
        throw Error(Err::ExactnessViolation,
                    "action violates the relator by " + std::to_string(rel_dev) +
                        " against partial scale " + std::to_string(partial_scale));

    CochainComplex cx;
    cx.dim = n;
    cx.genus = c.genus;
    cx.d1.resize(ng * n, n);
    cx.d2.resize(n, ng * n);
    for (int k = 0; k < ng; ++k) {
        cx.d1.block(k * n, 0, n, n) = Eigen::MatrixXd::Identity(n, n) - c.act[k];
        cx.d2.block(0, k * n, n, n) = c.of_fox(fox_derivative(r, k));
    }

    double exact_dev = (cx.d2 * cx.d1).norm();
    double scale = std::max(1.0, cx.d2.norm() * cx.d1.norm());
    if (exact_dev > tol.exact * scale)
        throw Error(Err::ExactnessViolation, "||d2 d1|| = " + std::to_string(exact_dev));
    return cx;
}

HDims h_dimensions(const CochainComplex& cx, const Tolerances& tol) {
    HDims h;
    int r1 = rank_tol(cx.d1, tol.rank);
    int r2 = rank_tol(cx.d2, tol.rank);
    h.h0 = cx.dim - r1;
    h.h1 = (2 * cx.genus * cx.dim - r2) - r1;
    h.spectral_gap = std::min(rank_gap(cx.d1, tol.rank), rank_gap(cx.d2, tol.rank));
    return h;
}

int h2_coinvariants(const CoefficientAction& c, const Tolerances& tol) {
    const int n = c.dim;
    const int ng = 2 * c.genus;
    Eigen::MatrixXd m(n, ng * n);
    for (int k = 0; k < ng; ++k)
        m.block(0, k * n, n, n) = c.act[k] - Eigen::MatrixXd::Identity(n, n);
    return n - rank_tol(m, tol.rank);
}

CoeffReport coefficient_report(const CoefficientAction& c, const Tolerances& tol) {
    CochainComplex cx = build_complex(c, tol);
    HDims h = h_dimensions(cx, tol);
    CoeffReport r;
    r.tag = c.tag;
    r.g = c.genus;
    r.h0 = h.h0;
    r.h1 = h.h1;
    r.h2 = h2_coinvariants(c, tol);
    r.spectral_gap = h.spectral_gap;
    switch (c.tag) {
        case CoeffTag::Trivial:
            r.paper_formula = "2g";
            r.paper_value = 2 * c.genus;
            break;
        case CoeffTag::Standard2:
            r.paper_formula = "4g-4";
            r.paper_value = 4 * c.genus - 4;
            break;
        case CoeffTag::Adjoint2:
            r.paper_formula = "6g-6";
            r.paper_value = 6 * c.genus - 6;
            break;
        case CoeffTag::Adjoint3:
            // fixed by the caller, who knows whether rho is reducible
            r.paper_formula = "";
            r.paper_value = -1;
            break;
    }
    r.agrees = (r.h1 == r.paper_value);
    return r;
}

TangentReport tangent_dimension_report(const Representation& rep3, const Tolerances& tol) {
    TangentReport t;
    t.g = rep3.genus;
    t.adjoint = coefficient_report(adjoint3_action(rep3), tol);

    ReducibilityResult red = detect_reducible(rep3, tol);
    t.block_form = red.reducible;
    if (red.reducible) {
        t.adjoint.paper_formula = "16g-14";
        t.adjoint.paper_value = 16 * rep3.genus - 14;
        const Representation& factor = red.witness.sl2_factor;
        t.h1_sl2_adjoint = coefficient_report(adjoint2_action(factor), tol).h1;
        t.h1_trivial = coefficient_report(trivial_action(1, rep3.genus), tol).h1;
        t.h1_standard2 = coefficient_report(standard2_action(factor), tol).h1;
        t.decomposition_consistent =
            (t.adjoint.h1 == t.h1_sl2_adjoint + t.h1_trivial + 2 * t.h1_standard2);
    } else {
        t.adjoint.paper_formula = "16g-16";
        t.adjoint.paper_value = 16 * rep3.genus - 16;
    }
    t.adjoint.agrees = (t.adjoint.h1 == t.adjoint.paper_value);
    return t;
}

namespace {

nlohmann::ordered_json coeff_report_obj(const CoeffReport& r) {
    nlohmann::ordered_json j;
    j["g"] = r.g;
    j["coefficient"] = coeff_tag_name(r.tag);
    j["h0"] = r.h0;
    j["h1"] = r.h1;
    j["h2"] = r.h2;
    if (std::isfinite(r.spectral_gap))
        j["spectral_gap"] = r.spectral_gap;
    else
        j["spectral_gap"] = "inf";
    j["gap_warning"] = (r.spectral_gap < 1e3); // rank decision poorly separated
    j["paper_formula"] = r.paper_formula;
    j["agrees"] = r.agrees;
    return j;
}

} // namespace

std::string coeff_report_json(const CoeffReport& r) {
    return coeff_report_obj(r).dump(2) + "\n";
}

std::string tangent_report_json(const TangentReport& t) {
    nlohmann::ordered_json j;
    j["g"] = t.g;
    j["adjoint"] = coeff_report_obj(t.adjoint);
    j["block_form"] = t.block_form;
    if (t.block_form) {
        j["decomposition"] = {{"h1_sl2_adjoint", t.h1_sl2_adjoint},
                              {"h1_trivial", t.h1_trivial},
                              {"h1_standard2_each", t.h1_standard2},
                              {"sum", t.h1_sl2_adjoint + t.h1_trivial + 2 * t.h1_standard2},
                              {"consistent", t.decomposition_consistent}};
    }
    return j.dump(2) + "\n";
}

} // namespace sl3lab
