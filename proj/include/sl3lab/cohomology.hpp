#pragma once

#include "sl3lab/representation.hpp"

namespace sl3lab {

enum class CoeffTag { Trivial, Standard2, Adjoint2, Adjoint3 };

const char* coeff_tag_name(CoeffTag t);

/// Coefficient module for group cohomology: a linear action of the
/// standard generators (with cached inverses).
struct CoefficientAction {
    CoeffTag tag = CoeffTag::Trivial;
    int dim = 0;
    int genus = 0;
    std::vector<Eigen::MatrixXd> act;     // per generator
    std::vector<Eigen::MatrixXd> act_inv; // per generator inverse

    Eigen::MatrixXd of_word(const Word& w) const;
    Eigen::MatrixXd of_fox(const FoxExpression& e) const;
};

CoefficientAction trivial_action(int dim, int genus);
/// The generator images themselves (standard linear action of SL(2)).
CoefficientAction standard2_action(const Representation& rep2);
/// Conjugation on trace-zero 2x2 matrices, basis E12, E21, diag(1,-1).
CoefficientAction adjoint2_action(const Representation& rep2);
/// Conjugation on trace-zero 3x3 matrices, basis: the six elementary
/// off-diagonals, diag(1,0,-1) and diag(-1,2,-1).
CoefficientAction adjoint3_action(const Representation& rep3);

/// Presentation 2-complex in the coefficients: d1(v) = (v - g_k v)_k and
/// d2 = the Fox Jacobian of the relator, so that ker d2 / im d1 = H^1.
struct CochainComplex {
    int dim = 0;   // n
    int genus = 0; // g
    Eigen::MatrixXd d1; // (2g n) x n
    Eigen::MatrixXd d2; // n x (2g n)
};

/// Throws ExactnessViolation when the action does not respect the relator
/// (equivalently when ||d2 d1|| fails to vanish).
CochainComplex build_complex(const CoefficientAction& c,
                             const Tolerances& tol = default_tol());

struct HDims {
    int h0 = 0;
    int h1 = 0;
    double spectral_gap = 0.0; // worst rank-decision gap over d1, d2
};
HDims h_dimensions(const CochainComplex& cx, const Tolerances& tol = default_tol());

/// dim of the coinvariants V / span{(g-1)v}; equals dim H^2 by duality.
int h2_coinvariants(const CoefficientAction& c, const Tolerances& tol = default_tol());

struct CoeffReport {
    CoeffTag tag;
    int g = 0;
    int h0 = 0, h1 = 0, h2 = 0;
    double spectral_gap = 0.0;
    std::string paper_formula;
    int paper_value = 0;
    bool agrees = false;
};

CoeffReport coefficient_report(const CoefficientAction& c,
                               const Tolerances& tol = default_tol());

/// Zariski tangent-space dimension at rho: h1 of the adjoint complex, plus
/// the block-form summand decomposition when rho is completely reducible.
struct TangentReport {
    int g = 0;
    CoeffReport adjoint;
    bool block_form = false;
    int h1_sl2_adjoint = 0;  // valid when block_form
    int h1_trivial = 0;
    int h1_standard2 = 0;
    bool decomposition_consistent = false;
};

TangentReport tangent_dimension_report(const Representation& rep3,
                                       const Tolerances& tol = default_tol());

std::string coeff_report_json(const CoeffReport& r);
std::string tangent_report_json(const TangentReport& r);

} // namespace sl3lab
