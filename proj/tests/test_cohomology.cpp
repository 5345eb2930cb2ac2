#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sl3lab/cohomology.hpp"

using namespace sl3lab;

TEST_CASE("trivial coefficients: zero maps, h0 = 1, h1 = 2g") {
    for (int g : {2, 3}) {
        CoefficientAction c = trivial_action(1, g);
        CochainComplex cx = build_complex(c);
        CHECK(cx.d1.norm() == 0.0);
        CHECK(cx.d2.norm() < 1e-14); // fox coefficients of the relator sum to zero
        HDims h = h_dimensions(cx);
        CHECK(h.h0 == 1);
        CHECK(h.h1 == 2 * g);
    }
}

TEST_CASE("standard 2-dimensional coefficients: shapes and dimensions") {
    for (int g : {2, 3}) {
        CoefficientAction c = standard2_action(fuchsian(g));
        CochainComplex cx = build_complex(c);
        CHECK(cx.d1.rows() == 2 * 2 * g);
        CHECK(cx.d1.cols() == 2);
        CHECK(cx.d2.rows() == 2);
        CHECK(cx.d2.cols() == 2 * 2 * g);
        HDims h = h_dimensions(cx);
        CHECK(h.h0 == 0);
        CHECK(h.h1 == 4 * g - 4);
        CHECK(h.spectral_gap > 1e3);
    }
}

TEST_CASE("adjoint action fixes diag(-1,2,-1) for block representations") {
    Representation rho = embed_iota(fuchsian(2));
    CoefficientAction c = adjoint3_action(rho);
    Eigen::VectorXd r_summand = Eigen::VectorXd::Zero(8);
    r_summand(7) = 1.0; // basis position of diag(-1,2,-1)
    for (const auto& a : c.act) CHECK((a * r_summand - r_summand).norm() < 1e-12);
    // Ad of unimodular matrices is unimodular
    for (const auto& a : c.act) CHECK(std::abs(a.determinant() - 1.0) < 1e-9);
    // trivial rho gives the identity action
    Representation triv;
    triv.genus = 2;
    triv.rank = 3;
    for (int k = 0; k < 4; ++k) triv.images.push_back(Eigen::MatrixXd::Identity(3, 3));
    CoefficientAction ct = adjoint3_action(triv);
    for (const auto& a : ct.act)
        CHECK((a - Eigen::MatrixXd::Identity(8, 8)).norm() < 1e-14);
}

TEST_CASE("adjoint dimensions match the tangent-space formulas") {
    for (int g : {2, 3}) {
        Representation red = embed_iota(fuchsian(g));
        HDims hr = h_dimensions(build_complex(adjoint3_action(red)));
        CHECK(hr.h1 == 16 * g - 14);
        CHECK(hr.h0 == 1); // centralizer of the block image is one-dimensional
        CHECK(hr.spectral_gap > 1e3);

        Representation irr = sym2(fuchsian(g));
        HDims hi = h_dimensions(build_complex(adjoint3_action(irr)));
        CHECK(hi.h1 == 16 * g - 16);
        CHECK(hi.h0 == 0);
        CHECK(hi.spectral_gap > 1e3);
    }
}

TEST_CASE("exactness d2 d1 = 0, also under random conjugation") {
    std::mt19937_64 rng(19);
    Representation rho = embed_iota(fuchsian(2));
    CHECK((build_complex(adjoint3_action(rho)).d2 *
           build_complex(adjoint3_action(rho)).d1)
              .norm() < 1e-7);
    for (int trial = 0; trial < 10; ++trial) {
        Mat3 a = random_unimodular3(rng, 1e2);
        Representation conj = rho;
        for (auto& m : conj.images) m = a * m * a.inverse();
        CochainComplex cx = build_complex(adjoint3_action(conj));
        CHECK((cx.d2 * cx.d1).norm() < 1e-6 * std::max(1.0, cx.d2.norm() * cx.d1.norm()));
        // h1 is a conjugation invariant
        CHECK(h_dimensions(cx).h1 == 16 * 2 - 14);
    }
}

TEST_CASE("build_complex rejects actions violating the relator") {
    Representation bad;
    bad.genus = 2;
    bad.rank = 2;
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int k = 0; k < 4; ++k) {
        Mat2 m;
        m << 1.0 + u(rng), u(rng), u(rng), 1.0 + u(rng);
        bad.images.push_back(m);
    }
    CHECK_THROWS_WITH_AS(build_complex(standard2_action(bad)),
                         doctest::Contains("ExactnessViolation"), Error);
}

TEST_CASE("Euler characteristic bookkeeping h0 - h1 + h2 = chi n") {
    for (int g : {2, 3}) {
        const int chi = 2 - 2 * g;
        Representation base = fuchsian(g);
        struct Case {
            CoefficientAction c;
        };
        std::vector<CoefficientAction> actions;
        actions.push_back(trivial_action(1, g));
        actions.push_back(standard2_action(base));
        actions.push_back(adjoint3_action(embed_iota(base)));
        actions.push_back(adjoint3_action(sym2(base)));
        for (const auto& c : actions) {
            HDims h = h_dimensions(build_complex(c));
            int h2 = h2_coinvariants(c);
            CHECK(h.h0 - h.h1 + h2 == chi * c.dim);
        }
    }
}

TEST_CASE("rank decisions stable under 10x threshold scaling") {
    Tolerances loose, tight;
    loose.rank = default_tol().rank * 10.0;
    tight.rank = default_tol().rank / 10.0;
    for (int g : {2, 3}) {
        for (const Representation& rho :
             {embed_iota(fuchsian(g)), sym2(fuchsian(g))}) {
            CochainComplex cx = build_complex(adjoint3_action(rho));
            HDims a = h_dimensions(cx, loose);
            HDims b = h_dimensions(cx, tight);
            CHECK(a.h1 == b.h1);
            CHECK(a.h0 == b.h0);
        }
    }
}

TEST_CASE("tangent report decomposes over the block structure") {
    TangentReport t = tangent_dimension_report(embed_iota(fuchsian(2)));
    CHECK(t.adjoint.h1 == 18);
    CHECK(t.block_form);
    CHECK(t.h1_sl2_adjoint == 6);  // Teichmueller dimension 6g-6
    CHECK(t.h1_trivial == 4);      // 2g
    CHECK(t.h1_standard2 == 4);    // 4g-4
    CHECK(t.decomposition_consistent);
    CHECK(t.adjoint.paper_formula == "16g-14");
    CHECK(t.adjoint.agrees);

    TangentReport ti = tangent_dimension_report(sym2(fuchsian(2)));
    CHECK(ti.adjoint.h1 == 16);
    CHECK_FALSE(ti.block_form);
    CHECK(ti.adjoint.paper_formula == "16g-16");
    CHECK(ti.adjoint.agrees);

    TangentReport t3 = tangent_dimension_report(embed_iota(fuchsian(3)));
    CHECK(t3.adjoint.h1 == 34);
    CHECK(t3.decomposition_consistent);

    // twisted representations decompose the same way
    TangentReport tt = tangent_dimension_report(
        twist(embed_iota(fuchsian(2)), HomToZ2{{1, 1, 0, 1}}));
    CHECK(tt.adjoint.h1 == 18);
    CHECK(tt.block_form);
    CHECK(tt.decomposition_consistent);
}

TEST_CASE("report JSON carries the agreement flags") {
    std::string j = tangent_report_json(tangent_dimension_report(embed_iota(fuchsian(2))));
    CHECK(j.find("\"paper_formula\": \"16g-14\"") != std::string::npos);
    CHECK(j.find("\"agrees\": true") != std::string::npos);
    CHECK(j.find("\"consistent\": true") != std::string::npos);

    std::string jc = coeff_report_json(coefficient_report(trivial_action(1, 2)));
    CHECK(jc.find("\"paper_formula\": \"2g\"") != std::string::npos);
    CHECK(jc.find("\"h1\": 4") != std::string::npos);
}
