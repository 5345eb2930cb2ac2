// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Each criterion pins its tolerances in code; nothing is deferred to
// configuration.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "sl3lab/boundary.hpp"
#include "sl3lab/cohomology.hpp"
#include "sl3lab/gf2.hpp"
#include "sl3lab/representation.hpp"

using namespace sl3lab;

namespace {

int failures = 0;
int current = 0;
std::vector<std::string> notes;

void note(const std::string& s) { notes.push_back(s); }

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

void criterion(const char* description, const std::function<bool()>& body) {
    ++current;
    notes.clear();
    bool ok = false;
    std::string error;
    try {
        ok = body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    if (!ok) ++failures;
    std::printf("%s criterion %d: %s", ok ? "PASS" : "FAIL", current, description);
    if (!error.empty()) std::printf(" [exception: %s]", error.c_str());
    for (const auto& n : notes) std::printf(" [%s]", n.c_str());
    std::printf("\n");
    std::fflush(stdout);
}

HomToZ2 phi_from_mask(unsigned mask, int n) {
    HomToZ2 phi;
    for (int i = 0; i < n; ++i) phi.bits.push_back((mask >> i) & 1u);
    return phi;
}

} // namespace

int main() {
    // 1. Fuchsian relator residual, g = 2 and 3, Frobenius norm after
    //    extended-precision accumulation.
    criterion("fuchsian relator residual < 1e-8 for g in {2,3}", [] {
        bool ok = true;
        for (int g : {2, 3}) {
            Representation r = fuchsian(g);
            note("g=" + std::to_string(g) + " residual=" + sci(r.relation_residual));
            ok = ok && r.relation_residual < 1e-8;
            for (const auto& m : r.images) ok = ok && m.trace() > 2.0;
        }
        return ok;
    });

    // 2. The 16 twists of iota(fuchsian(2)) realize 16 distinct signatures,
    //    each equal to its phi, exact bit equality.
    criterion("16 twists yield 16 distinct signatures, each equal to phi", [] {
        Representation rho0 = embed_iota(fuchsian(2));
        std::set<std::vector<int>> seen;
        bool ok = true;
        for (unsigned mask = 0; mask < 16; ++mask) {
            HomToZ2 phi = phi_from_mask(mask, 4);
            SignSignature sig = f_invariant(twist(rho0, phi));
            ok = ok && (sig.bits == phi.bits);
            seen.insert(sig.bits);
        }
        note("distinct signatures: " + std::to_string(seen.size()));
        return ok && seen.size() == 16;
    });

    // 3. Spectral certificates over the full ball L = 3; the trivial
    //    representation fails already at L = 1.
    criterion("spectral certificates at L=3 (iota, sym2); trivial fails at L=1", [] {
        Representation base = fuchsian(2);
        SpectralScan s1 = anosov_spectral_certificate(embed_iota(base), 3);
        SpectralScan s2 = anosov_spectral_certificate(sym2(base), 3);
        Representation triv;
        triv.genus = 2;
        triv.rank = 3;
        for (int k = 0; k < 4; ++k) triv.images.push_back(Eigen::MatrixXd::Identity(3, 3));
        SpectralScan s3 = anosov_spectral_certificate(triv, 1);
        note("iota words=" + std::to_string(s1.words_checked));
        if (!s3.certified) note("trivial counterexample=" + word_to_string(s3.counterexample));
        return s1.certified && s2.certified && !s3.certified;
    });

    // 4. Shared boundary map: every twist stays within 1e-8 of rho0 at
    //    L = 5; the symmetric square is farther than 0.1.
    criterion("boundary maps: twists within 1e-8 at L=5, sym2 beyond 0.1", [] {
        Representation base = fuchsian(2);
        Representation rho0 = embed_iota(base);
        SampledBoundaryMap m0 = sample_boundary(rho0, base, 5);
        note("samples=" + std::to_string(m0.entries.size()));
        bool ok = true;
        double worst = 0.0;
        for (unsigned mask = 1; mask < 16; ++mask) {
            Representation t = twist(rho0, phi_from_mask(mask, 4));
            BoundaryComparison c = boundary_distance(m0, sample_boundary(t, base, 5));
            worst = std::max(worst, c.distance);
            ok = ok && c.distance < 1e-8;
        }
        note("worst twist distance=" + sci(worst));
        BoundaryComparison cs = boundary_distance(m0, sample_boundary(sym2(base), base, 5));
        note("sym2 distance=" + sci(cs.distance));
        return ok && cs.distance > 0.1;
    });

    // 5. Theorem roundtrip: 20 random radial deformations recover lambda to
    //    relative 1e-6 with hom_residual < 1e-6; sym2 input is NotReducible.
    criterion("radial deformation roundtrip recovers lambda (20 random draws)", [] {
        std::mt19937_64 rng(2026);
        std::uniform_real_distribution<double> logu(std::log(0.25), std::log(4.0));
        Representation rho_std = embed_iota(fuchsian(2));
        bool ok = true;
        double worst_rel = 0.0, worst_hom = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            Mat3 a = random_unimodular3(rng, 100.0); // condition number < 100
            Representation rho1 = rho_std;
            for (auto& m : rho1.images) m = a.inverse() * m * a;
            HomToRStar lam;
            for (int k = 0; k < 4; ++k) lam.values.push_back(std::exp(logu(rng)));
            Representation rho2 = radial_deform(rho1, lam, a);
            LambdaExtraction got = extract_lambda(rho1, rho2);
            for (int k = 0; k < 4; ++k) {
                double rel = std::abs(got.lambda.values[k] - lam.values[k]) /
                             std::abs(lam.values[k]);
                worst_rel = std::max(worst_rel, rel);
                ok = ok && rel < 1e-6;
            }
            worst_hom = std::max(worst_hom, got.hom_residual);
            ok = ok && got.hom_residual < 1e-6;
        }
        note("worst relative error=" + sci(worst_rel));
        note("worst hom residual=" + sci(worst_hom));
        bool not_reducible = false;
        try {
            extract_lambda(sym2(fuchsian(2)), rho_std);
        } catch (const Error& e) {
            not_reducible = (e.code() == Err::NotReducible);
        }
        return ok && not_reducible;
    });

    // 6. Flag-triple classification: the four printed normal forms, 50
    //    random projective images each, X = 2 recovery, stabilizer law.
    criterion("triple classification, X recovery, one-parameter stabilizer", [] {
        std::mt19937_64 rng(5081);
        const TripleTag tags[] = {TripleTag::Generic, TripleTag::PointCollinear,
                                  TripleTag::LineConcurrent, TripleTag::DoublyDegenerate};
        bool ok = true;
        for (TripleTag tag : tags) {
            auto t = normal_form_triple(tag, 2.0);
            TripleClass own = classify_triple(t[0], t[1], t[2]);
            ok = ok && own.tag == tag;
            for (int trial = 0; trial < 50; ++trial) {
                Mat3 a = random_unimodular3(rng, 1e3);
                TripleClass c =
                    classify_triple(apply(a, t[0]), apply(a, t[1]), apply(a, t[2]));
                ok = ok && c.tag == tag;
                if (tag == TripleTag::Generic) ok = ok && std::abs(c.x - 2.0) < 1e-6;
                StabilizerType s = stabilizer_type(c);
                ok = ok && (s.one_parameter == (tag == TripleTag::DoublyDegenerate));
                if (s.one_parameter) {
                    Mat3 el = s.element(3.0);
                    for (int i = 0; i < 3; ++i)
                        ok = ok && flag_distance(apply(el, apply(a, t[i])), apply(a, t[i])) <
                                       1e-7;
                }
            }
        }
        return ok;
    });

    // 7. Cohomology dimensions for g in {2,3}, integer exact, with the
    //    rank-decision spectral gap above 1e3.
    criterion("cohomology dimensions 2g, 4g-4, 16g-14, 16g-16 with gap > 1e3", [] {
        bool ok = true;
        for (int g : {2, 3}) {
            Representation base = fuchsian(g);
            HDims triv = h_dimensions(build_complex(trivial_action(1, g)));
            ok = ok && triv.h1 == 2 * g;

            HDims std2 = h_dimensions(build_complex(standard2_action(base)));
            ok = ok && std2.h1 == 4 * g - 4 && std2.h0 == 0 && std2.spectral_gap > 1e3;

            HDims red = h_dimensions(build_complex(adjoint3_action(embed_iota(base))));
            ok = ok && red.h1 == 16 * g - 14 && red.spectral_gap > 1e3;

            HDims irr = h_dimensions(build_complex(adjoint3_action(sym2(base))));
            ok = ok && irr.h1 == 16 * g - 16 && irr.spectral_gap > 1e3;

            note("g=" + std::to_string(g) + " h1=[" + std::to_string(triv.h1) + "," +
                 std::to_string(std2.h1) + "," + std::to_string(red.h1) + "," +
                 std::to_string(irr.h1) + "]");
        }
        return ok;
    });

    // 8. Mod-2 orbit machinery: exhaustive BFS oracle; the report records
    //    agreement with the predicted count without assuming it.
    criterion("mod-2 orbits: g=1 sizes {1,3}; partitions verified; claim recorded", [] {
        OrbitPartition p1 = sp_orbits(1);
        bool ok = p1.orbits.size() == 2;
        std::multiset<size_t> sizes;
        for (const auto& o : p1.orbits) sizes.insert(o.members.size());
        ok = ok && sizes == std::multiset<size_t>{1, 3};
        for (int g : {2, 3}) {
            OrbitPartition part = sp_orbits(g); // partition/closure asserted internally
            size_t total = 0;
            for (const auto& o : part.orbits) {
                total += o.members.size();
                for (uint32_t m : o.members)
                    ok = ok && d_phi(F2Functional{m, 2 * g}).value == o.d_phi_value;
            }
            ok = ok && total == (1u << (2 * g));
            note("g=" + std::to_string(g) + " orbits=" + std::to_string(part.orbits.size()) +
                 " paper=" + std::to_string(g + 1) +
                 (part.orbits.size() == static_cast<size_t>(g + 1) ? " (agrees)"
                                                                   : " (disagrees)"));
            std::mt19937_64 rng(90 + g);
            std::uniform_int_distribution<uint32_t> dist(0, (1u << (2 * g)) - 1);
            for (int trial = 0; trial < 30; ++trial) {
                PaperReduction r = reduce_by_paper_procedure(F2Functional{dist(rng), 2 * g});
                ok = ok && r.endpoint_in_input_orbit;
            }
        }
        return ok;
    });

    // 9. Property suites: Fox identity, eigen residuals, exhaustive form
    //    preservation, involution and idempotence laws.
    criterion("property suites: fox identity, eigen residuals, involutions", [] {
        bool ok = true;

        // Fox fundamental identity on 100 random words
        std::mt19937_64 rng(99);
        Presentation p(2);
        std::uniform_int_distribution<int> len_dist(0, 6), letter_dist(0, 7);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Letter> raw;
            int len = len_dist(rng);
            for (int i = 0; i < len; ++i) raw.push_back(static_cast<Letter>(letter_dist(rng)));
            Word w = reduce(raw);
            FoxExpression lhs;
            for (int gen = 0; gen < 4; ++gen) {
                FoxExpression dw = fox_derivative(w, gen);
                Word x;
                x.letters.push_back(make_letter(gen, false));
                FoxExpression shifted = ring_mul_word_right(dw, x);
                for (const auto& [t, c] : dw.terms) shifted.add(t, -c);
                lhs = ring_add(lhs, shifted);
            }
            FoxExpression rhs;
            rhs.add(w, 1);
            rhs.add(Word{}, -1);
            ok = ok && (lhs == rhs);
        }

        // eigen residuals on 1000 random unimodular matrices that do not
        // error out of the real-distinct contract
        int eigen_checked = 0, eigen_drawn = 0;
        while (eigen_checked < 1000) {
            Mat3 m = random_unimodular3(rng);
            ++eigen_drawn;
            try {
                EigenTriple e = eigen_real_3(m);
                for (int k = 0; k < 3; ++k)
                    ok = ok && (m * e.vectors[k] - e.values[k] * e.vectors[k]).norm() <=
                                   1e-7 * std::max(1.0, m.norm());
                ++eigen_checked;
            } catch (const Error&) {
                // complex or repeated spectrum: outside the residual contract
            }
        }
        note("eigen draws=" + std::to_string(eigen_drawn));

        // dehn twist form preservation, exhaustive for g = 2
        for (uint32_t c = 0; c < 16 && ok; ++c)
            for (uint32_t x = 0; x < 16 && ok; ++x)
                for (uint32_t y = 0; y < 16; ++y) {
                    F2Vec vc{c, 4}, vx{x, 4}, vy{y, 4};
                    if (intersection_form(dehn_twist(vc, vx), dehn_twist(vc, vy)) !=
                        intersection_form(vx, vy)) {
                        ok = false;
                        break;
                    }
                }

        // involution and idempotence laws
        Mat3 j = j13();
        ok = ok && (j * j - Mat3::Identity()).norm() == 0.0;
        Representation rho0 = embed_iota(fuchsian(2));
        HomToZ2 phi = phi_from_mask(0b1011, 4);
        Representation tw2 = twist(twist(rho0, phi), phi);
        for (int k = 0; k < 4; ++k)
            ok = ok && (tw2.images[k] - rho0.images[k]).norm() == 0.0;

        Flag fl = make_flag(Vec3(0.3, -0.7, 0.2), Vec3(0.3, -0.7, 0.2).cross(Vec3(1, 1, 1)));
        Flag ss = involution_s(involution_s(fl));
        ok = ok && (ss.point.v - fl.point.v).norm() == 0.0 &&
             (ss.line.v - fl.line.v).norm() == 0.0;

        for (int i = 0; i < 50; ++i) {
            Mat3 m = random_unimodular3(rng);
            ok = ok && proj_distance(sl_normalize(m), sl_normalize(sl_normalize(m))) <
                           default_tol().det;
        }
        return ok;
    });

    std::printf("%d/%d criteria passed\n", current - failures, current);
    return failures == 0 ? 0 : 1;
}
