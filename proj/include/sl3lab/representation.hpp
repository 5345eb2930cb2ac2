#pragma once

#include <string>
#include <vector>

#include "sl3lab/eigen_real.hpp"
#include "sl3lab/words.hpp"

namespace sl3lab {

/// Homomorphism pi_1 -> Z/2, one bit per standard generator. Any bit
/// pattern extends: the target is abelian and the relator is a product
/// of commutators.
struct HomToZ2 {
    std::vector<int> bits;
};

/// Homomorphism pi_1 -> R \ {0}, one nonzero value per standard generator.
struct HomToRStar {
    std::vector<double> values;
};

/// F-invariant on the standard generators: bit k is 0 iff the k-th
/// generator image lies in sign class A0.
struct SignSignature {
    std::vector<int> bits;

    bool operator==(const SignSignature& o) const { return bits == o.bits; }
    bool operator<(const SignSignature& o) const { return bits < o.bits; }
};

struct Representation {
    int genus = 0;
    int rank = 0; // 2 or 3
    std::vector<Eigen::MatrixXd> images; // one per standard generator a1,b1,...
    double relation_residual = 0.0;
    std::string construction;

    Presentation presentation() const { return Presentation(genus); }
};

inline Mat3 j13() {
    Mat3 j = Mat3::Identity();
    j(0, 0) = -1.0;
    j(2, 2) = -1.0;
    return j;
}

/// Word evaluation with cached generator inverses.
class Evaluator {
public:
    explicit Evaluator(const Representation& rep);
    Eigen::MatrixXd operator()(const Word& w) const;

private:
    const Representation* rep_;
    std::vector<Eigen::MatrixXd> inv_;
};

Eigen::MatrixXd evaluate(const Representation& rep, const Word& w);

/// Relator residual ||prod [A_i,B_i] - I||_F, accumulated in double-double
/// so the bound stays meaningful for products of 8-12 matrices.
double relation_residual_dd(const Representation& rep);

/// Monodromy of the hyperbolic structure from the regular 4g-gon with
/// vertex angle 2pi/4g: side-pairing isometries of the commutator edge
/// labeling, as SL(2,R) matrices, each sign-normalized to trace > 2.
Representation fuchsian(int genus, const Tolerances& tol = default_tol());

/// Block embedding SL(2) -> SL(3) acting on span(e1,e3) and fixing e2.
Representation embed_iota(const Representation& rep2);

/// Symmetric-square (irreducible) embedding on the basis x^2, xy, y^2.
Representation sym2(const Representation& rep2);

/// rho_phi(gen_k) = rho(gen_k) * J13^bits[k]; requires every image to
/// commute with J13 (block form) within tol.comm.
Representation twist(const Representation& rep3, const HomToZ2& phi,
                     const Tolerances& tol = default_tol());

/// gen_k -> A^-1 diag(l_k, 1/l_k^2, l_k) (A rho(gen_k) A^-1) A; requires
/// A rho A^-1 block-form within tol.comm and all l_k nonzero.
Representation radial_deform(const Representation& rep3, const HomToRStar& lambda,
                             const Mat3& conj, const Tolerances& tol = default_tol());

/// Throws NotCertified (wrapping the eigen failure and the offending
/// generator) when some generator image lacks three distinct real
/// eigenvalues.
SignSignature f_invariant(const Representation& rep3, const Tolerances& tol = default_tol());

/// Scan of the word ball: certified iff every nonempty word evaluates to a
/// matrix with three distinct real eigenvalues. Radii beyond the
/// free-equality horizon re-scan repeated group elements, which is
/// harmless for a forall-check.
struct SpectralScan {
    bool certified = false;
    Word counterexample; // first failing word in enumeration order
    size_t words_checked = 0;
};
SpectralScan anosov_spectral_certificate(const Representation& rep3, int radius,
                                         const Tolerances& tol = default_tol());

struct ReducibilityWitness {
    Mat3 conjugator;           // sends the common eigenvector to e2, the
                               // invariant line to the annihilator of e2
    Representation sl2_factor; // extracted 2x2 block, det-normalized
    double residual = 0.0;     // worst off-block magnitude after conjugation
};

struct ReducibilityResult {
    bool reducible = false;
    ReducibilityWitness witness; // valid iff reducible
    std::string diagnostic;      // populated for the Irreducible outcome
};

ReducibilityResult detect_reducible(const Representation& rep3,
                                    const Tolerances& tol = default_tol());

struct LambdaExtraction {
    HomToRStar lambda;
    double hom_residual = 0.0;
    Mat3 conjugator;
};

/// Reads l_k from entry (1,1) of A rho1(gen_k)^-1 rho2(gen_k) A^-1 after
/// validating the diag(l, 1/l^2, l) shape; hom_residual is the worst
/// multiplicativity defect over all ordered generator pairs.
LambdaExtraction extract_lambda(const Representation& rho1, const Representation& rho2,
                                const Tolerances& tol = default_tol());

/// JSON file round trip; doubles are written with 17 significant digits so
/// write -> read reproduces bit-identical values.
std::string representation_to_json(const Representation& rep);
Representation representation_from_json(const std::string& text);
void save_representation(const std::string& path, const Representation& rep);
Representation load_representation(const std::string& path);

} // namespace sl3lab
