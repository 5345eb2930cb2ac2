#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sl3lab/errors.hpp"

namespace sl3lab {

/// Bit-packed vector over F_2 with coordinates a1,b1,...,ag,bg: bit 2k is
/// a_{k+1}, bit 2k+1 is b_{k+1}. One machine word covers every supported g.
struct F2Vec {
    uint32_t bits = 0;
    int n = 0; // 2g

    bool operator==(const F2Vec& o) const { return bits == o.bits && n == o.n; }
};

/// Element of Hom(H_1; Z/2) stored by its values on the standard basis.
struct F2Functional {
    uint32_t bits = 0;
    int n = 0;

    bool operator==(const F2Functional& o) const { return bits == o.bits && n == o.n; }
};

std::string bits_to_string(uint32_t bits, int n); // "0101", a1 first
uint32_t bits_from_string(const std::string& s);

int evaluate(const F2Functional& phi, const F2Vec& x);

/// Standard symplectic pairing: sum_k x_{a_k} y_{b_k} + x_{b_k} y_{a_k}.
int intersection_form(const F2Vec& x, const F2Vec& y);

/// Transvection x -> x + i(x,c) c (mod-2 Dehn twist along c).
F2Vec dehn_twist(const F2Vec& c, const F2Vec& x);

/// Pullback action on functionals: (phi . D_c)(x) = phi(D_c(x)).
F2Functional dual_twist_action(const F2Vec& c, const F2Functional& phi);

/// Largest dimension of a subspace of ker(phi) on which the intersection
/// form is nondegenerate, by exhaustive hyperbolic-pair extension. The
/// extension step is exact (Witt), so no randomized fallback is needed at
/// any supported genus; `exact` reports that.
struct DPhi {
    int value = 0;
    bool exact = true;
};
DPhi d_phi(const F2Functional& phi);

/// Functional vanishing on the first d/2 hyperbolic pairs and equal to 1
/// on the remaining basis vectors (the d/2-pairs reading of the indexing).
F2Functional phi_d(int g, int d);

struct Orbit {
    std::vector<uint32_t> members;                 // sorted functional bit masks
    std::vector<std::vector<uint32_t>> words;      // transvection vectors from min_element
    uint32_t min_element = 0;
    int d_phi_value = 0;
    bool d_phi_exact = true;
};

struct OrbitPartition {
    int g = 0;
    std::vector<Orbit> orbits; // ordered by min element

    const Orbit* orbit_of(uint32_t functional_bits) const;
};

/// BFS closure of every functional under the dual transvection action for
/// twists along basis vectors and sums of two basis vectors. Asserts the
/// partition and closure properties before returning.
OrbitPartition sp_orbits(int g);

struct PaperReduction {
    std::vector<uint32_t> word; // twist vectors applied, in order
    F2Functional endpoint;
    bool endpoint_in_input_orbit = false;
    bool endpoint_matches_phi_d = false; // discrepancy flag when false
};

/// The Lemma-style pairwise reduction: every hyperbolic pair with mixed
/// values is saturated to (1,1) by one twist. Membership and phi_d
/// agreement are recorded as data, not enforced.
PaperReduction reduce_by_paper_procedure(const F2Functional& phi);

/// JSON orbit report, including agreement with the predicted g+1 count.
std::string orbit_report_json(const OrbitPartition& part);

} // namespace sl3lab
