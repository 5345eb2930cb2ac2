#include "sl3lab/gf2.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <json.hpp>

namespace sl3lab {

namespace {

constexpr uint32_t EVEN_BITS = 0x55555555u; // a-coordinates
constexpr uint32_t ODD_BITS = 0xAAAAAAAAu;  // b-coordinates

uint32_t mask_n(int n) { return (n >= 32) ? ~0u : ((1u << n) - 1u); }

// swap a_k <-> b_k coordinates; realizes i(x, .) as a plain dot product
uint32_t swap_pairs(uint32_t v) { return ((v & EVEN_BITS) << 1) | ((v & ODD_BITS) >> 1); }

int parity(uint32_t v) { return std::popcount(v) & 1; }

void check_dim(int n) {
    if (n < 2 || n > 24 || (n & 1))
        throw Error(Err::InvalidArgument, "dimension must be even, 2..24");
}

} // namespace

std::string bits_to_string(uint32_t bits, int n) {
    std::string s;
    for (int i = 0; i < n; ++i) s += ((bits >> i) & 1) ? '1' : '0';
    return s;
}

uint32_t bits_from_string(const std::string& s) {
    uint32_t v = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            v |= (1u << i);
        else if (s[i] != '0')
            throw Error(Err::InvalidArgument, "bad bit string '" + s + "'");
    }
    return v;
}

int evaluate(const F2Functional& phi, const F2Vec& x) {
    if (phi.n != x.n) throw Error(Err::LengthMismatch, "functional/vector dimensions");
    return parity(phi.bits & x.bits);
}

int intersection_form(const F2Vec& x, const F2Vec& y) {
    if (x.n != y.n) throw Error(Err::LengthMismatch, "intersection form arguments");
    check_dim(x.n);
    return parity(x.bits & swap_pairs(y.bits) & mask_n(x.n));
}

F2Vec dehn_twist(const F2Vec& c, const F2Vec& x) {
    return F2Vec{intersection_form(x, c) ? (x.bits ^ c.bits) : x.bits, x.n};
}

F2Functional dual_twist_action(const F2Vec& c, const F2Functional& phi) {
    if (phi.n != c.n) throw Error(Err::LengthMismatch, "functional/twist dimensions");
    // (phi.D_c)(x) = phi(x) + i(x,c) phi(c); i(.,c) has coefficient vector
    // swap_pairs(c)
    if (parity(phi.bits & c.bits))
        return F2Functional{phi.bits ^ (swap_pairs(c.bits) & mask_n(c.n)), phi.n};
    return phi;
}

DPhi d_phi(const F2Functional& phi) {
    check_dim(phi.n);
    const uint32_t total = 1u << phi.n;
    std::vector<uint32_t> kernel;
    kernel.reserve(total / 2);
    for (uint32_t x = 1; x < total; ++x)
        if (!parity(phi.bits & x)) kernel.push_back(x);

    auto form = [&](uint32_t x, uint32_t y) { return parity(x & swap_pairs(y)); };

    // hyperbolic-pair extension: each found pair splits off a symplectic
    // plane; the orthogonal rest carries the remaining rank
    DPhi out;
    std::vector<uint32_t> work = std::move(kernel);
    for (;;) {
        uint32_t px = 0, py = 0;
        bool found = false;
        for (size_t i = 0; i < work.size() && !found; ++i)
            for (size_t j = i + 1; j < work.size(); ++j)
                if (form(work[i], work[j])) {
                    px = work[i];
                    py = work[j];
                    found = true;
                    break;
                }
        if (!found) break;
        out.value += 2;
        std::vector<uint32_t> next;
        next.reserve(work.size() / 4);
        for (uint32_t z : work)
            if (!form(z, px) && !form(z, py) && z != px && z != py) next.push_back(z);
        work = std::move(next);
    }
    return out;
}

F2Functional phi_d(int g, int d) {
    if (g < 1) throw Error(Err::InvalidArgument, "genus must be >= 1");
    if (d < 0 || d > 2 * g || (d & 1))
        throw Error(Err::IndexingUnsupported,
                    "d must be even in [0, 2g]; got " + std::to_string(d));
    int n = 2 * g;
    uint32_t ones = mask_n(n) & ~mask_n(d); // zeros on the first d/2 pairs
    return F2Functional{ones, n};
}

const Orbit* OrbitPartition::orbit_of(uint32_t functional_bits) const {
    for (const auto& o : orbits)
        if (std::binary_search(o.members.begin(), o.members.end(), functional_bits)) return &o;
    return nullptr;
}

OrbitPartition sp_orbits(int g) {
    if (g < 1 || g > 6) throw Error(Err::InvalidArgument, "sp_orbits supports 1 <= g <= 6");
    const int n = 2 * g;
    const uint32_t total = 1u << n;

    // twists along basis vectors and sums of two basis vectors; basis
    // twists alone can generate a proper subgroup
    std::vector<uint32_t> gens;
    for (int i = 0; i < n; ++i) gens.push_back(1u << i);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) gens.push_back((1u << i) | (1u << j));

    OrbitPartition part;
    part.g = g;
    std::vector<int> seen(total, 0);
    for (uint32_t start = 0; start < total; ++start) {
        if (seen[start]) continue;
        std::vector<uint32_t> members;
        std::vector<std::vector<uint32_t>> words_by_member;
        std::deque<std::pair<uint32_t, std::vector<uint32_t>>> queue;
        queue.emplace_back(start, std::vector<uint32_t>{});
        seen[start] = 1;
        while (!queue.empty()) {
            auto [cur, word] = std::move(queue.front());
            queue.pop_front();
            members.push_back(cur);
            words_by_member.push_back(word);
            for (uint32_t c : gens) {
                F2Functional img = dual_twist_action(F2Vec{c, n}, F2Functional{cur, n});
                if (!seen[img.bits]) {
                    seen[img.bits] = 1;
                    auto next_word = word;
                    next_word.push_back(c);
                    queue.emplace_back(img.bits, std::move(next_word));
                }
            }
        }
        Orbit orbit;
        orbit.min_element = start;
        std::vector<size_t> order(members.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](size_t a, size_t b) { return members[a] < members[b]; });
        for (size_t i : order) {
            orbit.members.push_back(members[i]);
            orbit.words.push_back(std::move(words_by_member[i]));
        }
        DPhi d = d_phi(F2Functional{start, n});
        orbit.d_phi_value = d.value;
        orbit.d_phi_exact = d.exact;
        part.orbits.push_back(std::move(orbit));
    }

    // partition property: disjoint and exhaustive by construction of seen[],
    // re-checked here together with generator closure
    size_t covered = 0;
    for (const auto& o : part.orbits) {
        covered += o.members.size();
        for (uint32_t m : o.members)
            for (uint32_t c : gens) {
                F2Functional img = dual_twist_action(F2Vec{c, n}, F2Functional{m, n});
                if (!std::binary_search(o.members.begin(), o.members.end(), img.bits))
                    throw Error(Err::InvalidArgument, "orbit not closed under generators");
            }
    }
    if (covered != total)
        throw Error(Err::InvalidArgument, "orbits do not partition the functionals");
    return part;
}

PaperReduction reduce_by_paper_procedure(const F2Functional& phi) {
    check_dim(phi.n);
    const int g = phi.n / 2;
    PaperReduction red;
    F2Functional cur = phi;
    for (int k = 0; k < g; ++k) {
        int va = (cur.bits >> (2 * k)) & 1;
        int vb = (cur.bits >> (2 * k + 1)) & 1;
        if (va == vb) continue;
        // mixed pair: twist along the basis vector carrying value 1, which
        // saturates the pair to (1,1)
        uint32_t c = (vb == 1) ? (1u << (2 * k + 1)) : (1u << (2 * k));
        cur = dual_twist_action(F2Vec{c, phi.n}, cur);
        red.word.push_back(c);
    }
    red.endpoint = cur;

    OrbitPartition part = sp_orbits(g);
    const Orbit* o = part.orbit_of(phi.bits);
    red.endpoint_in_input_orbit =
        o && std::binary_search(o->members.begin(), o->members.end(), cur.bits);
    red.endpoint_matches_phi_d = (cur.bits == phi_d(g, d_phi(phi).value).bits);
    return red;
}

std::string orbit_report_json(const OrbitPartition& part) {
    nlohmann::ordered_json j;
    j["g"] = part.g;
    j["orbit_count"] = part.orbits.size();
    nlohmann::ordered_json orbits = nlohmann::ordered_json::array();
    for (const auto& o : part.orbits) {
        orbits.push_back({{"size", o.members.size()},
                          {"d_phi", o.d_phi_value},
                          {"d_phi_exact", o.d_phi_exact},
                          {"min_element", bits_to_string(o.min_element, 2 * part.g)}});
    }
    j["orbits"] = orbits;
    j["paper_claim_g_plus_1"] = part.g + 1;
    j["agrees_with_paper"] = (part.orbits.size() == static_cast<size_t>(part.g + 1));
    j["phi_d_indexing"] = "d/2-pairs";
    return j.dump(2) + "\n";
}

} // namespace sl3lab
