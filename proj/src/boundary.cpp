#include "sl3lab/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace sl3lab {

double attracting_theta(const Mat2& m, const Tolerances& tol) {
    if (std::abs(m.trace()) <= 2.0 + tol.hyp)
        throw Error(Err::NotProximal, "2x2 element is not hyperbolic");
    EigenPair2 e = eigen_real_2(m, tol.eig);
    int k = std::abs(e.values[0]) >= std::abs(e.values[1]) ? 0 : 1;
    double v0 = e.vectors[k](0), v1 = e.vectors[k](1);
    // fixed point v0/v1 on the real boundary of the half-plane, sent to the
    // circle by the Cayley map x -> (x - i)/(x + i)
    double theta = std::atan2(-2.0 * v0 * v1, v0 * v0 - v1 * v1);
    if (theta < 0.0) theta += 2.0 * M_PI;
    if (theta >= 2.0 * M_PI) theta = 0.0;
    return theta;
}

const BoundaryEntry* SampledBoundaryMap::find_theta(double t, double half_width) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), t - half_width,
                               [](const BoundaryEntry& e, double v) { return e.theta < v; });
    if (it != entries.end() && std::abs(it->theta - t) <= half_width) return &*it;
    return nullptr;
}

SampledBoundaryMap sample_boundary(const Representation& rho3, const Representation& base,
                                   int radius, const Tolerances& tol) {
    if (rho3.rank != 3 || base.rank != 2)
        throw Error(Err::InvalidArgument, "sample_boundary expects a rank-3/rank-2 pair");
    if (rho3.genus != base.genus)
        throw Error(Err::InvalidArgument, "representations must share the genus");

    Evaluator eval3(rho3), eval2(base);
    SampledBoundaryMap out;
    std::vector<BoundaryEntry> raw;
    for (const Word& w : free_ball(base.presentation(), radius)) {
        if (w.empty()) continue;
        double theta;
        try {
            theta = attracting_theta(Mat2(eval2(w)), tol);
        } catch (const Error&) {
            ++out.skipped_nonhyperbolic;
            continue;
        }
        try {
            raw.push_back(BoundaryEntry{w, theta, attracting_flag(Mat3(eval3(w)), tol)});
        } catch (const Error&) {
            ++out.skipped_nonproximal;
        }
    }

    std::sort(raw.begin(), raw.end(), [](const BoundaryEntry& a, const BoundaryEntry& b) {
        if (a.theta != b.theta) return a.theta < b.theta;
        return a.word < b.word;
    });

    // merge theta clusters; keep the longest word, shortlex-smallest on ties
    for (auto& e : raw) {
        if (!out.entries.empty() && e.theta - out.entries.back().theta <= tol.theta) {
            ++out.merged_duplicates;
            BoundaryEntry& kept = out.entries.back();
            bool longer = e.word.length() > kept.word.length();
            if (longer) kept = std::move(e);
        } else {
            out.entries.push_back(std::move(e));
        }
    }
    return out;
}

BoundaryComparison boundary_distance(const SampledBoundaryMap& a, const SampledBoundaryMap& b,
                                     const Tolerances& tol) {
    BoundaryComparison cmp;
    size_t i = 0, j = 0;
    while (i < a.entries.size() && j < b.entries.size()) {
        double da = a.entries[i].theta, db = b.entries[j].theta;
        if (std::abs(da - db) <= tol.theta) {
            cmp.distance = std::max(cmp.distance,
                                    flag_distance(a.entries[i].flag, b.entries[j].flag));
            ++cmp.matched;
            ++i;
            ++j;
        } else if (da < db) {
            ++cmp.unmatched;
            ++i;
        } else {
            ++cmp.unmatched;
            ++j;
        }
    }
    cmp.unmatched += static_cast<int>((a.entries.size() - i) + (b.entries.size() - j));
    if (cmp.matched < 10)
        throw Error(Err::NoOverlap, "only " + std::to_string(cmp.matched) + " matched thetas");
    return cmp;
}

std::string boundary_to_csv(const SampledBoundaryMap& map) {
    std::string out = "word,theta,p1,p2,p3,l1,l2,l3\n";
    char buf[64];
    auto put = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out += buf;
    };
    for (const auto& e : map.entries) {
        out += word_to_string(e.word);
        out += ',';
        put(e.theta);
        for (int i = 0; i < 3; ++i) {
            out += ',';
            put(e.flag.point.v(i));
        }
        for (int i = 0; i < 3; ++i) {
            out += ',';
            put(e.flag.line.v(i));
        }
        out += '\n';
    }
    return out;
}

void save_boundary_csv(const std::string& path, const SampledBoundaryMap& map) {
    std::ofstream os(path);
    if (!os) throw Error(Err::Io, "cannot open " + path + " for writing");
    os << boundary_to_csv(map);
    if (!os) throw Error(Err::Io, "write failed: " + path);
}

} // namespace sl3lab
