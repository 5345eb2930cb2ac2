#pragma once

#include "sl3lab/flags.hpp"
#include "sl3lab/representation.hpp"

namespace sl3lab {

struct BoundaryEntry {
    Word word;
    double theta; // attracting fixed point of the base action, in [0, 2pi)
    Flag flag;
};

/// Finite sample of the equivariant boundary map, indexed by the circle
/// parameter of the underlying Fuchsian action. Entries sorted by theta,
/// strictly increasing after deduplication.
struct SampledBoundaryMap {
    std::vector<BoundaryEntry> entries;
    int skipped_nonhyperbolic = 0; // base image not hyperbolic
    int skipped_nonproximal = 0;   // rank-3 image without an attracting flag
    int merged_duplicates = 0;

    /// Entry whose theta lies within half_width of t, or nullptr.
    const BoundaryEntry* find_theta(double t, double half_width) const;
};

/// Attracting fixed point of a hyperbolic 2x2 action on the boundary
/// circle of the disk model. Throws NotProximal for |trace| <= 2.
double attracting_theta(const Mat2& m, const Tolerances& tol = default_tol());

/// For each nonempty word in the radius-L enumeration whose base image is
/// hyperbolic: theta from the base, flag from the rank-3 image. Duplicate
/// thetas (within tol.theta) keep the longest word's flag.
SampledBoundaryMap sample_boundary(const Representation& rho3, const Representation& base,
                                   int radius, const Tolerances& tol = default_tol());

struct BoundaryComparison {
    double distance = 0.0; // max flag distance over matched thetas
    int matched = 0;
    int unmatched = 0;
};

/// Requires matched sampling (same base and radius); NoOverlap when fewer
/// than 10 thetas match.
BoundaryComparison boundary_distance(const SampledBoundaryMap& a, const SampledBoundaryMap& b,
                                     const Tolerances& tol = default_tol());

/// CSV with header word,theta,p1,p2,p3,l1,l2,l3, 17 significant digits.
std::string boundary_to_csv(const SampledBoundaryMap& map);
void save_boundary_csv(const std::string& path, const SampledBoundaryMap& map);

} // namespace sl3lab
