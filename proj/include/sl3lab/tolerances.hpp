#pragma once

namespace sl3lab {

/// All numerical thresholds in one place. Values are relative unless a
/// comment says otherwise. Defaults leave double-precision headroom for
/// products of ~10 matrices; every CLI entry point can override them.
struct Tolerances {
    double det = 1e-9;     // |det - 1| for unimodular tags
    double sing = 1e-12;   // |det| below this counts as singular
    double eig = 1e-7;     // eigenvalue separation, relative to spectral scale
    double resid = 1e-7;   // eigenpair residual ||Mv - lv|| / ||M||
    double rank = 1e-8;    // singular-value cutoff relative to sigma_max
    double rel = 1e-8;     // relator residual for verified representations
    double comm = 1e-8;    // commutation-with-J13 test, relative
    double inv = 1e-6;     // common-eigenvector invariance residual
    double diag = 1e-6;    // diag(l, 1/l^2, l) shape residual
    double inc = 1e-8;     // flag incidence / collinearity, absolute on unit data
    double inc_warn = 1e-6; // upper end of the ambiguous classification band
    double trans = 1e-8;   // transversality pairing threshold, absolute
    double nf = 1e-7;      // normal-form roundtrip distance
    double x_excl = 1e-6;  // distance of generic X from {0,-1}
    double theta = 1e-9;   // circle-parameter dedup/matching half-width
    double exact = 1e-7;   // ||d2*d1|| exactness bound, relative
    double hyp = 1e-9;     // |trace|-2 margin for hyperbolic 2x2 elements
    double domain = 1e-8;  // standard-domain membership margin, absolute
};

inline const Tolerances& default_tol() {
    static const Tolerances t{};
    return t;
}

} // namespace sl3lab
