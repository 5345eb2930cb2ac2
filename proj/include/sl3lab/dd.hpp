#pragma once

#include <cmath>
#include <vector>

namespace sl3lab {

/// Double-double value (~31 significant digits). Only the handful of
/// operations needed to accumulate relator products without roundoff:
/// add, sub, mul, div. Error-free transforms via fma.
struct DD {
    double hi = 0.0;
    double lo = 0.0;

    DD() = default;
    DD(double h) : hi(h), lo(0.0) {}
    DD(double h, double l) : hi(h), lo(l) {}

    double value() const { return hi + lo; }
};

namespace detail {
inline DD two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}
inline DD quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}
inline DD two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}
} // namespace detail

inline DD dd_add(DD a, DD b) {
    DD s = detail::two_sum(a.hi, b.hi);
    double lo = s.lo + a.lo + b.lo;
    return detail::quick_two_sum(s.hi, lo);
}

inline DD dd_sub(DD a, DD b) { return dd_add(a, DD{-b.hi, -b.lo}); }

inline DD dd_mul(DD a, DD b) {
    DD p = detail::two_prod(a.hi, b.hi);
    double lo = p.lo + a.hi * b.lo + a.lo * b.hi;
    return detail::quick_two_sum(p.hi, lo);
}

inline DD dd_div(DD a, DD b) {
    double q0 = a.hi / b.hi;
    DD r = dd_sub(a, dd_mul(DD{q0}, b));
    double q1 = r.hi / b.hi;
    DD r2 = dd_sub(r, dd_mul(DD{q1}, b));
    double q2 = r2.hi / b.hi;
    return dd_add(detail::quick_two_sum(q0, q1), DD{q2});
}

/// Dense row-major double-double matrix, square, small (n = 2 or 3).
struct DDMat {
    int n = 0;
    std::vector<DD> a;

    explicit DDMat(int dim) : n(dim), a(static_cast<size_t>(dim) * dim) {}
    DD& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    const DD& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

    static DDMat identity(int dim) {
        DDMat m(dim);
        for (int i = 0; i < dim; ++i) m.at(i, i) = DD{1.0};
        return m;
    }
};

inline DDMat dd_matmul(const DDMat& x, const DDMat& y) {
    DDMat z(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j) {
            DD acc{0.0};
            for (int k = 0; k < x.n; ++k) acc = dd_add(acc, dd_mul(x.at(i, k), y.at(k, j)));
            z.at(i, j) = acc;
        }
    return z;
}

/// Inverse by adjugate over double-double; fine for n <= 3 with det ~ 1.
DDMat dd_inverse(const DDMat& m);

/// Frobenius distance to the identity, rounded back to double.
double dd_dist_to_identity(const DDMat& m);

} // namespace sl3lab
