#pragma once

#include <cmath>
#include <span>

namespace wehrl {

// Value together with its derivative with respect to one parameter (here the
// exponent of a power function). Used to obtain divided differences of
// x^p ln x as the p-derivative of those of x^p.
struct Dual {
    double value{0.0};
    double slope{0.0};
};

inline Dual operator+(Dual a, Dual b) { return {a.value + b.value, a.slope + b.slope}; }
inline Dual operator-(Dual a, Dual b) { return {a.value - b.value, a.slope - b.slope}; }
inline Dual operator*(Dual a, Dual b) {
    return {a.value * b.value, a.slope * b.value + a.value * b.slope};
}
inline Dual operator/(Dual a, Dual b) {
    return {a.value / b.value, (a.slope * b.value - a.value * b.slope) / (b.value * b.value)};
}
inline Dual operator+(Dual a, double b) { return {a.value + b, a.slope}; }
inline Dual operator-(Dual a, double b) { return {a.value - b, a.slope}; }
inline Dual operator*(Dual a, double b) { return {a.value * b, a.slope * b}; }
inline Dual operator/(Dual a, double b) { return {a.value / b, a.slope / b}; }
inline Dual& operator+=(Dual& a, Dual b) { return a = a + b; }

namespace divdiff {

// Nodes closer than this fraction of the largest node are merged into one
// confluent node.
inline constexpr double kMergeTolerance = 1e-9;

// Divided difference f[z_0, ..., z_{k}] of f(x) = x^p over strictly positive
// nodes (any order, repeats allowed).
//
// The Newton table is built over the sorted, merged nodes. Each entry covering
// a tight node block (half-spread r <= 1/4 of its centre c, and
// (p - k + 1) r <= 2) is evaluated instead by the binomial series
//     c^{p-k} sum_{m>=k} binom(p, m) h_{m-k}((z - c) / c),
// where h_j is the complete homogeneous symmetric polynomial. That removes the
// cancellation of the plain recurrence at clustered nodes and reduces to the
// derivative value binom(p, k) c^{p-k} at coincident ones.
double power(std::span<const double> nodes, double p);
Dual power(std::span<const double> nodes, Dual p);

// Divided difference of x^p ln x.
double power_log(std::span<const double> nodes, double p);

// h_q(x), by the recurrence H[k][j] = H[k][j-1] + x_j H[k-1][j].
double complete_homogeneous(std::span<const double> x, unsigned long q);

} // namespace divdiff
} // namespace wehrl
