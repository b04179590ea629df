#include <wehrl/divided_difference.hpp>

#include <wehrl/errors.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

namespace wehrl::divdiff {

namespace {

constexpr double kTaylorMaxSpread = 0.25;
constexpr double kTaylorMaxGrowth = 2.0;
constexpr int kTaylorMaxTerms = 4000;

double magnitude(double x) { return std::abs(x); }
double magnitude(Dual x) { return std::abs(x.value) + std::abs(x.slope); }
double value_of(double x) { return x; }
double value_of(Dual x) { return x.value; }

double pow_node(double x, double p) { return std::pow(x, p); }
Dual pow_node(double x, Dual p) {
    const double v = std::pow(x, p.value);
    return {v, v * std::log(x) * p.slope};
}

// binom(p, k) for real (or dual) p.
template <class T>
T binomial(T p, int k) {
    T b = T{1.0};
    for (int i = 0; i < k; ++i) {
        b = b * (p - static_cast<double>(i)) / static_cast<double>(i + 1);
    }
    return b;
}

template <class T>
T taylor_block(std::span<const double> z, T p) {
    const int k = static_cast<int>(z.size()) - 1;
    const double c = 0.5 * (z.front() + z.back());
    std::vector<double> t(z.size());
    double r = 0.0;
    for (std::size_t l = 0; l < z.size(); ++l) {
        t[l] = (z[l] - c) / c;
        r = std::max(r, std::abs(t[l]));
    }

    T coeff = binomial(p, k);
    T sum = coeff;
    std::vector<double> h(z.size(), 1.0);
    double bound = 1.0; // C(m, k) r^(m-k)
    for (int j = 1; j <= kTaylorMaxTerms; ++j) {
        const int m = k + j;
        coeff = coeff * (p - static_cast<double>(m - 1)) / static_cast<double>(m);
        h[0] *= t[0];
        for (std::size_t l = 1; l < h.size(); ++l) {
            h[l] = h[l - 1] + t[l] * h[l];
        }
        sum += coeff * h.back();

        bound *= r * static_cast<double>(m) / static_cast<double>(j);
        const double ratio = std::abs(value_of(p) - m) * r / static_cast<double>(j + 1);
        if (magnitude(coeff) * bound <= 1e-18 * magnitude(sum) && ratio < 0.9) {
            break;
        }
    }
    return pow_node(c, p - static_cast<double>(k)) * sum;
}

template <class T>
T power_impl(std::span<const double> nodes, T p) {
    if (nodes.empty()) {
        throw DomainError("divided difference needs at least one node");
    }
    std::vector<double> z(nodes.begin(), nodes.end());
    std::sort(z.begin(), z.end());
    if (!(z.front() > 0.0) || !std::isfinite(z.back())) {
        throw DomainError("divided difference of x^p needs positive finite nodes");
    }

    // Merge clusters of nearly coincident nodes onto their mean.
    const double merge_gap = kMergeTolerance * z.back();
    for (std::size_t begin = 0; begin < z.size();) {
        std::size_t end = begin + 1;
        double sum = z[begin];
        while (end < z.size() && z[end] - z[end - 1] < merge_gap) {
            sum += z[end];
            ++end;
        }
        const double mean = sum / static_cast<double>(end - begin);
        std::fill(z.begin() + static_cast<std::ptrdiff_t>(begin),
                  z.begin() + static_cast<std::ptrdiff_t>(end), mean);
        begin = end;
    }

    const std::size_t n = z.size();
    std::vector<T> d(n);
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = pow_node(z[i], p);
    }
    for (std::size_t k = 1; k < n; ++k) {
        const int order = static_cast<int>(k);
        for (std::size_t i = 0; i + k < n; ++i) {
            const double lo = z[i];
            const double hi = z[i + k];
            if (hi == lo) {
                d[i] = binomial(p, order) * pow_node(lo, p - static_cast<double>(order));
                continue;
            }
            const double r = (hi - lo) / (hi + lo);
            const double growth = (std::abs(value_of(p) - order) + 1.0) * r;
            if (r <= kTaylorMaxSpread && growth <= kTaylorMaxGrowth) {
                d[i] = taylor_block(std::span<const double>(z).subspan(i, k + 1), p);
            } else {
                d[i] = (d[i + 1] - d[i]) / (hi - lo);
            }
        }
    }
    return d[0];
}

} // namespace

double power(std::span<const double> nodes, double p) { return power_impl(nodes, p); }

Dual power(std::span<const double> nodes, Dual p) { return power_impl(nodes, p); }

double power_log(std::span<const double> nodes, double p) {
    return power_impl(nodes, Dual{p, 1.0}).slope;
}

double complete_homogeneous(std::span<const double> x, unsigned long q) {
    if (x.empty()) {
        return q == 0 ? 1.0 : 0.0;
    }
    std::vector<double> h(x.size(), 1.0);
    for (unsigned long degree = 1; degree <= q; ++degree) {
        h[0] *= x[0];
        for (std::size_t j = 1; j < x.size(); ++j) {
            h[j] = h[j - 1] + x[j] * h[j];
        }
    }
    return h.back();
}

} // namespace wehrl::divdiff
