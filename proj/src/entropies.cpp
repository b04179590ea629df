#include <wehrl/entropies.hpp>

#include <wehrl/divided_difference.hpp>
#include <wehrl/errors.hpp>
#include <wehrl/symfun.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace wehrl {

namespace {

constexpr double kUnitOrderWindow = 1e-6;
constexpr double kShapeTolerance = 1e-10;

double clamp_nonneg(double x) { return x > 0.0 ? x : 0.0; }

bool near_one(double q) { return std::abs(q - 1.0) < kUnitOrderWindow; }

void require_order(double q, const char* what) {
    if (!std::isfinite(q) || !(q > 0.0)) {
        throw DomainError(std::string(what) + ": q must be positive and finite");
    }
}

void require_dim(const Spectrum& lambda, std::size_t n, const char* what) {
    if (lambda.dim() != n) {
        throw ValidationError(std::string(what) + ": spectrum has dimension " +
                              std::to_string(lambda.dim()) + ", expected " + std::to_string(n));
    }
}

double multiplicity(Partition partition) { return partition == Partition::mono ? 1.0 : 2.0; }

// ln[n! Gamma(q+1) / Gamma(q+n)]
double log_prefactor(std::size_t n, double q) {
    const double nd = static_cast<double>(n);
    return std::lgamma(nd + 1.0) + std::lgamma(q + 1.0) - std::lgamma(q + nd);
}

} // namespace

double c_n(std::size_t n) {
    if (n == 0) {
        throw DomainError("c_n: n must be positive");
    }
    double sum = 0.0;
    for (std::size_t k = 2; k <= n; ++k) {
        sum += 1.0 / static_cast<double>(k);
    }
    return sum;
}

double c_nq(std::size_t n, double q) {
    if (n == 0) {
        throw DomainError("c_nq: n must be positive");
    }
    require_order(q, "c_nq");
    if (near_one(q)) {
        return c_n(n);
    }
    return log_prefactor(n, q) / (1.0 - q);
}

double subentropy(const Spectrum& lambda) {
    const auto nodes = lambda.support();
    if (nodes.size() == 1) {
        return 0.0;
    }
    const double q = -divdiff::power_log(nodes, static_cast<double>(nodes.size()));
    return clamp_nonneg(q);
}

double wehrl_entropy_mono(const Spectrum& lambda, std::size_t n) {
    require_dim(lambda, n, "wehrl_entropy_mono");
    return subentropy(lambda) + c_n(n);
}

double wehrl_entropy_bi(const Spectrum& lambda, std::size_t n) {
    require_dim(lambda, n, "wehrl_entropy_bi");
    return subentropy(lambda) + 2.0 * c_n(n);
}

double entropy_excess(const Spectrum& lambda, std::size_t n, Partition partition) {
    const double wehrl = partition == Partition::mono ? wehrl_entropy_mono(lambda, n)
                                                      : wehrl_entropy_bi(lambda, n);
    return wehrl - multiplicity(partition) * c_n(n);
}

double renyi_subentropy(double q, const Spectrum& lambda) {
    require_order(q, "renyi_subentropy");
    if (near_one(q)) {
        return subentropy(lambda);
    }
    return clamp_nonneg(log_mu(q, lambda) / (1.0 - q));
}

double rescaled_moment(double q, const Spectrum& lambda) {
    require_order(q, "rescaled_moment");
    if (near_one(q)) {
        return subentropy(lambda);
    }
    return clamp_nonneg((mu(q, lambda) - 1.0) / (1.0 - q));
}

double husimi_moment(double q, const Spectrum& lambda, std::size_t n, Partition partition) {
    require_order(q, "husimi_moment");
    require_dim(lambda, n, "husimi_moment");
    return std::exp(multiplicity(partition) * log_prefactor(n, q) + log_mu(q, lambda));
}

double renyi_wehrl(double q, const Spectrum& lambda, std::size_t n, Partition partition) {
    require_order(q, "renyi_wehrl");
    require_dim(lambda, n, "renyi_wehrl");
    if (near_one(q)) {
        return partition == Partition::mono ? wehrl_entropy_mono(lambda, n)
                                            : wehrl_entropy_bi(lambda, n);
    }
    return (multiplicity(partition) * log_prefactor(n, q) + log_mu(q, lambda)) / (1.0 - q);
}

double renyi_entropy(double q, const Spectrum& lambda) {
    require_order(q, "renyi_entropy");
    const auto p = lambda.support();
    if (near_one(q)) {
        return von_neumann(lambda);
    }
    const double top = p.front();
    double sum = 0.0;
    for (double x : p) {
        sum += std::pow(x / top, q);
    }
    return clamp_nonneg((q * std::log(top) + std::log(sum)) / (1.0 - q));
}

double von_neumann(const Spectrum& lambda) {
    double s = 0.0;
    for (double x : lambda.support()) {
        s -= x * std::log(x);
    }
    return clamp_nonneg(s);
}

double wehrl_via_q_limit(const Spectrum& lambda, std::size_t n, Partition partition, double h) {
    if (!(h >= 1e-6 && h <= 1e-3)) {
        throw ConfigError("wehrl_via_q_limit: step must lie in [1e-6, 1e-3]");
    }
    const double up = husimi_moment(1.0 + h, lambda, n, partition);
    const double down = husimi_moment(1.0 - h, lambda, n, partition);
    return -(up - down) / (2.0 * h);
}

QShapeDiagnostics q_shape(std::span<const ScanRow> rows) {
    QShapeDiagnostics d;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        d.max_renyi_increase = std::max(d.max_renyi_increase, rows[i].renyi - rows[i - 1].renyi);
        d.max_renyi_sub_decrease =
            std::max(d.max_renyi_sub_decrease, rows[i - 1].renyi_sub - rows[i].renyi_sub);
    }
    for (std::size_t i = 2; i < rows.size(); ++i) {
        const double left = (rows[i - 1].renyi_sub - rows[i - 2].renyi_sub) /
                            (rows[i - 1].q - rows[i - 2].q);
        const double right =
            (rows[i].renyi_sub - rows[i - 1].renyi_sub) / (rows[i].q - rows[i - 1].q);
        d.max_renyi_sub_convexity = std::max(d.max_renyi_sub_convexity, right - left);
    }
    d.renyi_nonincreasing = d.max_renyi_increase <= kShapeTolerance;
    d.renyi_sub_nondecreasing = d.max_renyi_sub_decrease <= kShapeTolerance;
    d.renyi_sub_concave = d.max_renyi_sub_convexity <= kShapeTolerance;
    return d;
}

EntropyReport q_scan(const Spectrum& lambda, std::span<const double> q_grid) {
    std::vector<double> grid(q_grid.begin(), q_grid.end());
    for (double q : grid) {
        require_order(q, "q_scan");
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    const std::size_t n = lambda.dim();
    EntropyReport report;
    report.n = n;
    report.spectrum = lambda;
    report.von_neumann = von_neumann(lambda);
    report.subentropy = subentropy(lambda);
    report.wehrl_mono = report.subentropy + c_n(n);
    report.wehrl_bi = report.subentropy + 2.0 * c_n(n);
    report.excess = report.subentropy;
    report.scan.reserve(grid.size());
    for (double q : grid) {
        ScanRow row;
        row.q = q;
        row.renyi = renyi_entropy(q, lambda);
        row.renyi_sub = renyi_subentropy(q, lambda);
        row.tsallis_moment = rescaled_moment(q, lambda);
        row.renyi_wehrl_mono = renyi_wehrl(q, lambda, n, Partition::mono);
        row.renyi_wehrl_bi = renyi_wehrl(q, lambda, n, Partition::bi);
        report.scan.push_back(row);
    }
    report.diagnostics = q_shape(report.scan);
    return report;
}

} // namespace wehrl
