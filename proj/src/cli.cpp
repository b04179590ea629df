#include <wehrl/cli.hpp>

#include <wehrl/entropies.hpp>
#include <wehrl/errors.hpp>
#include <wehrl/husimi.hpp>
#include <wehrl/io.hpp>
#include <wehrl/majorization.hpp>
#include <wehrl/symfun.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

namespace wehrl::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr double kOracleSigma = 4.0;

const std::vector<double> kFig1Orders{0.5, 1.0, 2.0, 10.0};
const std::vector<double> kFig23Orders{0.5, 1.0, 2.0, 5.0};
const std::vector<double> kFig4Kappas{1.5, 3.0};
constexpr int kFig1Steps = 100;
constexpr int kBarycentricSteps = 200;
constexpr int kFig4Steps = 200;

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
    if (cfg.output_path) {
        io::write_text_file(*cfg.output_path, text);
    } else {
        out << text;
    }
}

std::string render(const json& doc) { return doc.dump(2) + "\n"; }

io::StateInput load_state(const RunConfig& cfg) {
    if (!cfg.input_path) {
        throw io::ParseError("--input: required for command '" + cfg.command + "'");
    }
    return io::parse_state(io::read_json_file(*cfg.input_path));
}

json source_json(const RunConfig& cfg, const std::string& kind) {
    json src{{"kind", kind}};
    if (cfg.input_path) {
        src["input"] = cfg.input_path->string();
    }
    return src;
}

std::vector<double> orders_or(const RunConfig& cfg, std::vector<double> fallback) {
    std::vector<double> q = cfg.q_grid.empty() ? std::move(fallback) : cfg.q_grid;
    std::sort(q.begin(), q.end());
    q.erase(std::unique(q.begin(), q.end()), q.end());
    return q;
}

int cmd_compute(const RunConfig& cfg, std::ostream& out) {
    const io::StateInput state = load_state(cfg);
    const std::vector<double> grid = orders_or(cfg, default_scan_grid());
    const EntropyReport report = q_scan(state.spectrum, grid);
    if (cfg.format == "csv") {
        emit(cfg, out, io::report_csv(report));
    } else {
        json doc = io::to_json(report);
        doc["source"] = source_json(cfg, io::to_string(state.kind));
        emit(cfg, out, render(doc));
    }
    return kOk;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out) {
    const io::StateInput state = load_state(cfg);
    const std::vector<double> grid = orders_or(cfg, default_scan_grid());
    const EntropyReport report = q_scan(state.spectrum, grid);
    if (cfg.format == "csv") {
        std::ostringstream csv;
        csv << "q,renyi,renyi_sub,tsallis_moment,renyi_wehrl_mono,renyi_wehrl_bi\n";
        for (const ScanRow& row : report.scan) {
            csv << io::format_number(row.q) << ',' << io::format_number(row.renyi) << ','
                << io::format_number(row.renyi_sub) << ','
                << io::format_number(row.tsallis_moment) << ','
                << io::format_number(row.renyi_wehrl_mono) << ','
                << io::format_number(row.renyi_wehrl_bi) << '\n';
        }
        emit(cfg, out, csv.str());
    } else {
        const json full = io::to_json(report);
        json doc{{"n", full["n"]},
                 {"spectrum", full["spectrum"]},
                 {"scan", full["scan"]},
                 {"diagnostics", full["diagnostics"]},
                 {"source", source_json(cfg, io::to_string(state.kind))}};
        emit(cfg, out, render(doc));
    }
    return kOk;
}

struct OracleRow {
    std::string check;
    double q{0.0};
    double closed_form{0.0};
    McEstimate estimate;
    double sigma{0.0};
};

int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
    if (cfg.samples < 1000) {
        throw ConfigError("--samples: oracle runs need at least 1000 samples");
    }
    std::optional<HermitianState> mono;
    std::optional<BipartitePureState> bi;
    std::string kind = "random";
    if (cfg.input_path) {
        io::StateInput state = load_state(cfg);
        kind = io::to_string(state.kind);
        switch (state.kind) {
        case io::InputKind::spectrum:
            mono.emplace(HermitianState::diagonal(state.spectrum));
            bi.emplace(BipartitePureState::schmidt_form(state.spectrum));
            break;
        case io::InputKind::density:
            mono = std::move(state.density);
            bi.emplace(BipartitePureState::schmidt_form(state.spectrum));
            break;
        case io::InputKind::bipartite:
            bi = std::move(state.bipartite);
            mono.emplace(bi->reduced_state());
            break;
        }
    } else {
        bi.emplace(random_pure_bipartite(3, derive_seed(RngSeed{cfg.seed}, 0xB1)));
        mono.emplace(bi->reduced_state());
    }
    const Spectrum lambda = eigen_spectrum(*mono);
    const std::size_t n = lambda.dim();

    std::vector<double> orders = orders_or(cfg, {2.0});
    if (std::find(orders.begin(), orders.end(), 1.0) == orders.end()) {
        orders.insert(orders.begin(), 1.0);
    }

    std::vector<OracleRow> rows;
    std::uint64_t stream = 0;
    auto seed = [&] { return derive_seed(RngSeed{cfg.seed}, ++stream); };
    auto add = [&](std::string check, double q, double closed, McEstimate est) {
        const double sigma = est.sigma_distance(closed);
        rows.push_back({std::move(check), q, closed, est, sigma});
    };
    for (double q : orders) {
        add("moment_mono", q, husimi_moment(q, lambda, n, Partition::mono),
            mc_moment_mono(*mono, q, cfg.samples, seed()));
        add("moment_bi", q, husimi_moment(q, lambda, n, Partition::bi),
            mc_moment_bi(*bi, q, cfg.samples, seed()));
        add("simplex_mu", q, mu(q, lambda), mu_simplex_oracle(q, lambda, cfg.samples, seed()));
    }
    add("wehrl_mono", 1.0, wehrl_entropy_mono(lambda, n), mc_wehrl(*mono, cfg.samples, seed()));
    add("wehrl_bi", 1.0, wehrl_entropy_bi(lambda, n), mc_wehrl(*bi, cfg.samples, seed()));

    bool all_pass = true;
    for (const OracleRow& r : rows) {
        all_pass = all_pass && r.sigma <= kOracleSigma;
    }

    if (cfg.format == "csv") {
        std::ostringstream csv;
        csv << "check,q,closed_form,estimate,std_error,sigma_distance,samples\n";
        for (const OracleRow& r : rows) {
            csv << r.check << ',' << io::format_number(r.q) << ','
                << io::format_number(r.closed_form) << ',' << io::format_number(r.estimate.mean)
                << ',' << io::format_number(r.estimate.std_error) << ','
                << io::format_number(r.sigma) << ',' << r.estimate.samples << '\n';
        }
        emit(cfg, out, csv.str());
    } else {
        json checks = json::array();
        for (const OracleRow& r : rows) {
            checks.push_back({{"check", r.check},
                              {"q", r.q},
                              {"closed_form", r.closed_form},
                              {"estimate", io::to_json(r.estimate)},
                              {"sigma_distance", r.sigma},
                              {"pass", r.sigma <= kOracleSigma}});
        }
        json doc{{"n", n},
                 {"spectrum", std::vector<double>(lambda.values().begin(), lambda.values().end())},
                 {"samples", cfg.samples},
                 {"seed", cfg.seed},
                 {"sigma_limit", kOracleSigma},
                 {"checks", checks},
                 {"all_pass", all_pass},
                 {"source", source_json(cfg, kind)}};
        emit(cfg, out, render(doc));
    }
    return all_pass ? kOk : kOracle;
}

struct NamedMonotone {
    std::string name;
    Monotone f;
};

std::vector<NamedMonotone> schur_monotones(const std::vector<double>& orders) {
    std::vector<NamedMonotone> m{{"Q", [](const Spectrum& s) { return subentropy(s); }}};
    for (double q : orders) {
        const std::string tag = io::format_number(q);
        m.push_back({"Q_" + tag, [q](const Spectrum& s) { return renyi_subentropy(q, s); }});
        m.push_back({"M_" + tag, [q](const Spectrum& s) { return rescaled_moment(q, s); }});
    }
    return m;
}

int cmd_schur(const RunConfig& cfg, std::ostream& out) {
    const std::vector<double> orders = orders_or(cfg, {0.5, 2.0, 5.0});
    const std::vector<NamedMonotone> monotones = schur_monotones(orders);
    std::vector<SchurReport> reports;
    json mode;

    if (cfg.input_path) {
        const json doc = io::read_json_file(*cfg.input_path);
        if (!doc.is_object() || !doc.contains("upper") || !doc.contains("lower")) {
            throw io::ParseError("<root>: single-pair mode expects \"upper\" and \"lower\"");
        }
        const io::StateInput upper = io::parse_state(json{{"spectrum", doc["upper"]}});
        const io::StateInput lower = io::parse_state(json{{"spectrum", doc["lower"]}});
        const std::size_t n = std::max(upper.spectrum.dim(), lower.spectrum.dim());
        MajorizationPair pair{lower.spectrum.padded(n), upper.spectrum.padded(n)};
        if (!majorizes(pair.upper, pair.lower)) {
            throw ValidationError("lower: not majorized by upper");
        }
        for (const NamedMonotone& m : monotones) {
            reports.push_back(schur_check_pairs(m.name, m.f, std::span(&pair, 1)));
        }
        mode = {{"mode", "pair"}, {"source", source_json(cfg, "pair")}};
    } else {
        std::vector<std::size_t> dims = cfg.dims;
        if (dims.empty()) {
            dims = {2, 3, 4, 5};
        }
        for (std::size_t d : dims) {
            if (d < 2) {
                throw ConfigError("--dims: every dimension must be at least 2");
            }
        }
        for (const NamedMonotone& m : monotones) {
            reports.push_back(
                schur_concavity_suite(m.name, m.f, dims, cfg.pairs, RngSeed{cfg.seed}));
        }
        mode = {{"mode", "suite"},
                {"dims", dims},
                {"pairs_per_dim", cfg.pairs},
                {"seed", cfg.seed}};
    }

    std::size_t violations = 0;
    for (const SchurReport& r : reports) {
        violations += r.violations;
    }
    if (cfg.format == "csv") {
        std::ostringstream csv;
        csv << "monotone_name,pairs_tested,violations,worst_slack\n";
        for (const SchurReport& r : reports) {
            csv << r.monotone_name << ',' << r.pairs_tested << ',' << r.violations << ','
                << io::format_number(r.worst_slack) << '\n';
        }
        emit(cfg, out, csv.str());
    } else {
        json list = json::array();
        for (const SchurReport& r : reports) {
            list.push_back(io::to_json(r));
        }
        json doc = mode;
        doc["reports"] = list;
        doc["total_violations"] = violations;
        emit(cfg, out, render(doc));
    }
    return violations == 0 ? kOk : kSchurViolation;
}

std::string order_header(const std::string& prefix, const std::vector<double>& orders) {
    std::string h;
    for (double q : orders) {
        h += "," + prefix + "_" + io::format_number(q);
    }
    return h;
}

std::string figure1() {
    std::ostringstream csv;
    csv << "x";
    for (double q : kFig1Orders) {
        csv << ",S_" << io::format_number(q) << ",Q_" << io::format_number(q);
    }
    csv << '\n';
    for (int i = 0; i <= kFig1Steps; ++i) {
        const double x = static_cast<double>(i) / kFig1Steps;
        const double y = static_cast<double>(kFig1Steps - i) / kFig1Steps;
        const Spectrum s({x, y});
        csv << io::format_number(x);
        for (double q : kFig1Orders) {
            csv << ',' << io::format_number(renyi_entropy(q, s)) << ','
                << io::format_number(renyi_subentropy(q, s));
        }
        csv << '\n';
    }
    return csv.str();
}

template <typename F>
std::string barycentric_figure(const std::string& prefix, F&& value) {
    std::ostringstream csv;
    csv << "lambda1,lambda2,lambda3" << order_header(prefix, kFig23Orders) << '\n';
    for (int i = 0; i <= kBarycentricSteps; ++i) {
        for (int j = 0; i + j <= kBarycentricSteps; ++j) {
            const double a = static_cast<double>(i) / kBarycentricSteps;
            const double b = static_cast<double>(j) / kBarycentricSteps;
            const double c = static_cast<double>(kBarycentricSteps - i - j) / kBarycentricSteps;
            const Spectrum s({a, b, c});
            csv << io::format_number(a) << ',' << io::format_number(b) << ','
                << io::format_number(c);
            for (double q : kFig23Orders) {
                csv << ',' << io::format_number(value(q, s));
            }
            csv << '\n';
        }
    }
    return csv.str();
}

Spectrum power_law(double kappa, std::size_t n) {
    std::vector<double> p(n);
    double total = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        p[j] = std::pow(static_cast<double>(j + 1), kappa);
        total += p[j];
    }
    for (double& x : p) {
        x /= total;
    }
    return Spectrum(std::move(p));
}

std::string figure4() {
    std::ostringstream csv;
    csv << "kappa,q,S_q,Q_q\n";
    for (double kappa : kFig4Kappas) {
        const Spectrum s = power_law(kappa, 4);
        for (int i = 1; i <= kFig4Steps; ++i) {
            const double q = static_cast<double>(i) / 10.0;
            csv << io::format_number(kappa) << ',' << io::format_number(q) << ','
                << io::format_number(renyi_entropy(q, s)) << ','
                << io::format_number(renyi_subentropy(q, s)) << '\n';
        }
    }
    return csv.str();
}

int cmd_figures(const RunConfig& cfg, std::ostream& out) {
    const fs::path dir = cfg.output_path.value_or(fs::path("figures"));
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        throw io::IoError(dir.string() + ": cannot create output directory");
    }
    io::write_text_file(dir / "fig1.csv", figure1());
    io::write_text_file(dir / "fig2.csv", barycentric_figure("Q", [](double q, const Spectrum& s) {
                            return renyi_subentropy(q, s);
                        }));
    io::write_text_file(dir / "fig3.csv", barycentric_figure("M", [](double q, const Spectrum& s) {
                            return rescaled_moment(q, s);
                        }));
    io::write_text_file(dir / "fig4.csv", figure4());
    out << "wrote fig1.csv fig2.csv fig3.csv fig4.csv to " << dir.string() << '\n';
    return kOk;
}

} // namespace

std::vector<double> default_scan_grid() {
    std::vector<double> grid(50);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        grid[i] = 0.1 + (20.0 - 0.1) * static_cast<double>(i) / 49.0;
    }
    return grid;
}

int run(const RunConfig& cfg, std::ostream& out) {
    for (double q : cfg.q_grid) {
        if (!std::isfinite(q) || !(q > 0.0)) {
            throw ConfigError("--q: orders must be positive and finite");
        }
    }
    if (cfg.format != "json" && cfg.format != "csv") {
        throw ConfigError("--format: expected json or csv");
    }
    if (cfg.command == "compute") {
        return cmd_compute(cfg, out);
    }
    if (cfg.command == "scan") {
        return cmd_scan(cfg, out);
    }
    if (cfg.command == "oracle") {
        return cmd_oracle(cfg, out);
    }
    if (cfg.command == "schur") {
        return cmd_schur(cfg, out);
    }
    if (cfg.command == "figures") {
        return cmd_figures(cfg, out);
    }
    throw ConfigError("--command: unknown command '" + cfg.command + "'");
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Wehrl entropy, subentropy and Renyi subentropy toolkit"};
    RunConfig cfg;
    std::string input;
    std::string output;
    app.add_option("--command", cfg.command, "compute | scan | oracle | schur | figures")
        ->required()
        ->check(CLI::IsMember({"compute", "scan", "oracle", "schur", "figures"}));
    app.add_option("--input", input, "State JSON (or upper/lower pair for schur)");
    app.add_option("--output", output, "Output file (directory for figures)");
    app.add_option("--format", cfg.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--q", cfg.q_grid, "Order q (repeatable)");
    app.add_option("--samples", cfg.samples, "Monte-Carlo samples");
    app.add_option("--seed", cfg.seed, "Base RNG seed");
    app.add_option("--dims", cfg.dims, "Dimensions for the Schur suite (repeatable)");
    app.add_option("--pairs", cfg.pairs, "Pairs per dimension for the Schur suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParse;
    }
    if (!input.empty()) {
        cfg.input_path = input;
    }
    if (!output.empty()) {
        cfg.output_path = output;
    }

    try {
        return run(cfg, out);
    } catch (const io::ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kParse;
    } catch (const io::IoError& e) {
        err << "i/o error: " << e.what() << '\n';
        return kIo;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "i/o error: " << e.what() << '\n';
        return kIo;
    } catch (const ValidationError& e) {
        err << "invalid state: " << e.what() << '\n';
        return kInvariant;
    } catch (const DomainError& e) {
        err << "invalid state: " << e.what() << '\n';
        return kInvariant;
    } catch (const DegeneracyError& e) {
        err << "invalid state: " << e.what() << '\n';
        return kInvariant;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
}

} // namespace wehrl::cli
