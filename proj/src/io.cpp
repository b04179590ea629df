#include <wehrl/io.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace wehrl::io {

namespace {

using nlohmann::json;

std::vector<double> parse_vector(const json& node, const std::string& field) {
    if (!node.is_array()) {
        throw ParseError(field + ": expected an array of numbers");
    }
    std::vector<double> out;
    out.reserve(node.size());
    for (std::size_t i = 0; i < node.size(); ++i) {
        if (!node[i].is_number()) {
            throw ParseError(field + "[" + std::to_string(i) + "]: expected a number");
        }
        out.push_back(node[i].get<double>());
    }
    return out;
}

Eigen::MatrixXd parse_real_matrix(const json& node, const std::string& field) {
    if (!node.is_array() || node.empty()) {
        throw ParseError(field + ": expected a non-empty array of rows");
    }
    const std::size_t rows = node.size();
    std::size_t cols = 0;
    Eigen::MatrixXd m;
    for (std::size_t i = 0; i < rows; ++i) {
        const std::string row_field = field + "[" + std::to_string(i) + "]";
        const std::vector<double> row = parse_vector(node[i], row_field);
        if (i == 0) {
            cols = row.size();
            if (cols == 0) {
                throw ParseError(row_field + ": empty row");
            }
            m.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
        } else if (row.size() != cols) {
            throw ParseError(row_field + ": expected " + std::to_string(cols) + " entries");
        }
        for (std::size_t j = 0; j < cols; ++j) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = row[j];
        }
    }
    return m;
}

ComplexMatrix parse_complex_matrix(const json& node, const std::string& field) {
    if (!node.is_object()) {
        throw ParseError(field + ": expected an object with \"re\" and optional \"im\"");
    }
    if (!node.contains("re")) {
        throw ParseError(field + ".re: missing");
    }
    const Eigen::MatrixXd re = parse_real_matrix(node["re"], field + ".re");
    Eigen::MatrixXd im = Eigen::MatrixXd::Zero(re.rows(), re.cols());
    if (node.contains("im")) {
        im = parse_real_matrix(node["im"], field + ".im");
        if (im.rows() != re.rows() || im.cols() != re.cols()) {
            throw ParseError(field + ".im: shape differs from " + field + ".re");
        }
    }
    ComplexMatrix m(re.rows(), re.cols());
    m.real() = re;
    m.imag() = im;
    return m;
}

json spectrum_json(const Spectrum& s) {
    return json(std::vector<double>(s.values().begin(), s.values().end()));
}

} // namespace

std::string to_string(InputKind kind) {
    switch (kind) {
    case InputKind::spectrum:
        return "spectrum";
    case InputKind::density:
        return "density";
    case InputKind::bipartite:
        return "bipartite";
    }
    return "unknown";
}

StateInput parse_state(const json& doc) {
    if (!doc.is_object()) {
        throw ParseError("<root>: expected a JSON object");
    }
    const int keys = static_cast<int>(doc.contains("spectrum")) +
                     static_cast<int>(doc.contains("density")) +
                     static_cast<int>(doc.contains("bipartite"));
    if (keys != 1) {
        throw ParseError(
            "<root>: expected exactly one of \"spectrum\", \"density\", \"bipartite\"");
    }
    StateInput input;
    if (doc.contains("spectrum")) {
        std::vector<double> v = parse_vector(doc["spectrum"], "spectrum");
        if (v.empty()) {
            throw ParseError("spectrum: empty array");
        }
        input.kind = InputKind::spectrum;
        input.spectrum = Spectrum(std::move(v));
    } else if (doc.contains("density")) {
        input.kind = InputKind::density;
        input.density.emplace(parse_complex_matrix(doc["density"], "density"));
        input.spectrum = eigen_spectrum(*input.density);
    } else {
        input.kind = InputKind::bipartite;
        input.bipartite.emplace(parse_complex_matrix(doc["bipartite"], "bipartite"));
        input.spectrum = schmidt_spectrum(*input.bipartite);
    }
    return input;
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError(path.string() + ": cannot open input file");
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path.string() + ": invalid JSON (" + e.what() + ")");
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError(path.string() + ": cannot open for writing");
    }
    out << contents;
    out.flush();
    if (!out) {
        throw IoError(path.string() + ": write failed");
    }
}

std::string format_number(double x) {
    if (x == 0.0) {
        x = 0.0;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

json to_json(const EntropyReport& r) {
    json scan = json::array();
    for (const ScanRow& row : r.scan) {
        scan.push_back({
            {"q", row.q},
            {"renyi", row.renyi},
            {"renyi_sub", row.renyi_sub},
            {"tsallis_moment", row.tsallis_moment},
            {"renyi_wehrl_mono", row.renyi_wehrl_mono},
            {"renyi_wehrl_bi", row.renyi_wehrl_bi},
        });
    }
    const QShapeDiagnostics& d = r.diagnostics;
    return {
        {"n", r.n},
        {"spectrum", spectrum_json(r.spectrum)},
        {"von_neumann", r.von_neumann},
        {"subentropy", r.subentropy},
        {"wehrl_mono", r.wehrl_mono},
        {"wehrl_bi", r.wehrl_bi},
        {"excess", r.excess},
        {"scan", scan},
        {"diagnostics",
         {
             {"renyi_nonincreasing", d.renyi_nonincreasing},
             {"renyi_sub_nondecreasing", d.renyi_sub_nondecreasing},
             {"renyi_sub_concave", d.renyi_sub_concave},
             {"max_renyi_increase", d.max_renyi_increase},
             {"max_renyi_sub_decrease", d.max_renyi_sub_decrease},
             {"max_renyi_sub_convexity", d.max_renyi_sub_convexity},
         }},
    };
}

json to_json(const SchurReport& r) {
    return {
        {"monotone_name", r.monotone_name},
        {"pairs_tested", r.pairs_tested},
        {"violations", r.violations},
        {"worst_slack", r.worst_slack},
    };
}

json to_json(const McEstimate& e) {
    return {
        {"mean", e.mean},
        {"std_error", e.std_error},
        {"samples", e.samples},
        {"seed", e.seed.value},
    };
}

std::string report_csv(const EntropyReport& r) {
    std::ostringstream out;
    out << "n,von_neumann,subentropy,wehrl_mono,wehrl_bi,excess,"
           "q,renyi,renyi_sub,tsallis_moment,renyi_wehrl_mono,renyi_wehrl_bi\n";
    const std::string scalars = std::to_string(r.n) + "," + format_number(r.von_neumann) + "," +
                                format_number(r.subentropy) + "," + format_number(r.wehrl_mono) +
                                "," + format_number(r.wehrl_bi) + "," + format_number(r.excess);
    for (const ScanRow& row : r.scan) {
        out << scalars << ',' << format_number(row.q) << ',' << format_number(row.renyi) << ','
            << format_number(row.renyi_sub) << ',' << format_number(row.tsallis_moment) << ','
            << format_number(row.renyi_wehrl_mono) << ',' << format_number(row.renyi_wehrl_bi)
            << '\n';
    }
    return out.str();
}

} // namespace wehrl::io
