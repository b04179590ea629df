#pragma once

#include <wehrl/entropies.hpp>
#include <wehrl/errors.hpp>
#include <wehrl/majorization.hpp>
#include <wehrl/monte_carlo.hpp>
#include <wehrl/spectra.hpp>

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>

namespace wehrl::io {

// Malformed input document; the message names the offending field.
class ParseError : public Error {
public:
    using Error::Error;
};

// File could not be opened, read, or written.
class IoError : public Error {
public:
    using Error::Error;
};

enum class InputKind { spectrum, density, bipartite };

std::string to_string(InputKind kind);

// One of the accepted state documents:
//     {"spectrum": [...]}
//     {"density":   {"re": [[...]], "im": [[...]]}}
//     {"bipartite": {"re": [[...]], "im": [[...]]}}
// "im" is optional and defaults to zero.
struct StateInput {
    InputKind kind{InputKind::spectrum};
    Spectrum spectrum{std::vector<double>{1.0}};
    std::optional<HermitianState> density;
    std::optional<BipartitePureState> bipartite;
};

// Throws ParseError for schema problems and ValidationError (or a subclass)
// when the parsed state breaks a type invariant.
StateInput parse_state(const nlohmann::json& doc);
nlohmann::json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& contents);

// Shortest representation that round-trips, capped at 17 significant digits.
std::string format_number(double x);

nlohmann::json to_json(const EntropyReport& report);
nlohmann::json to_json(const SchurReport& report);
nlohmann::json to_json(const McEstimate& estimate);

// Tidy table: scalar entropies repeated on every q row.
std::string report_csv(const EntropyReport& report);

} // namespace wehrl::io
