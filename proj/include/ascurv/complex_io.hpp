#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ascurv/stratification.hpp"
#include "ascurv/subdivision.hpp"

namespace ascurv {

/// Malformed or inconsistent input. The message starts with "source:line:column:"
/// when a position is known.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kComplexFormatVersion = 1;

struct ComplexFile {
    EmbeddedComplex complex;
    StratumOverrides overrides;
};

/// Reads a whole file, or stdin for "-". Throws InputError if unreadable.
std::string read_text(const std::string& path);

/// Parses the canonical complex format:
///   {"version": 1, "ambient_dim": d, "vertices": [[x, ...], ...],
///    "maximal_simplices": [[i, j, ...], ...],
///    "rank_overrides": [{"simplex": [i, ...], "r": 3}, ...]}   (optional)
ComplexFile parse_complex(const std::string& text, const std::string& source = "<input>");
ComplexFile read_complex_file(const std::string& path);

nlohmann::json complex_to_json(const EmbeddedComplex& e, const StratumOverrides& overrides = {});
std::string emit_complex(const EmbeddedComplex& e, const StratumOverrides& overrides = {});

/// A bare array of coordinate arrays, or {"points": [...]}.
std::vector<Point> parse_points(const std::string& text, const std::string& source = "<input>");
nlohmann::json points_to_json(const std::vector<Point>& points);

/// [{"simplex": [...], "r": k}, ...]
StratumOverrides parse_overrides(const std::string& text, const std::string& source = "<input>");

/// {"version": 1, "carriers": [{"simplex": [...], "carrier": [...]}, ...]} with
/// one entry per simplex of the fine complex.
nlohmann::json carriers_to_json(const SubdivisionPair& pair);
std::vector<SimplexId> parse_carriers(const std::string& text, const EmbeddedComplex& fine,
                                      const EmbeddedComplex& coarse, const std::string& source = "<input>");

Simplex simplex_from_json(const nlohmann::json& j);
nlohmann::json simplex_to_json(const Simplex& s);

}  // namespace ascurv
