#include "ascurv/complex_io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace ascurv {

using nlohmann::json;

namespace {

std::string position_prefix(const std::string& text, const std::string& source, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": ";
}

json parse_json(const std::string& text, const std::string& source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& err) {
        // byte is one past the offending character
        const std::size_t at = err.byte > 0 ? err.byte - 1 : 0;
        throw InputError(position_prefix(text, source, at) + "malformed JSON (" + err.what() + ")");
    }
}

[[noreturn]] void fail(const std::string& source, const std::string& where, const std::string& what) {
    throw InputError(source + ": " + where + ": " + what);
}

const json& require(const json& obj, const char* key, const std::string& source) {
    if (!obj.is_object() || !obj.contains(key)) {
        fail(source, "top level", std::string("missing field \"") + key + "\"");
    }
    return obj.at(key);
}

Simplex simplex_at(const json& j, const std::string& source, const std::string& where) {
    try {
        return simplex_from_json(j);
    } catch (const std::exception& err) {
        fail(source, where, err.what());
    }
}

StratumOverrides overrides_from_json(const json& j, const std::string& source, const std::string& where) {
    if (!j.is_array()) {
        fail(source, where, "expected an array of {simplex, r}");
    }
    StratumOverrides out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string at = where + "[" + std::to_string(i) + "]";
        const json& item = j[i];
        if (!item.is_object() || !item.contains("simplex") || !item.contains("r")) {
            fail(source, at, "expected {\"simplex\": [...], \"r\": k}");
        }
        if (!item["r"].is_number_integer()) {
            fail(source, at, "r must be an integer");
        }
        const long long r = item["r"].get<long long>();
        if (r < 0 || r > 1'000'000) {
            fail(source, at, "r out of range");
        }
        out[simplex_at(item["simplex"], source, at + ".simplex")] = static_cast<int>(r);
    }
    return out;
}

Point point_from_json(const json& j, const std::string& source, const std::string& where) {
    if (!j.is_array()) {
        fail(source, where, "expected an array of numbers");
    }
    Point p(static_cast<Eigen::Index>(j.size()));
    for (std::size_t k = 0; k < j.size(); ++k) {
        if (!j[k].is_number()) {
            fail(source, where, "coordinate " + std::to_string(k) + " is not a number");
        }
        p[static_cast<Eigen::Index>(k)] = j[k].get<double>();
    }
    return p;
}

}  // namespace

std::string read_text(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError(path + ": cannot open file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Simplex simplex_from_json(const json& j) {
    if (!j.is_array() || j.empty()) {
        throw std::invalid_argument("a simplex is a non-empty array of vertex ids");
    }
    std::vector<VertexId> vs;
    for (const json& v : j) {
        if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 0xFFFFFFFELL) {
            throw std::invalid_argument("vertex ids are non-negative integers");
        }
        vs.push_back(static_cast<VertexId>(v.get<long long>()));
    }
    return Simplex(std::move(vs));
}

json simplex_to_json(const Simplex& s) {
    return json(s.vertices());
}

ComplexFile parse_complex(const std::string& text, const std::string& source) {
    const json root = parse_json(text, source);
    if (!root.is_object()) {
        fail(source, "top level", "expected an object");
    }
    const json& version = require(root, "version", source);
    if (!version.is_number_integer() || version.get<int>() != kComplexFormatVersion) {
        fail(source, "version", "unsupported version (expected 1)");
    }
    const json& ambient = require(root, "ambient_dim", source);
    if (!ambient.is_number_integer() || ambient.get<long long>() < 0) {
        fail(source, "ambient_dim", "expected a non-negative integer");
    }
    const auto d = ambient.get<long long>();

    const json& verts = require(root, "vertices", source);
    if (!verts.is_array()) {
        fail(source, "vertices", "expected an array");
    }
    std::vector<Point> coords;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const std::string at = "vertices[" + std::to_string(i) + "]";
        Point p = point_from_json(verts[i], source, at);
        if (p.size() != d) {
            fail(source, at, "has " + std::to_string(p.size()) + " coordinates, ambient_dim is " + std::to_string(d));
        }
        coords.push_back(std::move(p));
    }

    const json& maxs = require(root, "maximal_simplices", source);
    if (!maxs.is_array()) {
        fail(source, "maximal_simplices", "expected an array");
    }
    std::vector<Simplex> simplices;
    for (std::size_t i = 0; i < maxs.size(); ++i) {
        const std::string at = "maximal_simplices[" + std::to_string(i) + "]";
        Simplex s = simplex_at(maxs[i], source, at);
        for (VertexId v : s.vertices()) {
            if (v >= coords.size()) {
                fail(source, at, "vertex index " + std::to_string(v) + " out of range (" +
                                     std::to_string(coords.size()) + " vertices)");
            }
        }
        simplices.push_back(std::move(s));
    }

    ComplexFile out;
    try {
        out.complex = EmbeddedComplex(SimplicialComplex::from_maximal(std::move(simplices)), std::move(coords));
    } catch (const std::invalid_argument& err) {
        fail(source, "complex", err.what());
    }
    if (root.contains("rank_overrides") && !root["rank_overrides"].is_null()) {
        out.overrides = overrides_from_json(root["rank_overrides"], source, "rank_overrides");
        for (const auto& [s, r] : out.overrides) {
            if (!out.complex.complex().contains(s)) {
                fail(source, "rank_overrides", "simplex " + s.to_string() + " is not in the complex");
            }
        }
    }
    return out;
}

ComplexFile read_complex_file(const std::string& path) {
    return parse_complex(read_text(path), path == "-" ? "<stdin>" : path);
}

json complex_to_json(const EmbeddedComplex& e, const StratumOverrides& overrides) {
    json j;
    j["version"] = kComplexFormatVersion;
    j["ambient_dim"] = e.ambient_dim();
    j["vertices"] = points_to_json(e.coordinates());
    json maxs = json::array();
    for (const Simplex& s : e.complex().maximal_simplices()) {
        maxs.push_back(simplex_to_json(s));
    }
    j["maximal_simplices"] = std::move(maxs);
    if (!overrides.empty()) {
        json ov = json::array();
        for (const auto& [s, r] : overrides) {
            ov.push_back({{"simplex", simplex_to_json(s)}, {"r", r}});
        }
        j["rank_overrides"] = std::move(ov);
    }
    return j;
}

std::string emit_complex(const EmbeddedComplex& e, const StratumOverrides& overrides) {
    return complex_to_json(e, overrides).dump(2) + "\n";
}

std::vector<Point> parse_points(const std::string& text, const std::string& source) {
    const json root = parse_json(text, source);
    const json* arr = &root;
    if (root.is_object()) {
        if (!root.contains("points")) {
            fail(source, "top level", "missing field \"points\"");
        }
        arr = &root["points"];
    }
    if (!arr->is_array()) {
        fail(source, "points", "expected an array of coordinate arrays");
    }
    std::vector<Point> pts;
    for (std::size_t i = 0; i < arr->size(); ++i) {
        const std::string at = "points[" + std::to_string(i) + "]";
        pts.push_back(point_from_json((*arr)[i], source, at));
        if (pts.back().size() != pts.front().size()) {
            fail(source, at, "dimension differs from points[0]");
        }
    }
    return pts;
}

json points_to_json(const std::vector<Point>& points) {
    json arr = json::array();
    for (const Point& p : points) {
        arr.push_back(std::vector<double>(p.data(), p.data() + p.size()));
    }
    return arr;
}

StratumOverrides parse_overrides(const std::string& text, const std::string& source) {
    const json root = parse_json(text, source);
    if (root.is_object() && root.contains("rank_overrides")) {
        return overrides_from_json(root["rank_overrides"], source, "rank_overrides");
    }
    return overrides_from_json(root, source, "overrides");
}

json carriers_to_json(const SubdivisionPair& pair) {
    const auto& fine = pair.fine.complex();
    const auto& coarse = pair.coarse.complex();
    json arr = json::array();
    for (SimplexId id = 0; id < fine.size(); ++id) {
        arr.push_back({{"simplex", simplex_to_json(fine.simplex(id))},
                       {"carrier", simplex_to_json(coarse.simplex(pair.carrier.at(id)))}});
    }
    return {{"version", kComplexFormatVersion}, {"carriers", std::move(arr)}};
}

std::vector<SimplexId> parse_carriers(const std::string& text, const EmbeddedComplex& fine,
                                      const EmbeddedComplex& coarse, const std::string& source) {
    const json root = parse_json(text, source);
    if (!root.is_object() || !root.contains("carriers") || !root["carriers"].is_array()) {
        fail(source, "top level", "expected {\"carriers\": [...]}");
    }
    const auto& l = fine.complex();
    const auto& k = coarse.complex();
    constexpr SimplexId unset = static_cast<SimplexId>(-1);
    std::vector<SimplexId> out(l.size(), unset);
    const json& arr = root["carriers"];
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string at = "carriers[" + std::to_string(i) + "]";
        if (!arr[i].is_object() || !arr[i].contains("simplex") || !arr[i].contains("carrier")) {
            fail(source, at, "expected {\"simplex\": [...], \"carrier\": [...]}");
        }
        const Simplex tau = simplex_at(arr[i]["simplex"], source, at + ".simplex");
        const Simplex zeta = simplex_at(arr[i]["carrier"], source, at + ".carrier");
        const auto tau_id = l.find(tau);
        const auto zeta_id = k.find(zeta);
        if (!tau_id) {
            fail(source, at, tau.to_string() + " is not in the subdivided complex");
        }
        if (!zeta_id) {
            fail(source, at, zeta.to_string() + " is not in the original complex");
        }
        out[*tau_id] = *zeta_id;
    }
    for (SimplexId id = 0; id < out.size(); ++id) {
        if (out[id] == unset) {
            fail(source, "carriers", "no carrier for " + l.simplex(id).to_string());
        }
    }
    return out;
}

}  // namespace ascurv
