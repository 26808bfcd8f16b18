#pragma once

// JSON file formats. Every dart, vertex and edge-end is 1-based on disk.
//
//   hypermap:       {"darts": n, "sigma": [[cycle], ...], "tau": [[cycle], ...], "special": [d, ...]}
//   surface graph:  {"vertices": n, "edges": [[a, b, label], ...], "faces": [[label, ...], ...]}
//   rotation graph: {"vertices": n, "edges": [[a, b], ...], "rotation": [[end, ...], ...]}
//
// Fixed points may be omitted from sigma/tau, and "special" is optional.
// Edge k (1-based) of a rotation graph owns ends 2k-1 (at a) and 2k (at b).

#include <cstddef>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hmc/css_code.hpp"
#include "hmc/error.hpp"
#include "hmc/gf2.hpp"
#include "hmc/hypermap.hpp"
#include "hmc/surface.hpp"

namespace hmc {

struct HypermapFile {
    Hypermap hypermap;
    std::optional<std::vector<std::size_t>> special;  // 0-based
};

namespace detail {

using nlohmann::json;

inline json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
}

inline std::size_t positive(const json& j, const std::string& what) {
    if (!j.is_number_integer() || j.get<long long>() < 1) throw ParseError(what + " must be a positive integer");
    return j.get<std::size_t>();
}

inline std::size_t count(const json& j, const std::string& what) {
    if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError(what + " must be a nonnegative integer");
    return j.get<std::size_t>();
}

inline const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

inline std::vector<std::size_t> label_list(const json& j, const std::string& what) {
    if (!j.is_array()) throw ParseError(what + " must be an array");
    std::vector<std::size_t> out;
    for (const auto& x : j) out.push_back(positive(x, what + " entry"));
    return out;
}

inline std::vector<std::vector<std::size_t>> label_lists(const json& j, const std::string& what) {
    if (!j.is_array()) throw ParseError(what + " must be an array of arrays");
    std::vector<std::vector<std::size_t>> out;
    for (const auto& x : j) out.push_back(label_list(x, what));
    return out;
}

inline json cycles_json(const Permutation& p) {
    json out = json::array();
    for (const auto& cycle : orbits(p).orbits) {
        json c = json::array();
        for (auto d : cycle) c.push_back(d + 1);
        out.push_back(std::move(c));
    }
    return out;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace detail

inline HypermapFile parse_hypermap(const std::string& text) {
    const auto j = detail::parse_json(text);
    const std::size_t n = detail::positive(detail::field(j, "darts"), "\"darts\"");
    auto sigma = detail::label_lists(detail::field(j, "sigma"), "\"sigma\"");
    auto tau = detail::label_lists(detail::field(j, "tau"), "\"tau\"");
    HypermapFile out{Hypermap::from_cycles(n, sigma, tau), std::nullopt};
    if (j.contains("special") && !j.at("special").is_null()) {
        std::vector<std::size_t> special;
        for (auto d : detail::label_list(j.at("special"), "\"special\"")) {
            if (d > n) throw OutOfRange("special dart " + std::to_string(d) + " not in 1.." + std::to_string(n));
            special.push_back(d - 1);
        }
        out.special = std::move(special);
    }
    return out;
}

inline void write_hypermap(std::ostream& os, const Hypermap& h, const SpecialDartSet* special = nullptr) {
    os << "{\n  \"darts\": " << h.dart_count() << ",\n";
    os << "  \"sigma\": " << detail::cycles_json(h.sigma()).dump() << ",\n";
    os << "  \"tau\": " << detail::cycles_json(h.tau()).dump();
    if (special) {
        nlohmann::json s = nlohmann::json::array();
        for (auto d : special->sorted()) s.push_back(d + 1);
        os << ",\n  \"special\": " << s.dump();
    }
    os << "\n}\n";
}

inline SurfaceGraph parse_surface_graph(const std::string& text) {
    const auto j = detail::parse_json(text);
    SurfaceGraph g;
    g.vertex_count = detail::count(detail::field(j, "vertices"), "\"vertices\"");
    for (const auto& e : detail::label_lists(detail::field(j, "edges"), "\"edges\"")) {
        if (e.size() != 3) throw ParseError("surface graph edges are [a, b, label] triples");
        g.edges.push_back({e[0] - 1, e[1] - 1, e[2]});
    }
    g.faces = detail::label_lists(detail::field(j, "faces"), "\"faces\"");
    g.validate();
    return g;
}

inline void write_surface_graph(std::ostream& os, const SurfaceGraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges) edges.push_back({e.a + 1, e.b + 1, e.label});
    os << "{\n  \"vertices\": " << g.vertex_count << ",\n";
    os << "  \"edges\": " << edges.dump() << ",\n";
    os << "  \"faces\": " << nlohmann::json(g.faces).dump() << "\n}\n";
}

inline RotationGraph parse_rotation_graph(const std::string& text) {
    const auto j = detail::parse_json(text);
    RotationGraph g;
    g.vertex_count = detail::count(detail::field(j, "vertices"), "\"vertices\"");
    for (const auto& e : detail::label_lists(detail::field(j, "edges"), "\"edges\"")) {
        if (e.size() != 2) throw ParseError("rotation graph edges are [a, b] pairs");
        g.edges.emplace_back(e[0] - 1, e[1] - 1);
    }
    for (auto cyc : detail::label_lists(detail::field(j, "rotation"), "\"rotation\"")) {
        for (auto& end : cyc) --end;
        g.rotation.push_back(std::move(cyc));
    }
    g.validate();
    return g;
}

inline void write_rotation_graph(std::ostream& os, const RotationGraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [a, b] : g.edges) edges.push_back({a + 1, b + 1});
    nlohmann::json rotation = nlohmann::json::array();
    for (const auto& cyc : g.rotation) {
        nlohmann::json c = nlohmann::json::array();
        for (auto end : cyc) c.push_back(end + 1);
        rotation.push_back(std::move(c));
    }
    os << "{\n  \"vertices\": " << g.vertex_count << ",\n";
    os << "  \"edges\": " << edges.dump() << ",\n";
    os << "  \"rotation\": " << rotation.dump() << "\n}\n";
}

inline HypermapFile load_hypermap(const std::string& path) { return parse_hypermap(detail::read_file(path)); }
inline SurfaceGraph load_surface_graph(const std::string& path) { return parse_surface_graph(detail::read_file(path)); }
inline RotationGraph load_rotation_graph(const std::string& path) {
    return parse_rotation_graph(detail::read_file(path));
}

inline BitMatrix load_matrix(const std::string& path) {
    std::istringstream in(detail::read_file(path));
    return read_matrix(in);
}

inline CssCode load_stabilizer(const std::string& path) {
    std::istringstream in(detail::read_file(path));
    return read_stabilizer(in);
}

}  // namespace hmc
