#pragma once

// Command implementations behind the `hmc` tool. Each command returns its
// exit code and report text instead of printing, so tests can drive them
// directly.
//
// Exit codes: 0 success, 1 a check ran on valid input and failed, 2 bad input.

#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hmc/chain_complex.hpp"
#include "hmc/css_code.hpp"
#include "hmc/error.hpp"
#include "hmc/gf2.hpp"
#include "hmc/hypermap.hpp"
#include "hmc/io.hpp"
#include "hmc/surface.hpp"

namespace hmc::cli {

struct CommandOutcome {
    int exit_code = 0;
    std::string report;
    std::vector<std::string> artifacts;
};

namespace detail {

inline std::string join_labels(const std::vector<std::size_t>& zero_based) {
    std::string s;
    for (std::size_t k = 0; k < zero_based.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(zero_based[k] + 1);
    }
    return s;
}

inline std::vector<std::size_t> parse_label_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw ParseError("bad dart label \"" + item + "\"");
        }
        if (used != item.size() || v < 1) throw ParseError("bad dart label \"" + item + "\"");
        out.push_back(static_cast<std::size_t>(v - 1));
    }
    return out;
}

struct ResolvedSpecial {
    SpecialDartSet set;
    std::string source;  // "flag", "file" or "default"
};

inline ResolvedSpecial resolve_special(const HypermapFile& file, const std::optional<std::string>& flag) {
    if (flag) return {choose_special_darts(file.hypermap, parse_label_list(*flag)), "flag"};
    if (file.special) return {choose_special_darts(file.hypermap, *file.special), "file"};
    return {choose_special_darts(file.hypermap), "default"};
}

inline void write_text_file(const std::string& path, const std::string& content, CommandOutcome& out) {
    std::ofstream f(path);
    if (!f) throw ParseError("cannot write " + path);
    f << content;
    out.artifacts.push_back(path);
}

inline void report_params(std::ostream& os, const CodeParams& p) {
    os << "n=" << p.n << "\nk=" << p.k << '\n';
    if (p.distance) {
        auto show = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string("none"); };
        os << "d=" << show(p.distance->d) << "\nd_X=" << show(p.distance->d_x) << "\nd_Z=" << show(p.distance->d_z)
           << '\n';
    }
}

// Generators of `a` that fall outside the row space of `b`, 1-based.
inline std::vector<std::size_t> rows_outside(const BitMatrix& a, const BitMatrix& b) {
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        if (!row_space_contains(b, a.row(r))) out.push_back(r);
    }
    return out;
}

inline void report_diff(std::ostream& os, const CssCode& a, const CssCode& b) {
    auto show = [&](const char* key, const BitMatrix& x, const BitMatrix& y) {
        for (auto r : rows_outside(x, y)) os << key << '=' << r + 1 << ": " << x.row(r).to_string() << '\n';
    };
    show("hx_row_only_in_first", a.hx(), b.hx());
    show("hx_row_only_in_second", b.hx(), a.hx());
    show("hz_row_only_in_first", a.hz(), b.hz());
    show("hz_row_only_in_second", b.hz(), a.hz());
}

template <class Fn>
CommandOutcome guarded(Fn&& body) {
    CommandOutcome out;
    std::ostringstream report;
    try {
        out.exit_code = body(report, out);
    } catch (const Error& e) {
        report << "error: " << e.what() << '\n';
        out.exit_code = 2;
    }
    out.report = report.str();
    return out;
}

}  // namespace detail

inline CommandOutcome cmd_info(const std::string& hypermap_path) {
    return detail::guarded([&](std::ostream& os, CommandOutcome&) {
        const auto file = load_hypermap(hypermap_path);
        const auto& h = file.hypermap;
        const auto c = h.counts();
        os << "V=" << c.vertices << " E=" << c.hyperedges << " F=" << c.faces << " W=" << c.darts
           << " genus=" << h.genus() << '\n';
        os << "sigma=" << cycle_string(h.sigma()) << '\n';
        os << "tau=" << cycle_string(h.tau()) << '\n';
        os << "faces=" << cycle_string(h.face_permutation()) << '\n';
        os << "special_default=" << detail::join_labels(choose_special_darts(h).sorted()) << '\n';
        return 0;
    });
}

struct BuildOptions {
    std::string hypermap_path;
    std::optional<std::string> special;
    std::optional<std::string> basis_change_path;
    bool reduce = false;
    bool distance = false;
    std::optional<std::string> out_path;
};

inline CommandOutcome cmd_build(const BuildOptions& opt) {
    return detail::guarded([&](std::ostream& os, CommandOutcome& out) {
        const auto file = load_hypermap(opt.hypermap_path);
        const auto special = detail::resolve_special(file, opt.special);
        CssCode code = build_canonical(file.hypermap, special.set);
        os << "special=" << detail::join_labels(special.set.sorted()) << " (" << special.source << ")\n";
        if (opt.basis_change_path) {
            const BitMatrix t = load_matrix(*opt.basis_change_path);
            code = transform(code, t);
            os << "basis=general\ncnot_count=" << cnot_circuit(t).gates.size() << '\n';
        } else {
            os << "basis=special\n";
        }
        if (opt.reduce) code = reduce(code);
        detail::report_params(os, params(code, opt.distance));
        std::ostringstream stab;
        write_stabilizer(stab, code);
        if (opt.out_path) {
            detail::write_text_file(*opt.out_path, stab.str(), out);
        } else {
            os << stab.str();
        }
        return 0;
    });
}

struct ToSurfaceOptions {
    std::string hypermap_path;
    std::optional<std::string> special;
    std::optional<std::string> out_graph_path;
    std::optional<std::string> dot_path;
    std::optional<std::string> intermediate_dot_path;
};

inline CommandOutcome cmd_to_surface(const ToSurfaceOptions& opt) {
    return detail::guarded([&](std::ostream& os, CommandOutcome& out) {
        const auto file = load_hypermap(opt.hypermap_path);
        const auto special = detail::resolve_special(file, opt.special);
        const SurfaceGraph g = hypermap_to_surface(file.hypermap, special.set);
        os << "special=" << detail::join_labels(special.set.sorted()) << " (" << special.source << ")\n";
        if (special.source == "default") os << "note=no special darts given; using the smallest dart per hyperedge\n";
        os << "vertices=" << g.vertex_count << "\nedges=" << g.edges.size() << "\nfaces=" << g.faces.size()
           << "\neuler=" << g.euler_characteristic() << "\ngenus=" << file.hypermap.genus() << '\n';
        std::ostringstream json;
        write_surface_graph(json, g);
        if (opt.out_graph_path) {
            detail::write_text_file(*opt.out_graph_path, json.str(), out);
        } else {
            os << json.str();
        }
        if (opt.dot_path) {
            std::ostringstream dot;
            write_dot(dot, g);
            detail::write_text_file(*opt.dot_path, dot.str(), out);
        }
        if (opt.intermediate_dot_path) {
            std::ostringstream dot;
            write_dot(dot, intermediate_graph(file.hypermap), "intermediate");
            detail::write_text_file(*opt.intermediate_dot_path, dot.str(), out);
        }
        return 0;
    });
}

struct FromGraphOptions {
    std::string rotation_graph_path;
    std::optional<std::string> out_hypermap_path;
    std::optional<std::string> dot_path;
};

inline CommandOutcome cmd_from_graph(const FromGraphOptions& opt) {
    return detail::guarded([&](std::ostream& os, CommandOutcome& out) {
        const RotationGraph g = load_rotation_graph(opt.rotation_graph_path);
        const auto [h, s] = graph_to_hypermap(g);
        const auto c = h.counts();
        os << "V=" << c.vertices << " E=" << c.hyperedges << " F=" << c.faces << " W=" << c.darts
           << " genus=" << h.genus() << '\n';
        os << "special=" << detail::join_labels(s.sorted()) << '\n';
        const auto trip = corollary_round_trip(g);
        os << "round_trip_vertices=" << (trip.vertices_match ? "ok" : "FAIL") << '\n';
        os << "round_trip_edges=" << (trip.edges_match ? "ok" : "FAIL") << '\n';
        os << "round_trip_faces=" << (trip.faces_match ? "ok" : "FAIL") << '\n';
        os << "codes_equal=" << (trip.codes_equal ? "yes" : "no") << '\n';
        std::ostringstream json;
        write_hypermap(json, h, &s);
        if (opt.out_hypermap_path) {
            detail::write_text_file(*opt.out_hypermap_path, json.str(), out);
        } else {
            os << json.str();
        }
        if (opt.dot_path) {
            std::ostringstream dot;
            write_dot(dot, g);
            detail::write_text_file(*opt.dot_path, dot.str(), out);
        }
        return trip.ok() ? 0 : 1;
    });
}

struct VerifyOptions {
    std::string hypermap_path;
    std::optional<std::string> special;
    bool distance = false;
};

inline CommandOutcome cmd_verify(const VerifyOptions& opt) {
    return detail::guarded([&](std::ostream& os, CommandOutcome&) {
        const auto file = load_hypermap(opt.hypermap_path);
        const auto special = detail::resolve_special(file, opt.special);
        const auto r = verify_equivalence(file.hypermap, special.set, opt.distance);
        os << "special=" << detail::join_labels(special.set.sorted()) << " (" << special.source << ")\n";
        os << "hx_equal=" << (r.hx_equal ? "yes" : "no") << "\nhz_equal=" << (r.hz_equal ? "yes" : "no") << '\n';
        os << "[hypermap]\n";
        detail::report_params(os, r.hypermap_params);
        os << "[surface]\n";
        detail::report_params(os, r.surface_params);
        if (!r.equal()) {
            detail::report_diff(os, r.hypermap_code, r.surface_code);
            os << "verdict=different\n";
            return 1;
        }
        os << "verdict=equal\n";
        return 0;
    });
}

inline CommandOutcome cmd_decompose(const std::string& matrix_path) {
    return detail::guarded([&](std::ostream& os, CommandOutcome&) {
        const BitMatrix t = load_matrix(matrix_path);
        const auto circuit = cnot_circuit(t);
        for (const auto& g : circuit.gates) os << "CNOT " << g.control + 1 << ' ' << g.target + 1 << '\n';
        os << "m=" << circuit.gates.size() << "\nbound=" << t.rows() * t.rows() << '\n';
        return 0;
    });
}

inline CommandOutcome cmd_distance(const std::string& stabilizer_path) {
    return detail::guarded([&](std::ostream& os, CommandOutcome&) {
        const CssCode code = load_stabilizer(stabilizer_path);
        detail::report_params(os, params(code, true));
        return 0;
    });
}

// Loads a code from any supported file: a stabilizer block file, or a JSON
// hypermap (canonical code), surface graph or rotation graph.
inline CssCode load_any_code(const std::string& path, const std::optional<std::string>& special) {
    const std::string text = hmc::detail::read_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || text[first] != '{') {
        std::istringstream in(text);
        return read_stabilizer(in);
    }
    const auto j = hmc::detail::parse_json(text);
    if (j.contains("sigma")) {
        const auto file = parse_hypermap(text);
        return build_canonical(file.hypermap, detail::resolve_special(file, special).set);
    }
    if (j.contains("rotation")) return surface_code(parse_rotation_graph(text));
    if (j.contains("faces")) return surface_code(parse_surface_graph(text));
    throw ParseError(path + " is not a hypermap, surface graph, rotation graph or stabilizer file");
}

struct CompareOptions {
    std::string first_path;
    std::string second_path;
    std::optional<std::string> special;
};

inline CommandOutcome cmd_compare(const CompareOptions& opt) {
    return detail::guarded([&](std::ostream& os, CommandOutcome&) {
        const CssCode a = load_any_code(opt.first_path, opt.special);
        const CssCode b = load_any_code(opt.second_path, opt.special);
        if (a.qubits() != b.qubits()) {
            os << "n_first=" << a.qubits() << "\nn_second=" << b.qubits() << "\nverdict=different\n";
            return 1;
        }
        const bool hx = row_space_equal(a.hx(), b.hx());
        const bool hz = row_space_equal(a.hz(), b.hz());
        os << "hx_equal=" << (hx ? "yes" : "no") << "\nhz_equal=" << (hz ? "yes" : "no") << '\n';
        if (hx && hz) {
            os << "verdict=equal\n";
            return 0;
        }
        detail::report_diff(os, a, b);
        os << "verdict=different\n";
        return 1;
    });
}

}  // namespace hmc::cli
