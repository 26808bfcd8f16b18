#pragma once

// Surface codes of embedded graphs, and the conversions between canonical
// hypermap codes and surface codes in both directions.
//
// The hypermap -> graph direction is computed combinatorially. Each nonspecial
// dart i becomes an edge joining the vertices of i and tau^-1(i), and each
// hypermap face keeps its index with the projected boundary as its edge set.
// The intermediate drawings (new edges in every face, hyperedge faces) are
// only built on request for DOT inspection.

#include <algorithm>
#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hmc/chain_complex.hpp"
#include "hmc/css_code.hpp"
#include "hmc/error.hpp"
#include "hmc/gf2.hpp"
#include "hmc/hypermap.hpp"

namespace hmc {

struct SurfaceEdge {
    std::size_t a = 0;  // 0-based vertex
    std::size_t b = 0;
    std::size_t label = 0;  // identifier as printed, e.g. the 1-based dart label

    friend bool operator==(const SurfaceEdge&, const SurfaceEdge&) = default;
};

struct SurfaceGraph {
    std::size_t vertex_count = 0;
    std::vector<SurfaceEdge> edges;
    // Edge labels on each face boundary, reduced mod 2.
    std::vector<std::vector<std::size_t>> faces;

    long long euler_characteristic() const {
        return static_cast<long long>(vertex_count) - static_cast<long long>(edges.size()) +
               static_cast<long long>(faces.size());
    }

    // Column of each label in the incidence matrices.
    std::map<std::size_t, std::size_t> label_index() const {
        std::map<std::size_t, std::size_t> idx;
        for (std::size_t k = 0; k < edges.size(); ++k) {
            if (!idx.emplace(edges[k].label, k).second) {
                throw ParseError("edge label " + std::to_string(edges[k].label) + " used twice");
            }
        }
        return idx;
    }

    // Labels must be distinct, endpoints and face labels must exist, and every
    // edge must lie on an even number of face boundaries (each edge borders two
    // face sides; an edge with both sides on one face cancels mod 2).
    void validate() const {
        const auto idx = label_index();
        for (const auto& e : edges) {
            if (e.a >= vertex_count || e.b >= vertex_count) {
                throw OutOfRange("edge " + std::to_string(e.label) + " has an endpoint outside 1.." +
                                 std::to_string(vertex_count));
            }
        }
        std::vector<std::size_t> uses(edges.size(), 0);
        for (std::size_t f = 0; f < faces.size(); ++f) {
            for (auto label : faces[f]) {
                auto it = idx.find(label);
                if (it == idx.end()) {
                    throw OutOfRange("face " + std::to_string(f + 1) + " names unknown edge " + std::to_string(label));
                }
                ++uses[it->second];
            }
        }
        for (std::size_t k = 0; k < edges.size(); ++k) {
            if (uses[k] % 2 != 0) {
                throw ParseError("edge " + std::to_string(edges[k].label) + " lies on an odd number of faces");
            }
        }
    }
};

// Hx = vertex-edge incidence (loops give zero columns), Hz = face-edge incidence.
inline CssCode surface_code(const SurfaceGraph& g) {
    const auto idx = g.label_index();
    BitMatrix hx(g.vertex_count, g.edges.size());
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
        if (g.edges[k].a >= g.vertex_count || g.edges[k].b >= g.vertex_count) {
            throw OutOfRange("edge endpoint outside vertex range");
        }
        hx.set(g.edges[k].a, k, !hx.get(g.edges[k].a, k));
        hx.set(g.edges[k].b, k, !hx.get(g.edges[k].b, k));
    }
    BitMatrix hz(g.faces.size(), g.edges.size());
    for (std::size_t f = 0; f < g.faces.size(); ++f) {
        for (auto label : g.faces[f]) {
            auto it = idx.find(label);
            if (it == idx.end()) throw OutOfRange("face names unknown edge " + std::to_string(label));
            hz.set(f, it->second, !hz.get(f, it->second));
        }
    }
    return CssCode(std::move(hx), std::move(hz));
}

inline SurfaceGraph hypermap_to_surface(const Hypermap& h, const SpecialDartSet& s) {
    check_special_darts(h, s);
    const auto basis = nonspecial_darts(h, s);
    SurfaceGraph g;
    g.vertex_count = h.vertices().size();
    for (auto d : basis) {
        g.edges.push_back({h.incident_vertex(d), h.incident_vertex(h.tau_inverse()(d)), d + 1});
    }
    for (std::size_t f = 0; f < h.faces().size(); ++f) {
        std::vector<std::size_t> labels;
        for (auto k : project(h, s, d2_face(h, f)).support()) labels.push_back(basis[k] + 1);
        g.faces.push_back(std::move(labels));
    }
    return g;
}

// The graph before special edges are deleted: one edge per dart, the hypermap
// faces, then one face per hyperedge. Debug output only.
inline SurfaceGraph intermediate_graph(const Hypermap& h) {
    SurfaceGraph g;
    g.vertex_count = h.vertices().size();
    for (std::size_t d = 0; d < h.dart_count(); ++d) {
        g.edges.push_back({h.incident_vertex(d), h.incident_vertex(h.tau_inverse()(d)), d + 1});
    }
    auto add_faces = [&](const OrbitPartition& part) {
        for (const auto& orbit : part.orbits) {
            std::vector<std::size_t> labels;
            for (auto d : orbit) labels.push_back(d + 1);
            std::sort(labels.begin(), labels.end());
            g.faces.push_back(std::move(labels));
        }
    };
    add_faces(h.faces());
    add_faces(h.hyperedges());
    return g;
}

struct EquivalenceReport {
    CssCode hypermap_code;
    CssCode surface_code;
    SurfaceGraph graph;
    bool hx_equal = false;
    bool hz_equal = false;
    CodeParams hypermap_params;
    CodeParams surface_params;

    bool equal() const { return hx_equal && hz_equal; }
};

inline EquivalenceReport verify_equivalence(const Hypermap& h, const SpecialDartSet& s, bool with_distance = false) {
    EquivalenceReport r;
    r.hypermap_code = build_canonical(h, s);
    r.graph = hypermap_to_surface(h, s);
    r.surface_code = surface_code(r.graph);
    r.hx_equal = row_space_equal(r.hypermap_code.hx(), r.surface_code.hx());
    r.hz_equal = row_space_equal(r.hypermap_code.hz(), r.surface_code.hz());
    r.hypermap_params = params(r.hypermap_code, with_distance);
    r.surface_params = params(r.surface_code, with_distance);
    return r;
}

// Graph with a rotation system. Edge k (0-based) owns two edge-ends: 2k at
// endpoint a and 2k+1 at endpoint b. rotation[v] lists the ends at v in
// cyclic order.
struct RotationGraph {
    std::size_t vertex_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::vector<std::size_t>> rotation;

    std::size_t end_count() const { return 2 * edges.size(); }
    std::size_t end_vertex(std::size_t end) const {
        const auto& e = edges[end / 2];
        return end % 2 == 0 ? e.first : e.second;
    }
    static std::size_t opposite(std::size_t end) { return end ^ 1u; }

    // Next end counterclockwise around the vertex of `end`.
    std::vector<std::size_t> rotation_successor() const {
        std::vector<std::size_t> next(end_count());
        for (const auto& cyc : rotation) {
            for (std::size_t k = 0; k < cyc.size(); ++k) next[cyc[k]] = cyc[(k + 1) % cyc.size()];
        }
        return next;
    }

    void validate() const {
        if (edges.empty()) throw NotConnected("rotation graph needs at least one edge");
        if (rotation.size() != vertex_count) {
            throw ParseError("rotation lists " + std::to_string(rotation.size()) + " vertices, expected " +
                             std::to_string(vertex_count));
        }
        for (const auto& [a, b] : edges) {
            if (a >= vertex_count || b >= vertex_count) throw OutOfRange("edge endpoint outside vertex range");
        }
        std::vector<bool> seen(end_count(), false);
        for (std::size_t v = 0; v < vertex_count; ++v) {
            for (auto end : rotation[v]) {
                if (end >= end_count()) throw OutOfRange("edge-end " + std::to_string(end + 1) + " does not exist");
                if (seen[end]) throw NotBijective("edge-end " + std::to_string(end + 1) + " listed twice");
                if (end_vertex(end) != v) {
                    throw ParseError("edge-end " + std::to_string(end + 1) + " is not incident to vertex " +
                                     std::to_string(v + 1));
                }
                seen[end] = true;
            }
        }
        if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
            throw NotBijective("rotation system omits some edge-ends");
        }
        detail::DisjointSets sets(vertex_count);
        std::size_t components = vertex_count;
        for (const auto& [a, b] : edges) components -= sets.unite(a, b) ? 1 : 0;
        if (components != 1) throw NotConnected("graph has " + std::to_string(components) + " components");
    }
};

// Faces traced directly on the rotation system: leave along an edge, arrive
// at the far end, turn to the next end in the rotation there. Edge k carries
// label k+1.
inline SurfaceGraph rotation_surface(const RotationGraph& g) {
    g.validate();
    const auto next = g.rotation_successor();
    SurfaceGraph out;
    out.vertex_count = g.vertex_count;
    for (std::size_t k = 0; k < g.edges.size(); ++k) out.edges.push_back({g.edges[k].first, g.edges[k].second, k + 1});
    std::vector<bool> visited(g.end_count(), false);
    for (std::size_t start = 0; start < g.end_count(); ++start) {
        if (visited[start]) continue;
        std::vector<int> parity(g.edges.size(), 0);
        for (std::size_t end = start; !visited[end]; end = next[RotationGraph::opposite(end)]) {
            visited[end] = true;
            parity[end / 2] ^= 1;
        }
        std::vector<std::size_t> labels;
        for (std::size_t k = 0; k < parity.size(); ++k) {
            if (parity[k]) labels.push_back(k + 1);
        }
        out.faces.push_back(std::move(labels));
    }
    return out;
}

inline CssCode surface_code(const RotationGraph& g) { return surface_code(rotation_surface(g)); }

// Each edge becomes a two-dart hyperedge; darts are the edge-ends, sigma is the
// rotation and tau swaps the two ends of every edge. The special dart of an
// edge is its end at the smaller endpoint, or end a for a loop.
inline std::pair<Hypermap, SpecialDartSet> graph_to_hypermap(const RotationGraph& g) {
    g.validate();
    const std::size_t darts = g.end_count();
    std::vector<std::size_t> tau(darts);
    for (std::size_t d = 0; d < darts; ++d) tau[d] = RotationGraph::opposite(d);
    Hypermap h(Permutation::from_image(g.rotation_successor()), Permutation::from_image(std::move(tau)));
    std::vector<std::size_t> preferred;
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
        const auto [a, b] = g.edges[k];
        preferred.push_back(b < a ? 2 * k + 1 : 2 * k);
    }
    auto special = choose_special_darts(h, preferred);
    return {std::move(h), std::move(special)};
}

struct RoundTripReport {
    bool vertices_match = false;
    bool edges_match = false;
    bool faces_match = false;
    bool codes_equal = false;

    bool ok() const { return vertices_match && edges_match && faces_match && codes_equal; }
};

// graph -> hypermap -> surface graph, then compares the result with the input
// under the induced correspondence (vertex orbit -> original vertex, dart
// label -> its edge).
inline RoundTripReport corollary_round_trip(const RotationGraph& g) {
    RoundTripReport r;
    const auto [h, s] = graph_to_hypermap(g);
    const SurfaceGraph back = hypermap_to_surface(h, s);
    const SurfaceGraph direct = rotation_surface(g);

    std::vector<std::size_t> vertex_map(back.vertex_count);
    std::vector<bool> hit(g.vertex_count, false);
    r.vertices_match = back.vertex_count == g.vertex_count;
    for (std::size_t o = 0; o < h.vertices().size() && r.vertices_match; ++o) {
        vertex_map[o] = g.end_vertex(h.vertices().orbits[o].front());
        if (hit[vertex_map[o]]) r.vertices_match = false;
        hit[vertex_map[o]] = true;
    }

    auto edge_of_label = [](std::size_t label) { return (label - 1) / 2; };
    if (r.vertices_match && back.edges.size() == g.edges.size()) {
        std::vector<bool> covered(g.edges.size(), false);
        r.edges_match = true;
        for (const auto& e : back.edges) {
            const std::size_t k = edge_of_label(e.label);
            auto want = std::minmax(g.edges[k].first, g.edges[k].second);
            auto got = std::minmax(vertex_map[e.a], vertex_map[e.b]);
            if (covered[k] || want != got) r.edges_match = false;
            covered[k] = true;
        }
    }

    auto canonical_faces = [](std::vector<std::vector<std::size_t>> faces) {
        for (auto& f : faces) std::sort(f.begin(), f.end());
        std::sort(faces.begin(), faces.end());
        return faces;
    };
    std::vector<std::vector<std::size_t>> mapped;
    for (const auto& f : back.faces) {
        std::vector<std::size_t> labels;
        for (auto label : f) labels.push_back(edge_of_label(label) + 1);
        mapped.push_back(std::move(labels));
    }
    r.faces_match = canonical_faces(mapped) == canonical_faces(direct.faces);

    // The hypermap code's qubits are the nonspecial darts in ascending order,
    // which is one per edge in edge order, so columns line up.
    r.codes_equal = stabilizer_equal(surface_code(direct), build_canonical(h, s));
    return r;
}

namespace detail {

inline void write_faces_as_comments(std::ostream& os, const SurfaceGraph& g) {
    for (std::size_t f = 0; f < g.faces.size(); ++f) {
        os << "  // face " << f + 1 << ":";
        for (auto label : g.faces[f]) os << ' ' << label;
        os << '\n';
    }
}

}  // namespace detail

inline void write_dot(std::ostream& os, const SurfaceGraph& g, const std::string& name = "surface") {
    os << "graph " << name << " {\n";
    for (std::size_t v = 0; v < g.vertex_count; ++v) os << "  v" << v + 1 << ";\n";
    for (const auto& e : g.edges) os << "  v" << e.a + 1 << " -- v" << e.b + 1 << " [label=\"" << e.label << "\"];\n";
    detail::write_faces_as_comments(os, g);
    os << "}\n";
}

inline void write_dot(std::ostream& os, const RotationGraph& g, const std::string& name = "rotation") {
    os << "graph " << name << " {\n";
    for (std::size_t v = 0; v < g.vertex_count; ++v) {
        os << "  v" << v + 1 << ";  // rotation:";
        for (auto end : g.rotation[v]) os << ' ' << end + 1;
        os << '\n';
    }
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
        os << "  v" << g.edges[k].first + 1 << " -- v" << g.edges[k].second + 1 << " [label=\"" << k + 1 << "\"];\n";
    }
    detail::write_faces_as_comments(os, rotation_surface(g));
    os << "}\n";
}

}  // namespace hmc
