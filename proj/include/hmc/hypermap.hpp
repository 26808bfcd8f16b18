#pragma once

// Hypermaps as pairs of permutations (sigma, tau) on darts.
//
// Darts are 0-based internally; every file and CLI surface uses 1-based
// labels. Orbits (vertices = sigma, hyperedges = tau, faces = sigma tau^-1) are
// indexed in ascending order of their smallest dart, so matrix row and column
// orders are reproducible.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "hmc/error.hpp"

namespace hmc {

class Permutation {
  public:
    Permutation() = default;

    static Permutation identity(std::size_t n) {
        Permutation p;
        p.image_.resize(n);
        std::iota(p.image_.begin(), p.image_.end(), std::size_t{0});
        return p;
    }

    static Permutation from_image(std::vector<std::size_t> image) {
        std::vector<bool> hit(image.size(), false);
        for (std::size_t i = 0; i < image.size(); ++i) {
            if (image[i] >= image.size()) {
                throw NotBijective("image of dart " + std::to_string(i + 1) + " is out of range");
            }
            if (hit[image[i]]) {
                throw NotBijective("dart " + std::to_string(image[i] + 1) + " appears twice in the image");
            }
            hit[image[i]] = true;
        }
        Permutation p;
        p.image_ = std::move(image);
        return p;
    }

    // Cycles use 1-based labels; darts not mentioned are fixed points.
    static Permutation from_cycles(std::size_t n, const std::vector<std::vector<std::size_t>>& cycles) {
        std::vector<std::size_t> image(n);
        std::iota(image.begin(), image.end(), std::size_t{0});
        std::vector<bool> seen(n, false);
        for (const auto& cycle : cycles) {
            for (std::size_t k = 0; k < cycle.size(); ++k) {
                const std::size_t label = cycle[k];
                if (label < 1 || label > n) {
                    throw NotBijective("dart label " + std::to_string(label) + " outside 1.." + std::to_string(n));
                }
                if (seen[label - 1]) {
                    throw NotBijective("dart " + std::to_string(label) + " appears in more than one cycle position");
                }
                seen[label - 1] = true;
                image[label - 1] = cycle[(k + 1) % cycle.size()] - 1;
            }
        }
        return from_image(std::move(image));
    }

    std::size_t size() const { return image_.size(); }
    std::size_t operator()(std::size_t i) const { return image_[i]; }
    const std::vector<std::size_t>& image() const { return image_; }

    Permutation inverse() const {
        std::vector<std::size_t> inv(image_.size());
        for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = i;
        Permutation p;
        p.image_ = std::move(inv);
        return p;
    }

    // (a * b)(i) = a(b(i)).
    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        if (a.size() != b.size()) throw DimensionMismatch("composing permutations of different degree");
        Permutation p;
        p.image_.resize(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) p.image_[i] = a(b(i));
        return p;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;

  private:
    std::vector<std::size_t> image_;
};

struct OrbitPartition {
    // Each orbit is a cycle starting at its smallest dart; orbits are sorted by
    // that dart.
    std::vector<std::vector<std::size_t>> orbits;
    std::vector<std::size_t> class_of;

    std::size_t size() const { return orbits.size(); }
};

inline OrbitPartition orbits(const Permutation& p) {
    OrbitPartition out;
    out.class_of.assign(p.size(), 0);
    std::vector<bool> seen(p.size(), false);
    for (std::size_t start = 0; start < p.size(); ++start) {
        if (seen[start]) continue;
        std::vector<std::size_t> cycle;
        for (std::size_t d = start; !seen[d]; d = p(d)) {
            seen[d] = true;
            out.class_of[d] = out.orbits.size();
            cycle.push_back(d);
        }
        out.orbits.push_back(std::move(cycle));
    }
    return out;
}

// 1-based cycle notation, fixed points included, e.g. "(1 8 3 6)(2 5 4 7)".
inline std::string cycle_string(const Permutation& p) {
    std::string s;
    for (const auto& cycle : orbits(p).orbits) {
        s += '(';
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            if (k) s += ' ';
            s += std::to_string(cycle[k] + 1);
        }
        s += ')';
    }
    return s;
}

namespace detail {

class DisjointSets {
  public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[std::max(a, b)] = std::min(a, b);
        return true;
    }

  private:
    std::vector<std::size_t> parent_;
};

}  // namespace detail

// Checks that sigma and tau act on the same darts and that <sigma, tau> is
// transitive. Bijectivity is already enforced by Permutation itself.
inline void validate(const Permutation& sigma, const Permutation& tau) {
    if (sigma.size() != tau.size()) {
        throw NotBijective("sigma acts on " + std::to_string(sigma.size()) + " darts but tau on " +
                           std::to_string(tau.size()));
    }
    if (sigma.size() == 0) throw NotConnected("a hypermap needs at least one dart");
    detail::DisjointSets sets(sigma.size());
    std::size_t components = sigma.size();
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        components -= sets.unite(i, sigma(i)) ? 1 : 0;
        components -= sets.unite(i, tau(i)) ? 1 : 0;
    }
    if (components != 1) {
        throw NotConnected("<sigma, tau> has " + std::to_string(components) + " orbits on the darts");
    }
}

struct HypermapCounts {
    std::size_t vertices = 0;
    std::size_t hyperedges = 0;
    std::size_t faces = 0;
    std::size_t darts = 0;

    friend bool operator==(const HypermapCounts&, const HypermapCounts&) = default;
};

class Hypermap {
  public:
    Hypermap(Permutation sigma, Permutation tau) : sigma_(std::move(sigma)), tau_(std::move(tau)) {
        validate(sigma_, tau_);
        tau_inv_ = tau_.inverse();
        phi_ = sigma_ * tau_inv_;
        vertices_ = orbits(sigma_);
        hyperedges_ = orbits(tau_);
        faces_ = orbits(phi_);
    }

    static Hypermap from_cycles(std::size_t darts, const std::vector<std::vector<std::size_t>>& sigma_cycles,
                                const std::vector<std::vector<std::size_t>>& tau_cycles) {
        return Hypermap(Permutation::from_cycles(darts, sigma_cycles), Permutation::from_cycles(darts, tau_cycles));
    }

    std::size_t dart_count() const { return sigma_.size(); }
    const Permutation& sigma() const { return sigma_; }
    const Permutation& tau() const { return tau_; }
    const Permutation& tau_inverse() const { return tau_inv_; }

    // sigma tau^-1, whose orbits are the faces.
    const Permutation& face_permutation() const { return phi_; }

    const OrbitPartition& vertices() const { return vertices_; }
    const OrbitPartition& hyperedges() const { return hyperedges_; }
    const OrbitPartition& faces() const { return faces_; }

    HypermapCounts counts() const { return {vertices_.size(), hyperedges_.size(), faces_.size(), dart_count()}; }

    std::size_t genus() const {
        const auto c = counts();
        const long long chi = static_cast<long long>(c.vertices + c.hyperedges + c.faces) -
                              static_cast<long long>(c.darts);
        if ((2 - chi) % 2 != 0 || chi > 2) {
            throw NonIntegerGenus("V+E+F-W = " + std::to_string(chi) + " gives no integral genus");
        }
        return static_cast<std::size_t>((2 - chi) / 2);
    }

    std::size_t incident_vertex(std::size_t dart) const {
        check_dart(dart);
        return vertices_.class_of[dart];
    }
    std::size_t incident_edge(std::size_t dart) const {
        check_dart(dart);
        return hyperedges_.class_of[dart];
    }
    std::size_t incident_face(std::size_t dart) const {
        check_dart(dart);
        return faces_.class_of[dart];
    }

  private:
    void check_dart(std::size_t dart) const {
        if (dart >= dart_count()) {
            throw OutOfRange("dart " + std::to_string(dart + 1) + " not in 1.." + std::to_string(dart_count()));
        }
    }

    Permutation sigma_;
    Permutation tau_;
    Permutation tau_inv_;
    Permutation phi_;
    OrbitPartition vertices_;
    OrbitPartition hyperedges_;
    OrbitPartition faces_;
};

// One dart per hyperedge, indexed by hyperedge.
class SpecialDartSet {
  public:
    SpecialDartSet() = default;
    SpecialDartSet(std::vector<std::size_t> per_edge, std::size_t dart_count)
        : darts_(std::move(per_edge)), is_special_(dart_count, false) {
        for (auto d : darts_) is_special_.at(d) = true;
    }

    const std::vector<std::size_t>& darts() const { return darts_; }
    std::size_t size() const { return darts_.size(); }
    bool contains(std::size_t dart) const { return dart < is_special_.size() && is_special_[dart]; }

    std::vector<std::size_t> sorted() const {
        auto s = darts_;
        std::sort(s.begin(), s.end());
        return s;
    }

  private:
    std::vector<std::size_t> darts_;
    std::vector<bool> is_special_;
};

// Default: the smallest dart of each hyperedge. Preferred darts (0-based)
// replace the default in their own hyperedge.
inline SpecialDartSet choose_special_darts(const Hypermap& h, const std::vector<std::size_t>& preferred = {}) {
    const auto& edges = h.hyperedges();
    std::vector<std::size_t> chosen(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) chosen[e] = edges.orbits[e].front();
    std::vector<bool> overridden(edges.size(), false);
    for (auto d : preferred) {
        const std::size_t e = h.incident_edge(d);
        if (overridden[e]) {
            throw DuplicateHyperedge("darts " + std::to_string(chosen[e] + 1) + " and " + std::to_string(d + 1) +
                                     " lie on the same hyperedge");
        }
        overridden[e] = true;
        chosen[e] = d;
    }
    return SpecialDartSet(std::move(chosen), h.dart_count());
}

// Nonspecial darts in ascending order; these index the qubits.
inline std::vector<std::size_t> nonspecial_darts(const Hypermap& h, const SpecialDartSet& s) {
    std::vector<std::size_t> out;
    for (std::size_t d = 0; d < h.dart_count(); ++d) {
        if (!s.contains(d)) out.push_back(d);
    }
    return out;
}

}  // namespace hmc
