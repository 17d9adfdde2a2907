#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "fock.hpp"
#include "partitions.hpp"

namespace toricgw {

// Edge of a Z_k-colored labelled graph, oriented tail -> head with
// color(head) = color(tail) + 1 (mod k). The class of the edge is the tail color.
struct ColoredEdge {
    int tail = 0;
    int head = 0;
    int degree = 1;
    auto operator<=>(const ColoredEdge&) const = default;
};

struct ColoredGraph {
    int colors = 2;
    std::vector<int> vertex_color;
    std::vector<ColoredEdge> edges;

    int vertex_count() const { return static_cast<int>(vertex_color.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }

    int edge_class(const ColoredEdge& e) const {
        return vertex_color[static_cast<size_t>(e.tail)];
    }

    void validate() const {
        if (colors < 2) throw std::domain_error("ColoredGraph: need k >= 2");
        for (int c : vertex_color)
            if (c < 0 || c >= colors) throw std::domain_error("ColoredGraph: vertex color out of range");
        std::vector<int> valence(vertex_color.size(), 0);
        for (auto& e : edges) {
            if (e.tail < 0 || e.tail >= vertex_count() || e.head < 0 || e.head >= vertex_count())
                throw std::domain_error("ColoredGraph: edge endpoint out of range");
            if (e.degree < 1) throw std::domain_error("ColoredGraph: edge degree must be >= 1");
            int tc = vertex_color[static_cast<size_t>(e.tail)];
            int hc = vertex_color[static_cast<size_t>(e.head)];
            if ((tc + 1) % colors != hc)
                throw std::domain_error("ColoredGraph: edge endpoints are not consecutively colored");
            ++valence[static_cast<size_t>(e.tail)];
            ++valence[static_cast<size_t>(e.head)];
        }
        for (int v : valence)
            if (v == 0) throw std::domain_error("ColoredGraph: isolated vertex");
    }

    bool connected() const {
        if (vertex_count() == 0) return false;
        std::vector<int> parent(vertex_color.size());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[static_cast<size_t>(x)] != x) {
                parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
                x = parent[static_cast<size_t>(x)];
            }
            return x;
        };
        for (auto& e : edges) parent[static_cast<size_t>(find(e.tail))] = find(e.head);
        int root = find(0);
        for (int v = 1; v < vertex_count(); ++v)
            if (find(v) != root) return false;
        return true;
    }
};

// Vertex type: color together with the outgoing/incoming degree partitions.
struct AtomType {
    int color = 0;
    Partition plus;
    Partition minus;
    auto operator<=>(const AtomType&) const = default;
};

// Multiset of atoms; realizable profiles satisfy the per-color balance condition.
struct AtomProfile {
    int colors = 2;
    std::map<AtomType, int> counts;

    void add(const AtomType& t, int n = 1) {
        if (t.plus.empty() && t.minus.empty())
            throw std::domain_error("AtomProfile: atom with both partitions empty");
        if (t.color < 0 || t.color >= colors)
            throw std::domain_error("AtomProfile: color out of range");
        if (n <= 0) throw std::domain_error("AtomProfile: count must be positive");
        counts[t] += n;
    }

    int total_bonds() const {
        int b = 0;
        for (auto& [t, n] : counts) b += n * (t.plus.length() + t.minus.length());
        return b;
    }

    std::vector<int> degree() const {
        std::vector<int> d(static_cast<size_t>(colors), 0);
        for (auto& [t, n] : counts) d[static_cast<size_t>(t.color)] += n * t.plus.weight();
        return d;
    }

    // Outgoing parts at color i must match incoming parts at color i+1.
    bool balanced() const {
        std::vector<Partition> outgoing(static_cast<size_t>(colors));
        std::vector<Partition> incoming(static_cast<size_t>(colors));
        for (auto& [t, n] : counts)
            for (int rep = 0; rep < n; ++rep) {
                outgoing[static_cast<size_t>(t.color)] = merged(outgoing[static_cast<size_t>(t.color)], t.plus);
                incoming[static_cast<size_t>(t.color)] = merged(incoming[static_cast<size_t>(t.color)], t.minus);
            }
        for (int i = 0; i < colors; ++i)
            if (outgoing[static_cast<size_t>(i)] != incoming[static_cast<size_t>((i + 1) % colors)])
                return false;
        return true;
    }

    bool operator==(const AtomProfile& o) const { return colors == o.colors && counts == o.counts; }
    bool operator<(const AtomProfile& o) const {
        return std::tie(colors, counts) < std::tie(o.colors, o.counts);
    }
};

struct GraphInvariants {
    int genus = 0;
    std::vector<int> degree;
    AtomProfile profile;
};

inline GraphInvariants graph_invariants(const ColoredGraph& g) {
    g.validate();
    GraphInvariants inv;
    inv.genus = 1 - g.vertex_count() + g.edge_count();
    inv.degree.assign(static_cast<size_t>(g.colors), 0);
    inv.profile.colors = g.colors;

    std::vector<std::vector<int>> out_parts(g.vertex_color.size());
    std::vector<std::vector<int>> in_parts(g.vertex_color.size());
    for (auto& e : g.edges) {
        inv.degree[static_cast<size_t>(g.edge_class(e))] += e.degree;
        out_parts[static_cast<size_t>(e.tail)].push_back(e.degree);
        in_parts[static_cast<size_t>(e.head)].push_back(e.degree);
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto desc = [](std::vector<int> p) {
            std::sort(p.begin(), p.end(), std::greater<int>());
            return Partition(std::move(p));
        };
        AtomType t{g.vertex_color[static_cast<size_t>(v)],
                   desc(out_parts[static_cast<size_t>(v)]), desc(in_parts[static_cast<size_t>(v)])};
        inv.profile.add(t);
    }
    return inv;
}

// |Aut|: sum over color-preserving vertex bijections that preserve the edge
// signature multiset, weighted by the parallel-edge permutations.
inline Integer automorphism_order(const ColoredGraph& g) {
    g.validate();
    using Signature = std::tuple<int, int, int>;  // (tail, head, degree)
    std::map<Signature, int> mult;
    for (auto& e : g.edges) ++mult[{e.tail, e.head, e.degree}];

    Integer parallel = 1;
    for (auto& [sig, m] : mult) parallel *= factorial(m);

    // Vertices grouped by color; permute within each color class.
    std::map<int, std::vector<int>> by_color;
    for (int v = 0; v < g.vertex_count(); ++v)
        by_color[g.vertex_color[static_cast<size_t>(v)]].push_back(v);

    std::vector<int> image(g.vertex_color.size());
    Integer vertex_autos = 0;
    auto consistent = [&]() {
        std::map<Signature, int> mapped;
        for (auto& e : g.edges)
            ++mapped[{image[static_cast<size_t>(e.tail)], image[static_cast<size_t>(e.head)], e.degree}];
        return mapped == mult;
    };
    auto rec = [&](auto&& self, std::map<int, std::vector<int>>::iterator it) -> void {
        if (it == by_color.end()) {
            if (consistent()) ++vertex_autos;
            return;
        }
        std::vector<int> perm = it->second;
        std::sort(perm.begin(), perm.end());
        do {
            for (size_t i = 0; i < perm.size(); ++i)
                image[static_cast<size_t>(it->second[i])] = perm[i];
            self(self, std::next(it));
        } while (std::next_permutation(perm.begin(), perm.end()));
    };
    rec(rec, by_color.begin());
    return vertex_autos * parallel;
}

namespace detail {

// Minimal incidence encoding over color-preserving relabelings.
inline std::vector<int> canonical_key(const ColoredGraph& g) {
    std::map<int, std::vector<int>> by_color;
    for (int v = 0; v < g.vertex_count(); ++v)
        by_color[g.vertex_color[static_cast<size_t>(v)]].push_back(v);

    // New ids are assigned color-major.
    std::map<int, int> color_offset;
    int off = 0;
    for (auto& [c, vs] : by_color) {
        color_offset[c] = off;
        off += static_cast<int>(vs.size());
    }

    std::vector<int> best;
    std::vector<int> newid(g.vertex_color.size());
    auto rec = [&](auto&& self, std::map<int, std::vector<int>>::iterator it) -> void {
        if (it == by_color.end()) {
            std::vector<std::tuple<int, int, int, int>> enc;
            enc.reserve(g.edges.size());
            for (auto& e : g.edges)
                enc.emplace_back(g.edge_class(e), e.degree, newid[static_cast<size_t>(e.tail)],
                                 newid[static_cast<size_t>(e.head)]);
            std::sort(enc.begin(), enc.end());
            std::vector<int> flat;
            flat.push_back(g.colors);
            for (auto& [c, vs] : by_color) {
                flat.push_back(c);
                flat.push_back(static_cast<int>(vs.size()));
            }
            for (auto& [a, b, c, d] : enc) {
                flat.push_back(a);
                flat.push_back(b);
                flat.push_back(c);
                flat.push_back(d);
            }
            if (best.empty() || flat < best) best = std::move(flat);
            return;
        }
        std::vector<int> perm = it->second;
        std::sort(perm.begin(), perm.end());
        do {
            for (size_t i = 0; i < perm.size(); ++i)
                newid[static_cast<size_t>(perm[i])] = color_offset[it->first] + static_cast<int>(i);
            self(self, std::next(it));
        } while (std::next_permutation(perm.begin(), perm.end()));
    };
    rec(rec, by_color.begin());
    return best;
}

inline void set_partitions(int n, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> block(static_cast<size_t>(n), 0);
    auto rec = [&](auto&& self, int i, int max_used) -> void {
        if (i == n) {
            visit(block);
            return;
        }
        for (int b = 0; b <= max_used + 1; ++b) {
            block[static_cast<size_t>(i)] = b;
            self(self, i + 1, std::max(max_used, b));
        }
    };
    if (n == 0)
        visit(block);
    else
        rec(rec, 0, -1);
}

}  // namespace detail

// One representative per isomorphism class of graphs with the given edge
// multiset (one degree partition per class), paired with its automorphism order.
inline std::vector<std::pair<ColoredGraph, Integer>> enumerate_graphs_with_edges(
    int k, const std::vector<Partition>& class_degrees, bool connected_only) {
    if (k < 2) throw std::domain_error("enumerate_graphs_with_edges: need k >= 2");
    if (class_degrees.size() != static_cast<size_t>(k))
        throw std::domain_error("enumerate_graphs_with_edges: class arity mismatch");

    struct EdgeStub {
        int cls;
        int degree;
    };
    std::vector<EdgeStub> stubs;
    for (int i = 0; i < k; ++i)
        for (int d : class_degrees[static_cast<size_t>(i)].parts()) stubs.push_back({i, d});
    if (stubs.empty()) throw std::domain_error("enumerate_graphs_with_edges: no edges");

    // Slot lists per color: tails of class c, then heads of class c-1. A graph
    // structure is one set partition of each color's slots into vertices.
    std::vector<std::vector<std::pair<int, bool>>> slots(static_cast<size_t>(k));  // (edge, is_tail)
    for (size_t e = 0; e < stubs.size(); ++e) {
        slots[static_cast<size_t>(stubs[e].cls)].push_back({static_cast<int>(e), true});
        slots[static_cast<size_t>((stubs[e].cls + 1) % k)].push_back({static_cast<int>(e), false});
    }

    std::map<std::vector<int>, std::pair<ColoredGraph, Integer>> found;
    std::vector<std::vector<int>> assignment(static_cast<size_t>(k));
    auto rec = [&](auto&& self, int color) -> void {
        if (color == k) {
            ColoredGraph g;
            g.colors = k;
            std::vector<std::pair<int, int>> endpoint(stubs.size(), {-1, -1});  // (tail, head)
            for (int c = 0; c < k; ++c) {
                int blocks = 0;
                for (int b : assignment[static_cast<size_t>(c)]) blocks = std::max(blocks, b + 1);
                int base = g.vertex_count();
                for (int b = 0; b < blocks; ++b) g.vertex_color.push_back(c);
                for (size_t sidx = 0; sidx < assignment[static_cast<size_t>(c)].size(); ++sidx) {
                    auto [eidx, is_tail] = slots[static_cast<size_t>(c)][sidx];
                    int vid = base + assignment[static_cast<size_t>(c)][sidx];
                    if (is_tail)
                        endpoint[static_cast<size_t>(eidx)].first = vid;
                    else
                        endpoint[static_cast<size_t>(eidx)].second = vid;
                }
            }
            for (size_t e = 0; e < stubs.size(); ++e)
                g.edges.push_back({endpoint[e].first, endpoint[e].second, stubs[e].degree});
            std::sort(g.edges.begin(), g.edges.end());
            if (connected_only && !g.connected()) return;
            auto key = detail::canonical_key(g);
            if (!found.count(key)) found.emplace(std::move(key), std::make_pair(g, automorphism_order(g)));
            return;
        }
        detail::set_partitions(static_cast<int>(slots[static_cast<size_t>(color)].size()),
                               [&](const std::vector<int>& blocks) {
                                   assignment[static_cast<size_t>(color)] = blocks;
                                   self(self, color + 1);
                               });
    };
    rec(rec, 0);

    std::vector<std::pair<ColoredGraph, Integer>> out;
    out.reserve(found.size());
    for (auto& [key, value] : found) out.push_back(value);
    return out;
}

// One representative per isomorphism class of graphs with the given degree
// vector (all genera), paired with its automorphism order.
inline std::vector<std::pair<ColoredGraph, Integer>> enumerate_graphs(
    int k, const std::vector<int>& degree, bool connected_only) {
    if (k < 2) throw std::domain_error("enumerate_graphs: need k >= 2");
    if (degree.size() != static_cast<size_t>(k))
        throw std::domain_error("enumerate_graphs: degree vector arity mismatch");
    bool any = false;
    for (int d : degree) {
        if (d < 0) throw std::domain_error("enumerate_graphs: negative degree");
        if (d > 0) any = true;
    }
    if (!any) throw std::domain_error("enumerate_graphs: zero degree vector");

    std::vector<std::vector<Partition>> class_choices(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i)
        class_choices[static_cast<size_t>(i)] = enumerate_partitions(degree[static_cast<size_t>(i)]);

    // Distinct edge multisets can never yield isomorphic graphs, so the union
    // over per-class degree partitions needs no cross-deduplication.
    std::vector<std::pair<ColoredGraph, Integer>> out;
    std::vector<Partition> chosen(static_cast<size_t>(k));
    auto iterate = [&](auto&& self, int cls) -> void {
        if (cls == k) {
            auto batch = enumerate_graphs_with_edges(k, chosen, connected_only);
            out.insert(out.end(), batch.begin(), batch.end());
            return;
        }
        for (const Partition& p : class_choices[static_cast<size_t>(cls)]) {
            chosen[static_cast<size_t>(cls)] = p;
            self(self, cls + 1);
        }
    };
    iterate(iterate, 0);
    return out;
}

// Left side of the chemistry lemma: the abnormally ordered vev of the profile's
// atom word with 1/(n! z z) weights. Unbalanced profiles give 0; empty gives 1.
inline Rational chemistry_vev(const AtomProfile& profile) {
    RationalBosonWord word;
    Rational scalar = 1;
    for (auto& [atom, n] : profile.counts) {
        Rational zz = Rational(atom.plus.z_factor() * atom.minus.z_factor());
        scalar /= rat_pow(zz, n) * Rational(factorial(n));
        for (int rep = 0; rep < n; ++rep) {
            word.append_annihilators(atom.color, atom.plus, Rational(1));
            word.append_creators((atom.color - 1 + profile.colors) % profile.colors, atom.minus,
                                 Rational(1));
        }
    }
    if (word.factors.empty()) return 1;
    return scalar * vev(order_abnormally(std::move(word)), profile.colors);
}

// Right side of the chemistry lemma, by exhaustive graph enumeration. Only
// graphs over the profile's own edge multiset can realize it.
inline Rational chemistry_graph_sum(const AtomProfile& profile) {
    if (profile.counts.empty()) return 1;
    if (!profile.balanced()) return 0;
    std::vector<Partition> class_degrees(static_cast<size_t>(profile.colors));
    for (auto& [atom, n] : profile.counts)
        for (int rep = 0; rep < n; ++rep)
            class_degrees[static_cast<size_t>(atom.color)] =
                merged(class_degrees[static_cast<size_t>(atom.color)], atom.plus);
    Rational total = 0;
    for (auto& [graph, aut] : enumerate_graphs_with_edges(profile.colors, class_degrees, false)) {
        auto inv = graph_invariants(graph);
        if (!(inv.profile == profile)) continue;
        Integer weight = aut;
        for (auto& e : graph.edges) weight *= e.degree;
        total += Rational(1) / Rational(weight);
    }
    return total;
}

}  // namespace toricgw
