#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "schemelab/error.hpp"

namespace schemelab {

/**
 * A hyperbolic mapping scheme: a finite vertex set with a self-map F and
 * a critical weight w(s) >= 0 per vertex. Valid schemes satisfy
 *   - every weight-zero vertex is an iterated forward image of a
 *     positive-weight vertex, and
 *   - every F-periodic cycle contains a vertex of positive weight.
 * The local degree is d(s) = w(s) + 1.
 */
struct MappingScheme {
    struct Vertex {
        int weight = 0;
        int image = 0;  // index of F(s)
    };

    std::vector<Vertex> vertices;

    int size() const { return static_cast<int>(vertices.size()); }
    int weight(int s) const { return vertices[s].weight; }
    int degree(int s) const { return vertices[s].weight + 1; }
    int image(int s) const { return vertices[s].image; }
};

struct CycleDecomposition {
    std::vector<std::vector<int>> cycles;  // each in cyclic F-order
    std::vector<int> tail_depth;           // distance to the vertex's cycle (0 on cycles)
    std::vector<int> cycle_of;             // index into cycles, per vertex
    std::set<int> free_vertices;           // vertices not in F(|S|)
};

struct CanonicalForm {
    std::string bytes;
    std::vector<int> relabeling;  // old index -> canonical index

    bool operator==(const CanonicalForm& o) const { return bytes == o.bytes; }
};

inline int total_weight(const MappingScheme& s) {
    int w = 0;
    for (const auto& v : s.vertices) w += v.weight;
    return w;
}

inline bool is_reduced(const MappingScheme& s) {
    for (const auto& v : s.vertices)
        if (v.weight == 0) return false;
    return true;
}

inline CycleDecomposition cycle_decomposition(const MappingScheme& s) {
    const int n = s.size();
    CycleDecomposition out;
    out.tail_depth.assign(n, -1);
    out.cycle_of.assign(n, -1);

    // Locate cycles of the functional graph: walk until a repeat.
    std::vector<int> state(n, 0);  // 0 unseen, 1 on current walk, 2 resolved
    std::vector<int> walk;
    for (int start = 0; start < n; ++start) {
        if (state[start] != 0) continue;
        walk.clear();
        int v = start;
        while (state[v] == 0) {
            state[v] = 1;
            walk.push_back(v);
            v = s.image(v);
        }
        if (state[v] == 1) {
            // Found a new cycle; v is its entry point on the walk.
            std::vector<int> cyc;
            auto it = std::find(walk.begin(), walk.end(), v);
            for (auto jt = it; jt != walk.end(); ++jt) cyc.push_back(*jt);
            int cid = static_cast<int>(out.cycles.size());
            for (int u : cyc) {
                out.cycle_of[u] = cid;
                out.tail_depth[u] = 0;
            }
            out.cycles.push_back(cyc);
        }
        for (auto jt = walk.rbegin(); jt != walk.rend(); ++jt) state[*jt] = 2;
    }
    // Tail depths and cycle membership for the rest, deepest first.
    // depth(v) = depth(F(v)) + 1 once F(v) is resolved.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            if (out.tail_depth[v] >= 0) continue;
            int w = s.image(v);
            if (out.tail_depth[w] >= 0) {
                out.tail_depth[v] = out.tail_depth[w] + 1;
                out.cycle_of[v] = out.cycle_of[w];
                changed = true;
            }
        }
    }

    std::vector<bool> in_image(n, false);
    for (int v = 0; v < n; ++v) in_image[s.image(v)] = true;
    for (int v = 0; v < n; ++v)
        if (!in_image[v]) out.free_vertices.insert(v);
    return out;
}

/**
 * Check the two scheme axioms; throws BadIndex, OrphanZeroVertex or
 * AllZeroCycle on violation.
 */
inline MappingScheme validate(const std::vector<MappingScheme::Vertex>& raw) {
    MappingScheme s{raw};
    const int n = s.size();
    if (n == 0) fail(ErrorCode::BadIndex, "scheme has no vertices");
    for (int v = 0; v < n; ++v) {
        if (s.image(v) < 0 || s.image(v) >= n)
            fail(ErrorCode::BadIndex, "vertex " + std::to_string(v) + " image out of range");
        if (s.weight(v) < 0)
            fail(ErrorCode::BadIndex, "vertex " + std::to_string(v) + " has negative weight");
    }

    auto dec = cycle_decomposition(s);
    for (const auto& cyc : dec.cycles) {
        bool heavy = false;
        for (int v : cyc) heavy = heavy || s.weight(v) > 0;
        if (!heavy)
            fail(ErrorCode::AllZeroCycle,
                 "cycle through vertex " + std::to_string(cyc.front()) + " has total weight 0");
    }

    // Forward closure of the positive-weight vertices (images after >= 1 step).
    std::vector<bool> hit(n, false);
    for (int v = 0; v < n; ++v) {
        if (s.weight(v) == 0) continue;
        int u = s.image(v);
        while (!hit[u]) {
            hit[u] = true;
            u = s.image(u);
        }
    }
    for (int v = 0; v < n; ++v)
        if (s.weight(v) == 0 && !hit[v])
            fail(ErrorCode::OrphanZeroVertex,
                 "weight-0 vertex " + std::to_string(v) + " is not postcritical");
    return s;
}

/**
 * Collapse degree-one edges: keep the positive-weight vertices, with
 * F-bar(s) = first positive-weight vertex on the forward orbit of F(s).
 * Surviving vertices keep their relative order.
 */
inline MappingScheme reduce(const MappingScheme& s) {
    std::vector<int> new_id(s.size(), -1);
    int count = 0;
    for (int v = 0; v < s.size(); ++v)
        if (s.weight(v) > 0) new_id[v] = count++;

    MappingScheme out;
    out.vertices.resize(count);
    for (int v = 0; v < s.size(); ++v) {
        if (s.weight(v) == 0) continue;
        int u = s.image(v);
        while (s.weight(u) == 0) u = s.image(u);  // terminates: every cycle is weighted
        out.vertices[new_id[v]] = {s.weight(v), new_id[u]};
    }
    return out;
}

inline MappingScheme disjoint_sum(const MappingScheme& a, const MappingScheme& b) {
    MappingScheme out = a;
    int off = a.size();
    for (const auto& v : b.vertices) out.vertices.push_back({v.weight, v.image + off});
    return out;
}

inline std::vector<MappingScheme> connected_components(const MappingScheme& s) {
    const int n = s.size();
    // Union-find over the undirected edges s -- F(s).
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int v = 0; v < n; ++v) parent[find(v)] = find(s.image(v));

    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < n; ++v) groups[find(v)].push_back(v);

    std::vector<MappingScheme> out;
    for (auto& [root, verts] : groups) {
        std::map<int, int> local;
        for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
        MappingScheme comp;
        for (int v : verts) comp.vertices.push_back({s.weight(v), local[s.image(v)]});
        out.push_back(std::move(comp));
    }
    return out;
}

namespace detail {

// Refine colors by (own color, image color, multiset of preimage colors)
// until the partition stabilizes.
inline void refine_colors(const MappingScheme& s, std::vector<int>& color) {
    const int n = s.size();
    while (true) {
        std::vector<std::vector<int>> pre(n);
        for (int v = 0; v < n; ++v) pre[s.image(v)].push_back(color[v]);
        for (auto& p : pre) std::sort(p.begin(), p.end());

        std::map<std::tuple<int, int, std::vector<int>>, int> ranks;
        std::vector<std::tuple<int, int, std::vector<int>>> sig(n);
        for (int v = 0; v < n; ++v) sig[v] = {color[v], color[s.image(v)], pre[v]};
        for (const auto& g : sig) ranks.emplace(g, 0);
        int r = 0;
        for (auto& [key, rank] : ranks) rank = r++;

        std::vector<int> next(n);
        for (int v = 0; v < n; ++v) next[v] = ranks[sig[v]];
        if (next == color) return;
        color = std::move(next);
    }
}

inline std::string bytes_for_order(const MappingScheme& s, const std::vector<int>& label) {
    // label: vertex -> canonical position. Encode (weight, image-label) rows
    // in canonical position order.
    const int n = s.size();
    std::vector<int> inv(n);
    for (int v = 0; v < n; ++v) inv[label[v]] = v;
    std::string bytes;
    bytes.reserve(2 * n);
    for (int pos = 0; pos < n; ++pos) {
        int v = inv[pos];
        bytes.push_back(static_cast<char>(s.weight(v)));
        bytes.push_back(static_cast<char>(label[s.image(v)]));
    }
    return bytes;
}

inline void canonical_search(const MappingScheme& s, std::vector<int> color, std::string& best,
                             std::vector<int>& best_label) {
    const int n = s.size();
    refine_colors(s, color);

    // Discrete iff all colors distinct.
    std::vector<int> count(n, 0);
    bool discrete = true;
    for (int v = 0; v < n; ++v)
        if (++count[color[v]] > 1) discrete = false;

    if (discrete) {
        std::string bytes = bytes_for_order(s, color);
        if (best.empty() || bytes < best) {
            best = bytes;
            best_label = color;
        }
        return;
    }

    // Individualize each member of the first non-singleton class.
    int target = -1;
    for (int c = 0; c < n && target < 0; ++c)
        if (count[c] > 1) target = c;
    for (int v = 0; v < n; ++v) {
        if (color[v] != target) continue;
        std::vector<int> next(n);
        for (int u = 0; u < n; ++u) next[u] = 2 * color[u] + 1;
        next[v] = 2 * target;  // strictly before its old classmates
        canonical_search(s, next, best, best_label);
    }
}

}  // namespace detail

/**
 * Canonical form under weight-preserving F-equivariant relabeling:
 * iterated color refinement seeded by (weight, in-degree, on-cycle flag,
 * cycle length), with backtracking over tied classes. Two schemes are
 * isomorphic iff their canonical bytes agree.
 */
inline CanonicalForm canonical_form(const MappingScheme& s) {
    const int n = s.size();
    auto dec = cycle_decomposition(s);
    std::vector<int> indeg(n, 0);
    for (int v = 0; v < n; ++v) indeg[s.image(v)]++;

    std::vector<std::tuple<int, int, int, int>> seed(n);
    for (int v = 0; v < n; ++v) {
        int on_cycle = dec.tail_depth[v] == 0 ? 1 : 0;
        int cyc_len = static_cast<int>(dec.cycles[dec.cycle_of[v]].size());
        seed[v] = {s.weight(v), indeg[v], on_cycle, cyc_len};
    }
    std::map<std::tuple<int, int, int, int>, int> ranks;
    for (const auto& g : seed) ranks.emplace(g, 0);
    int r = 0;
    for (auto& [key, rank] : ranks) rank = r++;
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = ranks[seed[v]];

    CanonicalForm out;
    detail::canonical_search(s, color, out.bytes, out.relabeling);
    return out;
}

inline bool is_isomorphic(const MappingScheme& a, const MappingScheme& b) {
    if (a.size() != b.size() || total_weight(a) != total_weight(b)) return false;
    return canonical_form(a).bytes == canonical_form(b).bytes;
}

/// One vertex per line: "id weight image-id", 0-based, '#' starts a comment.
inline std::string serialize(const MappingScheme& s) {
    std::ostringstream os;
    for (int v = 0; v < s.size(); ++v) os << v << ' ' << s.weight(v) << ' ' << s.image(v) << '\n';
    return os.str();
}

inline MappingScheme parse_scheme(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::map<int, MappingScheme::Vertex> rows;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long long id, w, img;
        if (!(ls >> id)) continue;  // blank or comment-only line
        if (!(ls >> w >> img))
            fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected 'id weight image'");
        std::string rest;
        if (ls >> rest)
            fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": trailing tokens");
        if (rows.count(static_cast<int>(id)))
            fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": duplicate id");
        rows[static_cast<int>(id)] = {static_cast<int>(w), static_cast<int>(img)};
    }
    if (rows.empty()) fail(ErrorCode::ParseError, "no vertex rows found");
    std::vector<MappingScheme::Vertex> verts;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
        auto it = rows.find(i);
        if (it == rows.end())
            fail(ErrorCode::ParseError, "ids are not a contiguous 0-based range");
        verts.push_back(it->second);
    }
    return validate(verts);
}

/// DOT export: one directed edge per vertex, labelled with the degree;
/// positive-weight vertices are drawn heavy.
inline std::string to_dot(const MappingScheme& s) {
    std::ostringstream os;
    os << "digraph scheme {\n";
    for (int v = 0; v < s.size(); ++v) {
        if (s.weight(v) > 0)
            os << "  s" << v << " [label=\"s" << v << "\\nw=" << s.weight(v)
               << "\", shape=circle, style=bold, penwidth=2];\n";
        else
            os << "  s" << v << " [label=\"s" << v << "\", shape=circle, width=0.2, fontsize=8];\n";
    }
    for (int v = 0; v < s.size(); ++v)
        os << "  s" << v << " -> s" << s.image(v) << " [label=\"" << s.degree(v) << "\"];\n";
    os << "}\n";
    return os.str();
}

// Small builders used throughout the tests and the census.

inline MappingScheme make_scheme(std::initializer_list<std::pair<int, int>> weight_image) {
    std::vector<MappingScheme::Vertex> v;
    for (auto [w, img] : weight_image) v.push_back({w, img});
    return validate(v);
}

/// The weight-w single fixed vertex (w=1 gives the smallest scheme).
inline MappingScheme fixed_vertex_scheme(int w) { return make_scheme({{w, 0}}); }

/// Two weight-1 vertices exchanged by F.
inline MappingScheme bitransitive_scheme() { return make_scheme({{1, 1}, {1, 0}}); }

/// s1 -> s2 -> s2 with both weights 1.
inline MappingScheme capture_scheme() { return make_scheme({{1, 1}, {1, 1}}); }

/// Two disjoint weight-1 fixed vertices.
inline MappingScheme decomposable_scheme() { return make_scheme({{1, 0}, {1, 1}}); }

}  // namespace schemelab
