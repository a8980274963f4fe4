#pragma once

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

#include "schemelab/error.hpp"
#include "schemelab/rational_angle.hpp"
#include "schemelab/scheme.hpp"

namespace schemelab {

/**
 * An angled dynamical tree: a finite simplicial tree with vertex dynamics
 * f, local degrees d(v) >= 1, and rational angles between pairs of edges
 * incident at a common vertex. Angles are exact rationals mod 1.
 */
struct AngledTree {
    struct Vertex {
        int local_degree = 1;
        std::string label;
    };

    std::vector<Vertex> vertices;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> vertex_map;
    // ordered pairs (v, e, e') of distinct incident edges
    std::map<std::tuple<int, int, int>, RationalAngle> angles;

    int size() const { return static_cast<int>(vertices.size()); }

    std::vector<int> incident(int v) const {
        std::vector<int> out;
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (edges[e].first == v || edges[e].second == v) out.push_back(static_cast<int>(e));
        return out;
    }

    int other_end(int e, int v) const {
        return edges[e].first == v ? edges[e].second : edges[e].first;
    }

    RationalAngle angle(int v, int e1, int e2) const {
        if (e1 == e2) return RationalAngle::zero();
        auto it = angles.find({v, e1, e2});
        return it == angles.end() ? RationalAngle::zero() : it->second;
    }

    /// Assign a direction to each incident edge; pair angles follow as
    /// differences (automatically skew-symmetric and additive).
    void set_directions(int v, const std::vector<std::pair<int, RationalAngle>>& dirs) {
        for (const auto& [e1, a1] : dirs)
            for (const auto& [e2, a2] : dirs)
                if (e1 != e2) angles[{v, e1, e2}] = a2 - a1;
    }

    /// Vertex path from u to w (inclusive); the tree path is unique.
    std::vector<int> path(int u, int w) const {
        std::vector<int> prev(vertices.size(), -1);
        std::queue<int> bfs;
        bfs.push(u);
        prev[u] = u;
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop();
            if (v == w) break;
            for (int e : incident(v)) {
                int o = other_end(e, v);
                if (prev[o] < 0) {
                    prev[o] = v;
                    bfs.push(o);
                }
            }
        }
        std::vector<int> out;
        for (int v = w; v != u; v = prev[v]) {
            if (prev[v] < 0) fail(ErrorCode::BadIndex, "tree is not connected");
            out.push_back(v);
        }
        out.push_back(u);
        std::reverse(out.begin(), out.end());
        return out;
    }

    int edge_between(int u, int w) const {
        for (std::size_t e = 0; e < edges.size(); ++e)
            if ((edges[e].first == u && edges[e].second == w) ||
                (edges[e].first == w && edges[e].second == u))
                return static_cast<int>(e);
        return -1;
    }

    /// Image germ at f(v) of an edge incident at v: the first edge of the
    /// path joining the images of the endpoints.
    int image_germ(int v, int e) const {
        int w = other_end(e, v);
        int fv = vertex_map[v], fw = vertex_map[w];
        if (fv == fw) fail(ErrorCode::BadIndex, "edge endpoints map to the same vertex");
        auto p = path(fv, fw);
        return edge_between(p[0], p[1]);
    }
};

enum class VertexKind { Fatou, Julia };

/// Fatou vertices eventually map into a critical cycle; the rest are Julia.
inline std::vector<VertexKind> vertex_kinds(const AngledTree& t) {
    const int n = t.size();
    // periodic vertices on cycles that contain a critical vertex
    std::vector<int> state(n, 0);
    std::vector<bool> on_critical_cycle(n, false);
    for (int start = 0; start < n; ++start) {
        if (state[start] != 0) continue;
        std::vector<int> walk;
        int v = start;
        while (state[v] == 0) {
            state[v] = 1;
            walk.push_back(v);
            v = t.vertex_map[v];
        }
        if (state[v] == 1) {
            auto it = std::find(walk.begin(), walk.end(), v);
            bool critical = false;
            for (auto jt = it; jt != walk.end(); ++jt) critical = critical || t.vertices[*jt].local_degree > 1;
            if (critical)
                for (auto jt = it; jt != walk.end(); ++jt) on_critical_cycle[*jt] = true;
        }
        for (int u : walk) state[u] = 2;
    }
    std::vector<VertexKind> kinds(n, VertexKind::Julia);
    for (int v = 0; v < n; ++v) {
        int u = v;
        for (int steps = 0; steps <= n; ++steps) {
            if (on_critical_cycle[u]) {
                kinds[v] = VertexKind::Fatou;
                break;
            }
            u = t.vertex_map[u];
        }
    }
    return kinds;
}

inline int total_tree_degree(const AngledTree& t) {
    int d = 1;
    for (const auto& v : t.vertices) d += v.local_degree - 1;
    return d;
}

/// Image path of an edge: the unique tree path joining the images of its
/// endpoints.
inline std::vector<int> edge_image(const AngledTree& t, int e) {
    auto [u, w] = t.edges[e];
    return t.path(t.vertex_map[u], t.vertex_map[w]);
}

struct AxiomReport {
    bool tree_structure = false;
    bool endpoints_separate = false;
    bool angle_laws = false;
    bool angle_compatibility = false;
    bool normalized = false;
    bool expanding = false;
    bool total_degree_ok = false;
    std::vector<std::string> failures;

    bool all_pass() const {
        return tree_structure && endpoints_separate && angle_laws && angle_compatibility &&
               normalized && expanding && total_degree_ok;
    }
};

/**
 * Check the abstract Hubbard tree axioms: simplicial tree, endpoint
 * separation under f, the angle laws, degree-weighted angle
 * compatibility, normalization at periodic Julia vertices, and the
 * expansion condition on adjacent Julia pairs.
 */
inline AxiomReport check_axioms(const AngledTree& t) {
    AxiomReport rep;
    const int n = t.size();
    auto note = [&](const std::string& s) { rep.failures.push_back(s); };

    // tree structure
    rep.tree_structure = static_cast<int>(t.edges.size()) == n - 1;
    for (auto [u, w] : t.edges) rep.tree_structure = rep.tree_structure && u != w;
    if (rep.tree_structure) {
        try {
            for (int v = 0; v < n; ++v) t.path(0, v);
        } catch (const Error&) {
            rep.tree_structure = false;
        }
    }
    if (!rep.tree_structure) {
        note("underlying graph is not a tree");
        return rep;  // nothing else is well defined
    }

    rep.total_degree_ok = total_tree_degree(t) >= 2;
    if (!rep.total_degree_ok) note("total degree below 2 (no critical vertex)");

    // endpoint separation
    rep.endpoints_separate = true;
    for (std::size_t e = 0; e < t.edges.size(); ++e) {
        auto [u, w] = t.edges[e];
        if (t.vertex_map[u] == t.vertex_map[w]) {
            rep.endpoints_separate = false;
            note("edge " + std::to_string(e) + " endpoints collapse under f");
        }
    }

    // angle laws: skew symmetry, zero iff equal, additivity
    rep.angle_laws = true;
    for (int v = 0; v < n; ++v) {
        auto inc = t.incident(v);
        for (int e1 : inc)
            for (int e2 : inc) {
                if (e1 == e2) continue;
                auto a12 = t.angle(v, e1, e2);
                if (a12.is_zero()) {
                    rep.angle_laws = false;
                    note("angle zero for distinct edges at vertex " + std::to_string(v));
                }
                if (!(a12 + t.angle(v, e2, e1)).is_zero()) {
                    rep.angle_laws = false;
                    note("angles not skew symmetric at vertex " + std::to_string(v));
                }
                for (int e3 : inc) {
                    if (e3 == e1 || e3 == e2) continue;
                    if (t.angle(v, e1, e3) != a12 + t.angle(v, e2, e3)) {
                        rep.angle_laws = false;
                        note("angle additivity fails at vertex " + std::to_string(v));
                    }
                }
            }
    }

    // degree-weighted compatibility under the induced edge map
    rep.angle_compatibility = rep.endpoints_separate;
    if (rep.endpoints_separate) {
        for (int v = 0; v < n; ++v) {
            auto inc = t.incident(v);
            for (int e1 : inc)
                for (int e2 : inc) {
                    if (e1 >= e2) continue;
                    int g1 = t.image_germ(v, e1), g2 = t.image_germ(v, e2);
                    RationalAngle lhs = (g1 == g2) ? RationalAngle::zero()
                                                   : t.angle(t.vertex_map[v], g1, g2);
                    RationalAngle rhs = t.angle(v, e1, e2).times(t.vertices[v].local_degree);
                    if (lhs != rhs) {
                        rep.angle_compatibility = false;
                        note("angle compatibility fails at vertex " + std::to_string(v));
                    }
                }
        }
    }

    auto kinds = vertex_kinds(t);

    // normalization at periodic Julia vertices
    rep.normalized = true;
    for (int v = 0; v < n; ++v) {
        if (kinds[v] != VertexKind::Julia) continue;
        // periodic?
        int u = v;
        bool periodic = false;
        for (int steps = 1; steps <= n; ++steps) {
            u = t.vertex_map[u];
            if (u == v) {
                periodic = true;
                break;
            }
        }
        if (!periodic) continue;
        auto inc = t.incident(v);
        int m = static_cast<int>(inc.size());
        if (m < 2) continue;
        for (int e1 : inc)
            for (int e2 : inc) {
                if (e1 == e2) continue;
                if (!t.angle(v, e1, e2).times(m).is_zero()) {
                    rep.normalized = false;
                    note("angles at periodic Julia vertex " + std::to_string(v) +
                         " are not multiples of 1/" + std::to_string(m));
                }
            }
    }

    // expansion on adjacent Julia pairs
    rep.expanding = true;
    int bound = n * n;
    for (auto [u, w] : t.edges) {
        if (kinds[u] != VertexKind::Julia || kinds[w] != VertexKind::Julia) continue;
        int a = u, b = w;
        bool separated = false;
        for (int step = 0; step <= bound; ++step) {
            if (static_cast<int>(t.path(a, b).size()) > 2) {
                separated = true;
                break;
            }
            a = t.vertex_map[a];
            b = t.vertex_map[b];
        }
        if (!separated) {
            rep.expanding = false;
            note("expansion fails on the Julia edge (" + std::to_string(u) + "," +
                 std::to_string(w) + ")");
        }
    }
    return rep;
}

/**
 * Insert a weight-zero midpoint vertex into every edge of a reduced
 * scheme: F(s) = s-sharp and F(s-sharp) = F-bar(s), so the square of the
 * new map restricts to the old one.
 */
inline MappingScheme double_scheme(const MappingScheme& reduced) {
    if (!is_reduced(reduced)) fail(ErrorCode::BadIndex, "doubling expects a reduced scheme");
    const int n = reduced.size();
    std::vector<MappingScheme::Vertex> verts(2 * n);
    for (int v = 0; v < n; ++v) {
        verts[v] = {reduced.weight(v), n + v};
        verts[n + v] = {0, reduced.image(v)};
    }
    return validate(verts);
}

struct BuiltTree {
    AngledTree tree;
    std::vector<int> scheme_vertex;  // tree index of each doubled-scheme vertex
    std::vector<int> hub;            // tree index of the hub p_i per cycle
    int junction = -1;               // tree index of q
};

/**
 * The scheme-to-tree construction: a star around a fixed hub for each
 * doubled cycle, spoke segments at the critical representatives, and a
 * common fixed junction q collecting one segment per critical vertex
 * class, with the folding angle 1/d at each attachment.
 */
inline BuiltTree build_tree(const MappingScheme& reduced) {
    MappingScheme dbl = double_scheme(reduced);
    const int nbar = reduced.size();
    auto dec = cycle_decomposition(reduced);

    BuiltTree out;
    AngledTree& t = out.tree;

    // vertices 0..2n-1 mirror the doubled scheme
    for (int v = 0; v < dbl.size(); ++v) {
        std::string label = v < nbar ? "s" + std::to_string(v) : "s" + std::to_string(v - nbar) + "#";
        t.vertices.push_back({dbl.degree(v), label});
    }
    out.scheme_vertex.resize(dbl.size());
    for (int v = 0; v < dbl.size(); ++v) out.scheme_vertex[v] = v;

    // representative critical vertex per cycle: lowest id
    std::vector<int> reps;
    for (const auto& cyc : dec.cycles) reps.push_back(*std::min_element(cyc.begin(), cyc.end()));

    // aperiodic critical vertices in id order
    std::vector<int> aperiodic;
    for (int v = 0; v < nbar; ++v)
        if (dec.tail_depth[v] > 0) aperiodic.push_back(v);

    // hubs with their stars
    std::vector<int> star_edge_at(dbl.size(), -1);  // the star edge at each periodic vertex
    for (std::size_t ci = 0; ci < dec.cycles.size(); ++ci) {
        int rep = reps[ci];
        // doubled cycle in F-order starting at the representative
        std::vector<int> ring;
        int v = rep;
        do {
            ring.push_back(v);           // s_k
            ring.push_back(nbar + v);    // s_k sharp
            v = reduced.image(v);
        } while (v != rep);

        int hub = t.size();
        t.vertices.push_back({1, "p" + std::to_string(ci)});
        t.vertex_map.resize(t.size());  // grown below; placeholder
        out.hub.push_back(hub);

        std::vector<std::pair<int, RationalAngle>> hub_dirs;
        for (std::size_t k = 0; k < ring.size(); ++k) {
            int e = static_cast<int>(t.edges.size());
            t.edges.emplace_back(ring[k], hub);
            star_edge_at[ring[k]] = e;
            hub_dirs.emplace_back(e, RationalAngle(static_cast<std::int64_t>(k),
                                                   static_cast<std::int64_t>(ring.size())));
        }
        t.set_directions(hub, hub_dirs);
    }

    // junction q
    int q = t.size();
    t.vertices.push_back({1, "q"});
    out.junction = q;

    // segments ell_i at aperiodic critical vertices
    std::vector<int> ell_edge(nbar, -1);
    for (int v : aperiodic) {
        int e = static_cast<int>(t.edges.size());
        t.edges.emplace_back(v, nbar + v);
        ell_edge[v] = e;
    }

    // spokes e_i at all critical representatives, merged at q
    std::vector<int> spoke_order;
    for (int rep : reps) spoke_order.push_back(rep);
    for (int v : aperiodic) spoke_order.push_back(v);

    std::vector<std::pair<int, RationalAngle>> q_dirs;
    for (std::size_t i = 0; i < spoke_order.size(); ++i) {
        int v = spoke_order[i];
        int e = static_cast<int>(t.edges.size());
        t.edges.emplace_back(v, q);
        q_dirs.emplace_back(e, RationalAngle(static_cast<std::int64_t>(i),
                                             static_cast<std::int64_t>(spoke_order.size())));
        // at v: the spoke sits 1/d(v) past the reference segment
        int ref = dec.tail_depth[v] == 0 ? star_edge_at[v] : ell_edge[v];
        t.set_directions(v, {{ref, RationalAngle::zero()},
                             {e, RationalAngle(1, reduced.degree(v))}});
    }
    t.set_directions(q, q_dirs);

    // dynamics: doubled scheme on the scheme vertices, hubs and q fixed
    t.vertex_map.assign(t.size(), 0);
    for (int v = 0; v < dbl.size(); ++v) t.vertex_map[v] = dbl.image(v);
    for (int hub : out.hub) t.vertex_map[hub] = hub;
    t.vertex_map[q] = q;

    return out;
}

/**
 * Read the reduced scheme back off a tree: vertices are the critical
 * tree vertices, weights are d(v) - 1, and F sends v to the first
 * critical vertex on the forward orbit of f(v).
 */
inline MappingScheme scheme_of_tree(const AngledTree& t) {
    std::vector<int> crit;
    for (int v = 0; v < t.size(); ++v)
        if (t.vertices[v].local_degree > 1) crit.push_back(v);
    if (crit.empty()) fail(ErrorCode::NoCriticalVertex, "tree has no critical vertex");

    std::map<int, int> index;
    for (std::size_t i = 0; i < crit.size(); ++i) index[crit[i]] = static_cast<int>(i);

    std::vector<MappingScheme::Vertex> verts;
    for (int v : crit) {
        int u = t.vertex_map[v];
        int guard = 0;
        while (t.vertices[u].local_degree <= 1) {
            u = t.vertex_map[u];
            if (++guard > t.size())
                fail(ErrorCode::NoCriticalVertex, "orbit of a critical vertex avoids the critical set");
        }
        verts.push_back({t.vertices[v].local_degree - 1, index[u]});
    }
    return validate(verts);
}

/// Rotation of the edge germs at a fixed vertex (all germs must rotate by
/// the same exact angle).
inline RationalAngle julia_rotation_number(const AngledTree& t, int v) {
    if (t.vertex_map[v] != v) fail(ErrorCode::BadIndex, "rotation number needs a fixed vertex");
    auto inc = t.incident(v);
    if (inc.empty()) fail(ErrorCode::BadIndex, "isolated vertex");
    RationalAngle rot;
    bool first = true;
    for (int e : inc) {
        int g = t.image_germ(v, e);
        RationalAngle a = (g == e) ? RationalAngle::zero() : t.angle(v, e, g);
        if (first) {
            rot = a;
            first = false;
        } else if (a != rot) {
            fail(ErrorCode::BadIndex, "germ rotation is not rigid at this vertex");
        }
    }
    return rot;
}

/// DOT export: Fatou vertices drawn as boxes, Julia vertices as circles.
inline std::string tree_to_dot(const AngledTree& t) {
    auto kinds = vertex_kinds(t);
    std::ostringstream os;
    os << "graph hubbard_tree {\n";
    for (int v = 0; v < t.size(); ++v) {
        std::string label = t.vertices[v].label.empty() ? "v" + std::to_string(v) : t.vertices[v].label;
        os << "  v" << v << " [label=\"" << label << "\\nd=" << t.vertices[v].local_degree
           << "\", shape=" << (kinds[v] == VertexKind::Fatou ? "box" : "circle") << "];\n";
    }
    for (auto [u, w] : t.edges) os << "  v" << u << " -- v" << w << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace schemelab
