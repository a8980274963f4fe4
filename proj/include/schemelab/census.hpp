#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "schemelab/error.hpp"
#include "schemelab/scheme.hpp"

namespace schemelab {

/**
 * Rooted tree with a positive integer weight on every non-root vertex
 * (the root itself has weight zero). Node 0 is the root; parents precede
 * children.
 */
struct WeightedTree {
    struct Node {
        int parent = -1;  // -1 marks the root
        int weight = 0;
    };
    std::vector<Node> nodes;

    int weight() const {
        int w = 0;
        for (const auto& n : nodes) w += n.weight;
        return w;
    }
};

struct CensusRow {
    int w = 0;
    std::int64_t n_trees = 0;     // N_tree(w)
    std::int64_t n1_trees = 0;    // N_1(w), trees with a single trunk
    std::int64_t n_connected = 0; // N_c(w)
    std::int64_t n_total = 0;     // N(w)
};

namespace census_detail {

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Sum over all partitions sum(n * k_n) = w of prod C(counts[n] + k_n - 1, k_n).
// This is the composition rule shared by trees-from-one-trunk-trees and
// schemes-from-connected-schemes.
inline std::int64_t multiset_compositions(int w, const std::vector<std::int64_t>& counts) {
    struct Rec {
        const std::vector<std::int64_t>& counts;
        std::int64_t total = 0;
        void go(int remaining, int max_part, std::int64_t acc) {
            if (remaining == 0) {
                total += acc;
                return;
            }
            for (int n = std::min(remaining, max_part); n >= 1; --n) {
                for (int k = 1; n * k <= remaining; ++k) {
                    std::int64_t ways = binomial(counts[n] + k - 1, k);
                    if (ways == 0) continue;
                    go(remaining - n * k, n - 1, acc * ways);
                }
            }
        }
    } rec{counts};
    rec.go(w, w, 1);
    return rec.total;
}

}  // namespace census_detail

/**
 * (N_tree(w), N_1(w)) by the Appendix-B recursion:
 * N_1(w) = N_tree(0) + ... + N_tree(w-1), and N_tree(w) sums the
 * multichoose products over all partitions of w.
 */
inline std::pair<std::int64_t, std::int64_t> count_trees(int w) {
    std::vector<std::int64_t> ntree{1};  // N_tree(0) = 1 (the trivial tree)
    std::vector<std::int64_t> n1{0};     // N_1(0) = 0
    for (int u = 1; u <= w; ++u) {
        std::int64_t s = 0;
        for (int t = 0; t < u; ++t) s += ntree[t];
        n1.push_back(s);
        ntree.push_back(census_detail::multiset_compositions(u, n1));
    }
    return {ntree[w], n1[w]};
}

namespace census_detail {

struct TreeTables {
    // trees[w]: every weighted tree of weight w, one per isomorphism class.
    // one_trunk[w]: the subset with a single edge at the root.
    std::vector<std::vector<WeightedTree>> trees;
    std::vector<std::vector<WeightedTree>> one_trunk;
};

// Graft `sub`'s root onto `host` node `at` (identifying the two vertices).
inline void graft(WeightedTree& host, int at, const WeightedTree& sub) {
    int base = static_cast<int>(host.nodes.size());
    for (std::size_t i = 1; i < sub.nodes.size(); ++i) {
        int p = sub.nodes[i].parent;
        host.nodes.push_back({p == 0 ? at : base + p - 1, sub.nodes[i].weight});
    }
}

inline void extend_tree_tables(TreeTables& t, int w) {
    while (static_cast<int>(t.trees.size()) <= w) {
        if (t.trees.empty()) {
            t.trees.push_back({WeightedTree{{{-1, 0}}}});
            t.one_trunk.push_back({});
            continue;
        }
        int u = static_cast<int>(t.trees.size());

        // One-trunk trees of weight u: a trunk vertex of weight k with an
        // arbitrary tree of weight u-k grafted on top. Distinct pairs give
        // distinct isomorphism classes.
        std::vector<WeightedTree> ot;
        for (int k = 1; k <= u; ++k) {
            for (const auto& rest : t.trees[u - k]) {
                WeightedTree tree{{{-1, 0}, {0, k}}};
                graft(tree, 1, rest);
                ot.push_back(std::move(tree));
            }
        }

        // All trees of weight u: multisets of one-trunk trees wedged at the
        // root, enumerated in nondecreasing (weight, index) order so each
        // class appears exactly once.
        std::vector<WeightedTree> all;
        struct Assemble {
            TreeTables& t;
            std::vector<WeightedTree>& all;
            std::vector<const WeightedTree*> picked;
            void go(int remaining, int min_w, int min_idx) {
                if (remaining == 0) {
                    WeightedTree tree{{{-1, 0}}};
                    for (const auto* p : picked) graft(tree, 0, *p);
                    all.push_back(std::move(tree));
                    return;
                }
                for (int wsel = min_w; wsel <= remaining; ++wsel) {
                    const auto& pool = t.one_trunk[wsel];
                    int start = (wsel == min_w) ? min_idx : 0;
                    for (int i = start; i < static_cast<int>(pool.size()); ++i) {
                        picked.push_back(&pool[i]);
                        go(remaining - wsel, wsel, i);
                        picked.pop_back();
                    }
                }
            }
        };
        t.one_trunk.push_back(std::move(ot));
        Assemble a{t, all, {}};
        a.go(u, 1, 0);
        t.trees.push_back(std::move(all));
    }
}

inline TreeTables& tree_tables(int w) {
    static TreeTables tables;
    extend_tree_tables(tables, w);
    return tables;
}

// Compositions of w into positive parts, up to cyclic rotation
// (lexicographically minimal rotation kept).
inline std::vector<std::vector<int>> necklaces(int w) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto minimal_rotation = [](const std::vector<int>& v) {
        std::vector<int> best = v;
        std::vector<int> rot = v;
        for (std::size_t i = 1; i < v.size(); ++i) {
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
            if (rot < best) best = rot;
        }
        return best;
    };
    struct Rec {
        int w;
        std::vector<std::vector<int>>& out;
        std::vector<int>& cur;
        decltype(minimal_rotation)& minrot;
        void go(int remaining) {
            if (remaining == 0) {
                if (minrot(cur) == cur) out.push_back(cur);
                return;
            }
            for (int part = 1; part <= remaining; ++part) {
                cur.push_back(part);
                go(remaining - part);
                cur.pop_back();
            }
        }
    } rec{w, out, cur, minimal_rotation};
    rec.go(w);
    return out;
}

// Scheme from a cycle (weights in F-order) with a tree pasted on each
// cycle vertex; tree vertices map toward their parent.
inline MappingScheme assemble_connected(const std::vector<int>& cycle_weights,
                                        const std::vector<const WeightedTree*>& trees) {
    int n = static_cast<int>(cycle_weights.size());
    std::vector<MappingScheme::Vertex> verts;
    for (int i = 0; i < n; ++i) verts.push_back({cycle_weights[i], (i + 1) % n});
    for (int i = 0; i < n; ++i) {
        const WeightedTree& t = *trees[i];
        int base = static_cast<int>(verts.size());
        for (std::size_t k = 1; k < t.nodes.size(); ++k) {
            int p = t.nodes[k].parent;
            verts.push_back({t.nodes[k].weight, p == 0 ? i : base + p - 1});
        }
    }
    return validate(verts);
}

}  // namespace census_detail

/**
 * Connected reduced schemes with cycle weight `cycle_weight` and total
 * tree weight `tree_weight`, one per isomorphism class (Table B2 cells).
 */
inline std::vector<MappingScheme> enumerate_connected_cell(int cycle_weight, int tree_weight) {
    using namespace census_detail;
    auto& tables = tree_tables(tree_weight);
    std::map<std::string, MappingScheme> seen;

    for (const auto& cyc : necklaces(cycle_weight)) {
        int n = static_cast<int>(cyc.size());
        // Distribute tree_weight over the n cycle vertices, then pick a tree
        // of the prescribed weight for each.
        std::vector<int> split(n, 0);
        std::vector<const WeightedTree*> chosen(n, nullptr);
        struct Rec {
            int n, tree_weight;
            const std::vector<int>& cyc;
            census_detail::TreeTables& tables;
            std::vector<int>& split;
            std::vector<const WeightedTree*>& chosen;
            std::map<std::string, MappingScheme>& seen;
            void pick(int pos) {
                if (pos == n) {
                    MappingScheme s = census_detail::assemble_connected(cyc, chosen);
                    seen.emplace(canonical_form(s).bytes, s);
                    return;
                }
                for (const auto& t : tables.trees[split[pos]]) {
                    chosen[pos] = &t;
                    pick(pos + 1);
                }
            }
            void distribute(int pos, int remaining) {
                if (pos == n) {
                    if (remaining == 0) pick(0);
                    return;
                }
                for (int give = 0; give <= remaining; ++give) {
                    split[pos] = give;
                    distribute(pos + 1, remaining - give);
                }
            }
        } rec{n, tree_weight, cyc, tables, split, chosen, seen};
        rec.distribute(0, tree_weight);
    }

    std::vector<MappingScheme> out;
    for (auto& [bytes, s] : seen) out.push_back(std::move(s));
    return out;
}

inline std::int64_t count_connected_cell(int cycle_weight, int tree_weight) {
    return static_cast<std::int64_t>(enumerate_connected_cell(cycle_weight, tree_weight).size());
}

/// Every isomorphism class of weighted trees of weight w.
inline std::vector<WeightedTree> enumerate_trees(int w) {
    return census_detail::tree_tables(w).trees[w];
}

/// Connected reduced schemes of weight w, sorted by canonical bytes.
inline std::vector<MappingScheme> enumerate_connected(int w) {
    std::map<std::string, MappingScheme> seen;
    for (int cw = 1; cw <= w; ++cw)
        for (auto& s : enumerate_connected_cell(cw, w - cw))
            seen.emplace(canonical_form(s).bytes, std::move(s));
    std::vector<MappingScheme> out;
    for (auto& [bytes, s] : seen) out.push_back(std::move(s));
    return out;
}

constexpr int kCensusWeightCap = 8;

/// All reduced schemes of weight w (disjoint sums of connected ones),
/// one per isomorphism class, sorted by canonical bytes.
inline std::vector<MappingScheme> enumerate_all(int w) {
    if (w < 1 || w > kCensusWeightCap)
        fail(ErrorCode::CapExceeded, "census weight must lie in [1, " +
                                         std::to_string(kCensusWeightCap) + "]");
    // Connected pools per weight.
    std::vector<std::vector<MappingScheme>> pool(w + 1);
    for (int u = 1; u <= w; ++u) pool[u] = enumerate_connected(u);

    std::map<std::string, MappingScheme> seen;
    struct Rec {
        int w;
        const std::vector<std::vector<MappingScheme>>& pool;
        std::map<std::string, MappingScheme>& seen;
        std::vector<const MappingScheme*> picked;
        void go(int remaining, int min_w, int min_idx) {
            if (remaining == 0) {
                MappingScheme sum;
                for (const auto* p : picked) sum = sum.vertices.empty() ? *p : disjoint_sum(sum, *p);
                seen.emplace(canonical_form(sum).bytes, std::move(sum));
                return;
            }
            for (int u = min_w; u <= remaining; ++u) {
                int start = (u == min_w) ? min_idx : 0;
                for (int i = start; i < static_cast<int>(pool[u].size()); ++i) {
                    picked.push_back(&pool[u][i]);
                    go(remaining - u, u, i);
                    picked.pop_back();
                }
            }
        }
    } rec{w, pool, seen, {}};
    rec.go(w, 1, 0);

    std::vector<MappingScheme> out;
    for (auto& [bytes, s] : seen) out.push_back(std::move(s));
    return out;
}

/// Total scheme count from connected counts by the partition/multichoose
/// composition rule (cross-check against direct enumeration).
inline std::int64_t compose_total_count(int w, const std::vector<std::int64_t>& connected_counts) {
    return census_detail::multiset_compositions(w, connected_counts);
}

inline std::vector<CensusRow> census_table(int max_w) {
    if (max_w < 1 || max_w > kCensusWeightCap)
        fail(ErrorCode::CapExceeded, "census weight must lie in [1, " +
                                         std::to_string(kCensusWeightCap) + "]");
    std::vector<CensusRow> rows;
    for (int w = 1; w <= max_w; ++w) {
        CensusRow row;
        row.w = w;
        auto [nt, n1] = count_trees(w);
        row.n_trees = nt;
        row.n1_trees = n1;
        row.n_connected = static_cast<std::int64_t>(enumerate_connected(w).size());
        row.n_total = static_cast<std::int64_t>(enumerate_all(w).size());
        rows.push_back(row);
    }
    return rows;
}

}  // namespace schemelab
