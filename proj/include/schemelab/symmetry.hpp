#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "schemelab/genpoly.hpp"
#include "schemelab/rational_angle.hpp"
#include "schemelab/scheme.hpp"

namespace schemelab {

/**
 * An element of the symmetry group Gamma(S): a root of unity rho_s per
 * vertex with rho_s^{d(s)} = rho_{F(s)}, acting by (s, z) -> (s, rho_s z).
 * Angles are exact rationals mod 1, so the group law is exact.
 */
struct SymmetryElement {
    std::vector<RationalAngle> rho;

    bool operator==(const SymmetryElement& o) const { return rho == o.rho; }
    bool operator<(const SymmetryElement& o) const { return rho < o.rho; }
};

/// gamma(s, z) = (s', alpha(s) * conj(z)) with s <-> s' an involution.
struct AntilinearInvolution {
    std::vector<int> vertex_involution;
    std::vector<RationalAngle> alpha;

    bool operator<(const AntilinearInvolution& o) const {
        if (vertex_involution != o.vertex_involution) return vertex_involution < o.vertex_involution;
        return alpha < o.alpha;
    }
    bool operator==(const AntilinearInvolution& o) const {
        return vertex_involution == o.vertex_involution && alpha == o.alpha;
    }
};

/// Sign-normalized presentation: sigma(s) b(F(s)) = b(s)^{d(s)} with
/// b(s)^2 = alpha(s).
struct SignedSchemeForm {
    std::vector<int> sigma;  // entries +1 / -1
    std::vector<int> vertex_involution;
    std::vector<RationalAngle> b;
};

inline SymmetryElement identity_symmetry(const MappingScheme& s) {
    return SymmetryElement{std::vector<RationalAngle>(s.size())};
}

inline bool satisfies_symmetry_relation(const MappingScheme& s, const SymmetryElement& g) {
    for (int v = 0; v < s.size(); ++v)
        if (g.rho[v].times(s.degree(v)) != g.rho[s.image(v)]) return false;
    return true;
}

inline SymmetryElement compose(const SymmetryElement& a, const SymmetryElement& b) {
    SymmetryElement out;
    out.rho.resize(a.rho.size());
    for (std::size_t i = 0; i < a.rho.size(); ++i) out.rho[i] = a.rho[i] + b.rho[i];
    return out;
}

/**
 * |Gamma(S)|: over each connected component, (d_1...d_k - 1) for the cycle
 * degrees times the product of the aperiodic degrees.
 */
inline std::int64_t gamma_order(const MappingScheme& s) {
    std::int64_t order = 1;
    for (const auto& comp : connected_components(s)) {
        auto dec = cycle_decomposition(comp);
        std::int64_t cyc = 1, rest = 1;
        for (int v = 0; v < comp.size(); ++v) {
            if (dec.tail_depth[v] == 0)
                cyc *= comp.degree(v);
            else
                rest *= comp.degree(v);
        }
        order *= (cyc - 1) * rest;
    }
    return order;
}

/**
 * The full group: cycle angles are j/(D-1) for the cycle degree product D,
 * propagated around the cycle; each aperiodic vertex then has d(s)
 * choices of d(s)-th root of the angle at its image.
 */
inline std::vector<SymmetryElement> enumerate_gamma(const MappingScheme& s) {
    const int n = s.size();
    auto dec = cycle_decomposition(s);

    // Per-vertex processing order: cycles first, then increasing tail depth.
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return dec.tail_depth[a] < dec.tail_depth[b]; });

    std::vector<SymmetryElement> result;
    SymmetryElement cur{std::vector<RationalAngle>(n)};

    // Choices: for each cycle, the index j below D-1; for each aperiodic
    // vertex, the root branch m below d(s). Depth-first over `order`.
    std::vector<bool> assigned(n, false);
    struct Rec {
        const MappingScheme& s;
        const CycleDecomposition& dec;
        const std::vector<int>& order;
        std::vector<bool>& assigned;
        SymmetryElement& cur;
        std::vector<SymmetryElement>& result;

        void go(std::size_t idx) {
            if (idx == order.size()) {
                result.push_back(cur);
                return;
            }
            int v = order[idx];
            if (assigned[v]) {
                go(idx + 1);
                return;
            }
            if (dec.tail_depth[v] == 0) {
                const auto& cyc = dec.cycles[dec.cycle_of[v]];
                std::int64_t d_prod = 1;
                for (int u : cyc) d_prod *= s.degree(u);
                for (std::int64_t j = 0; j + 1 < d_prod; ++j) {
                    RationalAngle theta(j, d_prod - 1);
                    // propagate around the cycle starting from v
                    auto it = std::find(cyc.begin(), cyc.end(), v);
                    std::size_t pos = static_cast<std::size_t>(it - cyc.begin());
                    RationalAngle t = theta;
                    for (std::size_t k = 0; k < cyc.size(); ++k) {
                        int u = cyc[(pos + k) % cyc.size()];
                        cur.rho[u] = t;
                        assigned[u] = true;
                        t = t.times(s.degree(u));
                    }
                    go(idx + 1);
                    for (int u : cyc) assigned[u] = false;
                }
            } else {
                RationalAngle target = cur.rho[s.image(v)];
                int d = s.degree(v);
                for (int m = 0; m < d; ++m) {
                    cur.rho[v] = RationalAngle(target.num() + static_cast<std::int64_t>(m) * target.den(),
                                               target.den() * d);
                    assigned[v] = true;
                    go(idx + 1);
                    assigned[v] = false;
                }
            }
        }
    } rec{s, dec, order, assigned, cur, result};
    rec.go(0);
    std::sort(result.begin(), result.end());
    return result;
}

/**
 * Gamma_0(S): the kernel of the action on P^S. Exactly the elements with
 * rho = +-1 at free degree-two vertices and +1 everywhere else.
 */
inline std::vector<SymmetryElement> gamma0(const MappingScheme& s) {
    auto dec = cycle_decomposition(s);
    std::vector<int> flips;
    for (int v : dec.free_vertices)
        if (s.degree(v) == 2) flips.push_back(v);

    std::vector<SymmetryElement> out;
    for (std::uint64_t mask = 0; mask < (1ull << flips.size()); ++mask) {
        SymmetryElement g = identity_symmetry(s);
        for (std::size_t i = 0; i < flips.size(); ++i)
            if (mask & (1ull << i)) g.rho[flips[i]] = RationalAngle::half();
        out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Weight-preserving bijections of |S| commuting with F.
inline std::vector<std::vector<int>> aut(const MappingScheme& s) {
    const int n = s.size();
    std::vector<std::vector<int>> result;
    std::vector<int> phi(n, -1);
    std::vector<bool> used(n, false);

    struct Rec {
        const MappingScheme& s;
        std::vector<int>& phi;
        std::vector<bool>& used;
        std::vector<std::vector<int>>& result;
        int n;

        bool consistent(int v) const {
            if (s.weight(v) != s.weight(phi[v])) return false;
            int fv = s.image(v);
            if (phi[fv] >= 0 && phi[fv] != s.image(phi[v])) return false;
            // also check preimages already assigned
            for (int u = 0; u < n; ++u)
                if (phi[u] >= 0 && s.image(u) == v && s.image(phi[u]) != phi[v]) return false;
            return true;
        }
        void go(int v) {
            if (v == n) {
                result.push_back(phi);
                return;
            }
            for (int t = 0; t < n; ++t) {
                if (used[t]) continue;
                phi[v] = t;
                used[t] = true;
                if (consistent(v)) go(v + 1);
                used[t] = false;
                phi[v] = -1;
            }
        }
    } rec{s, phi, used, result, n};
    rec.go(0);
    return result;
}

/// The split extension: all compositions (s, z) -> (phi(s), rho_s z).
inline std::vector<std::pair<std::vector<int>, SymmetryElement>> extended_group(
    const MappingScheme& s) {
    std::vector<std::pair<std::vector<int>, SymmetryElement>> out;
    auto phis = aut(s);
    auto gammas = enumerate_gamma(s);
    for (const auto& phi : phis)
        for (const auto& g : gammas) out.emplace_back(phi, g);
    return out;
}

/**
 * The linear action f -> g^{-1} o f o g on P^S: coefficient a_j of f_s
 * picks up the factor rho_s^j / rho_{F(s)}.
 */
inline GenPolyMap act_on_map(const SymmetryElement& g, const GenPolyMap& f) {
    GenPolyMap out = f;
    const auto& s = f.scheme;
    for (int v = 0; v < s.size(); ++v) {
        int d = s.degree(v);
        for (int j = 0; j <= d - 2; ++j) {
            RationalAngle turn = g.rho[v].times(j) - g.rho[s.image(v)];
            out.coeffs[v][j] = f.coeffs[v][j] * turn.to_complex();
        }
    }
    return out;
}

/**
 * All antilinear involutions (s, z) -> (s', alpha(s) conj(z)) commuting
 * with the base map: s<->s' runs over the involutive automorphisms, and
 * alpha over the Gamma-elements fixed by that involution.
 */
inline std::vector<AntilinearInvolution> enumerate_antilinear(const MappingScheme& s) {
    std::vector<AntilinearInvolution> out;
    for (const auto& phi : aut(s)) {
        bool involutive = true;
        for (int v = 0; v < s.size(); ++v) involutive = involutive && phi[phi[v]] == v;
        if (!involutive) continue;
        for (const auto& g : enumerate_gamma(s)) {
            bool fixed = true;
            for (int v = 0; v < s.size(); ++v) fixed = fixed && g.rho[phi[v]] == g.rho[v];
            if (fixed) out.push_back(AntilinearInvolution{phi, g.rho});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Pick b with b^2 = alpha (and b(s') = b(s)); the defining equation then
/// forces sigma(s) = +-1.
inline SignedSchemeForm sign_normalize(const MappingScheme& s, const AntilinearInvolution& inv) {
    SignedSchemeForm out;
    out.vertex_involution = inv.vertex_involution;
    out.b.resize(s.size());
    out.sigma.assign(s.size(), 1);
    for (int v = 0; v < s.size(); ++v)
        out.b[v] = RationalAngle(inv.alpha[v].num(), 2 * inv.alpha[v].den());
    for (int v = 0; v < s.size(); ++v) {
        RationalAngle sig = out.b[v].times(s.degree(v)) - out.b[s.image(v)];
        if (sig.is_zero())
            out.sigma[v] = 1;
        else if (sig == RationalAngle::half())
            out.sigma[v] = -1;
        else
            fail(ErrorCode::BadIndex, "sign normalization did not square to a sign");
    }
    return out;
}

inline int real_form_dimension(const MappingScheme& s) { return total_weight(s); }

/**
 * Equivalence classes of antilinear involutions under the computable
 * moves: composition with Gamma_0 (same induced involution on P^S) and
 * conjugation by extended-group elements. Returns one representative per
 * class (lexicographically least).
 */
inline std::vector<std::vector<AntilinearInvolution>> classify_real_forms(const MappingScheme& s) {
    auto invs = enumerate_antilinear(s);
    std::map<AntilinearInvolution, int> index;
    for (std::size_t i = 0; i < invs.size(); ++i) index[invs[i]] = static_cast<int>(i);

    std::vector<int> parent(invs.size());
    for (std::size_t i = 0; i < invs.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

    auto g0 = gamma0(s);
    auto ext = extended_group(s);
    for (std::size_t i = 0; i < invs.size(); ++i) {
        const auto& inv = invs[i];
        // gamma' = gamma o g0
        for (const auto& g : g0) {
            AntilinearInvolution moved = inv;
            for (int v = 0; v < s.size(); ++v) moved.alpha[v] = inv.alpha[v] - g.rho[v];
            auto it = index.find(moved);
            if (it != index.end()) unite(static_cast<int>(i), it->second);
        }
        // gamma' = eta^{-1} o gamma o eta for eta = (phi, rho)
        for (const auto& [phi, g] : ext) {
            std::vector<int> phi_inv(s.size());
            for (int v = 0; v < s.size(); ++v) phi_inv[phi[v]] = v;
            AntilinearInvolution moved;
            moved.vertex_involution.resize(s.size());
            moved.alpha.resize(s.size());
            for (int v = 0; v < s.size(); ++v) {
                int iv = phi_inv[inv.vertex_involution[phi[v]]];
                moved.vertex_involution[v] = iv;
                moved.alpha[v] = inv.alpha[phi[v]] - g.rho[v] - g.rho[iv];
            }
            auto it = index.find(moved);
            if (it != index.end()) unite(static_cast<int>(i), it->second);
        }
    }

    std::map<int, std::vector<AntilinearInvolution>> classes;
    for (std::size_t i = 0; i < invs.size(); ++i) classes[find(static_cast<int>(i))].push_back(invs[i]);
    std::vector<std::vector<AntilinearInvolution>> out;
    for (auto& [root, members] : classes) out.push_back(std::move(members));
    return out;
}

}  // namespace schemelab
