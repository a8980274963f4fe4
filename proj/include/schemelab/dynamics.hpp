#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schemelab/genpoly.hpp"
#include "schemelab/parallel.hpp"
#include "schemelab/polynomial.hpp"
#include "schemelab/scheme.hpp"

namespace schemelab {

inline constexpr double kOverflowRadius = 1e150;

/// Monic escape bound taken uniformly over the vertices.
inline double escape_radius(const GenPolyMap& f) {
    double worst = 0.0;
    for (const auto& row : f.coeffs) {
        double sum = 0.0;
        for (Complex c : row) sum += std::abs(c);
        worst = std::max(worst, sum);
    }
    return std::max(2.0, 2.0 * (1.0 + worst));
}

/// Orbit (s,z), f(s,z), ...; stops early if the modulus passes 1e150.
inline std::vector<std::pair<int, Complex>> orbit(const GenPolyMap& f, int s, Complex z, int n) {
    std::vector<std::pair<int, Complex>> out;
    out.reserve(n + 1);
    out.emplace_back(s, z);
    for (int k = 0; k < n; ++k) {
        if (std::abs(z) > kOverflowRadius) break;
        auto [s2, z2] = f.step(s, z);
        s = s2;
        z = z2;
        out.emplace_back(s, z);
    }
    return out;
}

struct CriticalPoint {
    int vertex = 0;
    Complex location;
    int multiplicity = 1;
};

/// Roots of f_s' per vertex; multiplicities per vertex sum to w(s).
inline std::vector<CriticalPoint> critical_points(const GenPolyMap& f) {
    std::vector<CriticalPoint> out;
    for (int v = 0; v < f.scheme.size(); ++v) {
        if (f.degree(v) < 2) continue;
        auto roots = poly_roots(poly_derivative(f.polynomial(v)));
        for (auto [z, mult] : cluster_roots(std::move(roots)))
            out.push_back({v, z, mult});
    }
    return out;
}

enum class FateKind { Escaped, Attracted, Undecided };

struct AttractingCycle {
    std::vector<std::pair<int, Complex>> points;  // in orbit order
    Complex multiplier;
    int period = 0;
};

struct CriticalFate {
    CriticalPoint point;
    FateKind kind = FateKind::Undecided;
    int escape_step = -1;   // for Escaped
    int cycle_id = -1;      // for Attracted
    int period = 0;
    Complex multiplier;
};

struct Classification {
    std::vector<CriticalFate> fates;
    std::vector<AttractingCycle> cycles;

    bool all_attracted() const {
        for (const auto& f : fates)
            if (f.kind != FateKind::Attracted) return false;
        return true;
    }
};

namespace dyn_detail {

// Value after `steps` applications starting at (v, z), plus the chain-rule
// derivative along the way.
inline std::pair<Complex, Complex> iterate_with_derivative(const GenPolyMap& f, int v, Complex z,
                                                           int steps) {
    Complex deriv(1.0, 0.0);
    for (int k = 0; k < steps; ++k) {
        deriv *= f.derivative(v, z);
        auto [v2, z2] = f.step(v, z);
        v = v2;
        z = z2;
    }
    return {z, deriv};
}

inline std::optional<AttractingCycle> detect_cycle(const GenPolyMap& f, int v0, Complex z0,
                                                   int max_iter, double prox_tol) {
    // Brent's algorithm with a proximity tolerance on the tail.
    int tv = v0;
    Complex tz = z0;
    auto [hv, hz] = f.step(tv, tz);
    int power = 1, lam = 1, spent = 0;
    while (!(hv == tv && std::abs(hz - tz) < prox_tol)) {
        if (power == lam) {
            tv = hv;
            tz = hz;
            power *= 2;
            lam = 0;
        }
        auto nxt = f.step(hv, hz);
        hv = nxt.first;
        hz = nxt.second;
        ++lam;
        if (++spent > max_iter || std::abs(hz) > kOverflowRadius) return std::nullopt;
    }

    // Minimal period: smallest q <= lam with approximate return.
    int period = lam;
    for (int q = 1; q <= lam; ++q) {
        auto [val, deriv] = iterate_with_derivative(f, hv, hz, q);
        (void)deriv;
        int endv = hv;
        for (int k = 0; k < q; ++k) endv = f.scheme.image(endv);
        if (endv == hv && std::abs(val - hz) < 10 * prox_tol) {
            period = q;
            break;
        }
    }

    // Newton refinement of the periodic point for the return map.
    Complex z = hz;
    for (int it = 0; it < 32; ++it) {
        auto [val, deriv] = iterate_with_derivative(f, hv, z, period);
        Complex g = val - z;
        Complex dg = deriv - Complex(1.0, 0.0);
        if (std::abs(dg) < 1e-14) break;  // superattracting-like; z is already close
        Complex step = g / dg;
        z -= step;
        if (std::abs(step) < 1e-15) break;
    }

    AttractingCycle cyc;
    cyc.period = period;
    Complex mult(1.0, 0.0);
    int v = hv;
    Complex w = z;
    for (int k = 0; k < period; ++k) {
        cyc.points.emplace_back(v, w);
        mult *= f.derivative(v, w);
        auto nxt = f.step(v, w);
        v = nxt.first;
        w = nxt.second;
    }
    cyc.multiplier = mult;
    if (std::abs(w - z) > 1e-6) return std::nullopt;  // refinement failed to close up
    return cyc;
}

// Rotate so the lexicographically least (vertex, re, im) point comes first.
inline void canonicalize_cycle(AttractingCycle& c) {
    std::size_t best = 0;
    auto key = [&](std::size_t i) {
        return std::make_tuple(c.points[i].first, c.points[i].second.real(), c.points[i].second.imag());
    };
    for (std::size_t i = 1; i < c.points.size(); ++i)
        if (key(i) < key(best)) best = i;
    std::rotate(c.points.begin(), c.points.begin() + best, c.points.end());
}

}  // namespace dyn_detail

/**
 * Fate of every critical orbit: escape step, or the attracting cycle
 * reached (with minimal period and multiplier). Cycle detection runs
 * Brent's algorithm after a long warmup.
 */
inline Classification classify(const GenPolyMap& f, int max_iter = 1000, double esc_radius = 0.0) {
    if (esc_radius <= 0.0) esc_radius = escape_radius(f);
    Classification out;

    for (const auto& cp : critical_points(f)) {
        CriticalFate fate;
        fate.point = cp;

        // warmup with escape detection
        int v = cp.vertex;
        Complex z = cp.location;
        bool escaped = false;
        int warmup = 10 * max_iter;
        for (int k = 0; k < warmup; ++k) {
            if (std::abs(z) > esc_radius) {
                fate.kind = FateKind::Escaped;
                fate.escape_step = k;
                escaped = true;
                break;
            }
            auto [v2, z2] = f.step(v, z);
            v = v2;
            z = z2;
        }

        if (!escaped) {
            auto cyc = dyn_detail::detect_cycle(f, v, z, max_iter, 1e-9);
            if (cyc && std::abs(cyc->multiplier) < 1.0 - 1e-6) {
                dyn_detail::canonicalize_cycle(*cyc);
                // match against known cycles
                int id = -1;
                for (std::size_t i = 0; i < out.cycles.size() && id < 0; ++i) {
                    for (const auto& [pv, pz] : out.cycles[i].points)
                        if (pv == cyc->points[0].first && std::abs(pz - cyc->points[0].second) < 1e-6) {
                            id = static_cast<int>(i);
                            break;
                        }
                }
                if (id < 0) {
                    id = static_cast<int>(out.cycles.size());
                    out.cycles.push_back(*cyc);
                }
                fate.kind = FateKind::Attracted;
                fate.cycle_id = id;
                fate.period = out.cycles[id].period;
                fate.multiplier = out.cycles[id].multiplier;
            }
        }
        out.fates.push_back(fate);
    }
    return out;
}

inline bool is_hyperbolic_bounded(const GenPolyMap& f, int max_iter = 1000) {
    return classify(f, max_iter).all_attracted();
}

namespace dyn_detail {

// Koenigs coordinate of the return map f^{period} at the cycle base point:
// kappa(w) = lim multiplier^{-n} (f^{period*n}(w) - base). The sequence
// first converges geometrically, then diverges once the orbit reaches the
// rounding floor and lambda^{-n} amplifies the noise; we return the value
// at the plateau (smallest successive difference).
inline Complex koenigs_return(const GenPolyMap& f, const AttractingCycle& cyc, Complex w,
                              int cap = 20000) {
    int v0 = cyc.points[0].first;
    Complex base = cyc.points[0].second;
    Complex lam = cyc.multiplier;
    Complex scale(1.0, 0.0);
    Complex prev(0.0, 0.0);
    Complex best(0.0, 0.0);
    double best_diff = 1e300;
    Complex cur = w;
    for (int n = 0; n < cap; ++n) {
        Complex val = (cur - base) * scale;
        if (n > 0) {
            double diff = std::abs(val - prev);
            if (diff <= best_diff) {
                best_diff = diff;
                best = val;
            } else if (n >= 3 && diff > 8 * best_diff) {
                return best;  // noise amplification has taken over
            }
            if (diff < 1e-15 * std::max(1.0, std::abs(val))) return val;
        }
        prev = val;
        int v = v0;
        for (int k = 0; k < cyc.period; ++k) {
            auto nxt = f.step(v, cur);
            v = nxt.first;
            cur = nxt.second;
        }
        scale /= lam;
        if (std::abs(scale) > 1e280) break;  // overflow guard
    }
    return best_diff < 1e300 ? best : prev;
}

}  // namespace dyn_detail

/**
 * Global linearizer for one attracting cycle: kappa(f(z)) =
 * lambda^{1/m} kappa(z) on the basin, with lambda the cycle multiplier
 * and m its period. Also reports the landing phase (steps mod m to the
 * first close approach of the cycle base point).
 */
struct KoenigsValue {
    Complex kappa;
    int phase = 0;  // landing time mod period
};

inline KoenigsValue koenigs_at(const GenPolyMap& f, const AttractingCycle& cyc, int vertex,
                               Complex z, int max_steps = 200000) {
    Complex lam = cyc.multiplier;
    if (std::abs(lam) < 1e-13)
        fail(ErrorCode::SuperattractingCycle, "Koenigs coordinate needs 0 < |multiplier| < 1");
    if (std::abs(lam) >= 1.0 - 1e-9)
        fail(ErrorCode::NotInBasin, "cycle is not attracting");

    Complex lam_root = std::pow(lam, 1.0 / cyc.period);
    int v0 = cyc.points[0].first;
    Complex base = cyc.points[0].second;

    // Approach threshold: well inside the linearization neighborhood and
    // clear of the other cycle points at the same vertex.
    double sep = 1.0;
    for (std::size_t i = 1; i < cyc.points.size(); ++i)
        if (cyc.points[i].first == v0) sep = std::min(sep, std::abs(cyc.points[i].second - base));
    double delta = std::min(1e-3, sep / 4);

    int v = vertex;
    Complex cur = z;
    for (int t = 0; t < max_steps; ++t) {
        if (v == v0 && std::abs(cur - base) < delta) {
            Complex kap = dyn_detail::koenigs_return(f, cyc, cur);
            // kappa(z) = lam_root^{-t} * kappa_return(f^t z)
            return {kap * std::pow(lam_root, -static_cast<double>(t)), t % cyc.period};
        }
        if (std::abs(cur) > kOverflowRadius) break;
        auto nxt = f.step(v, cur);
        v = nxt.first;
        cur = nxt.second;
    }
    fail(ErrorCode::NotInBasin, "orbit did not approach the given cycle");
}

inline Complex koenigs(const GenPolyMap& f, const AttractingCycle& cyc, int vertex, Complex z) {
    return koenigs_at(f, cyc, vertex, z).kappa;
}

/// kappa(f(z)) - lambda^{1/m} kappa(z), for testing the functional equation.
inline double koenigs_residual(const GenPolyMap& f, const AttractingCycle& cyc, int vertex,
                               Complex z) {
    Complex lam_root = std::pow(cyc.multiplier, 1.0 / cyc.period);
    auto kz = koenigs_at(f, cyc, vertex, z);
    auto [v2, z2] = f.step(vertex, z);
    auto kfz = koenigs_at(f, cyc, v2, z2);
    return std::abs(kfz.kappa - lam_root * kz.kappa);
}

struct CycleCoordinates {
    int cycle_id = -1;
    Complex multiplier;
    int period = 0;
    std::vector<int> critical_indices;     // indices into the fate list
    std::vector<Complex> kappa;            // normalized, kappa(first) = 1
    std::vector<KoenigsValue> raw;         // unnormalized values with phases
};

/**
 * Per-cycle local coordinates (multiplier, normalized Koenigs values of
 * the attracted critical points). Superattracting cycles are skipped:
 * their critical points sit on the cycle itself.
 */
inline std::vector<CycleCoordinates> local_coordinates(const GenPolyMap& f,
                                                       const Classification& cls) {
    std::vector<CycleCoordinates> out;
    for (std::size_t cid = 0; cid < cls.cycles.size(); ++cid) {
        const auto& cyc = cls.cycles[cid];
        if (std::abs(cyc.multiplier) < 1e-13) continue;
        CycleCoordinates cc;
        cc.cycle_id = static_cast<int>(cid);
        cc.multiplier = cyc.multiplier;
        cc.period = cyc.period;
        for (std::size_t i = 0; i < cls.fates.size(); ++i) {
            const auto& fate = cls.fates[i];
            if (fate.kind != FateKind::Attracted || fate.cycle_id != static_cast<int>(cid)) continue;
            cc.critical_indices.push_back(static_cast<int>(i));
            cc.raw.push_back(koenigs_at(f, cyc, fate.point.vertex, fate.point.location));
        }
        if (!cc.raw.empty()) {
            Complex first = cc.raw[0].kappa;
            for (const auto& kv : cc.raw)
                cc.kappa.push_back(std::abs(first) > 0 ? kv.kappa / first : kv.kappa);
        }
        out.push_back(std::move(cc));
    }
    return out;
}

struct OrbitRelation {
    bool has_relation = false;
    int type = 0;  // 1 repeated critical points, 2 intersecting orbits, 3 (pre)periodic orbit
    std::string witness;
};

/**
 * Critical orbit relation detection: repeated critical points, orbits
 * that land on their cycle, and same-basin orbit intersections via the
 * phase-aligned torus criterion on Koenigs values.
 */
inline OrbitRelation critical_orbit_relation(const GenPolyMap& f, double tol = 1e-8) {
    auto cls = classify(f);
    if (!cls.all_attracted())
        fail(ErrorCode::NotInBasin, "critical orbit relations need a bounded hyperbolic map");

    auto crit = cls.fates;

    // (1) repeated critical points
    for (const auto& fate : crit)
        if (fate.point.multiplicity >= 2)
            return {true, 1, "critical point of multiplicity " + std::to_string(fate.point.multiplicity)};
    for (std::size_t i = 0; i < crit.size(); ++i)
        for (std::size_t j = i + 1; j < crit.size(); ++j)
            if (crit[i].point.vertex == crit[j].point.vertex &&
                std::abs(crit[i].point.location - crit[j].point.location) < tol)
                return {true, 1, "two critical points coincide"};

    // (3) superattracting cycle: some critical orbit is periodic
    for (const auto& fate : crit)
        if (std::abs(fate.multiplier) < 1e-13)
            return {true, 3, "superattracting cycle through a critical point"};

    // Koenigs data per cycle
    auto coords = local_coordinates(f, cls);
    for (const auto& cc : coords) {
        double scale = 0.0;
        for (const auto& kv : cc.raw) scale = std::max(scale, std::abs(kv.kappa));
        // (3) kappa == 0: the orbit lands exactly on the cycle
        for (std::size_t i = 0; i < cc.raw.size(); ++i)
            if (std::abs(cc.raw[i].kappa) < tol * std::max(1.0, scale))
                return {true, 3, "critical orbit lands on its attracting cycle"};

        // (2) phase-aligned torus criterion
        Complex lam_root = std::pow(cc.multiplier, 1.0 / cc.period);
        Complex logl = std::log(lam_root);  // Re < 0
        for (std::size_t i = 0; i < cc.raw.size(); ++i) {
            for (std::size_t j = i + 1; j < cc.raw.size(); ++j) {
                Complex u = std::log(cc.raw[i].kappa / cc.raw[j].kappa);
                double kf = u.real() / logl.real();
                long long k = std::llround(kf);
                if (std::abs(kf - static_cast<double>(k)) > 0.25) continue;
                // phase alignment: k == t_j - t_i (mod period)
                long long want = (cc.raw[j].phase - cc.raw[i].phase) % cc.period;
                if (((k - want) % cc.period + cc.period) % cc.period != 0) continue;
                Complex resid = u - static_cast<double>(k) * logl;
                double im = std::remainder(resid.imag(), kTau);
                if (std::abs(resid.real()) < tol && std::abs(im) < tol)
                    return {true, 2,
                            "critical orbits " + std::to_string(i) + "," + std::to_string(j) +
                                " intersect (offset " + std::to_string(k) + ")"};
            }
        }
    }
    return {false, 0, ""};
}

// ---------------------------------------------------------------------
// Basin labeling on pixel grids, and scheme extraction from the labels.
// ---------------------------------------------------------------------

struct Window {
    double x0 = -2.0, x1 = 2.0, y0 = -2.0, y1 = 2.0;

    bool contains(Complex z) const {
        return z.real() >= x0 && z.real() <= x1 && z.imag() >= y0 && z.imag() <= y1;
    }
};

struct BasinLabels {
    static constexpr int kEscaped = -1;
    static constexpr int kUnresolved = -2;

    struct Grid {
        Window window;
        int width = 0, height = 0;
        std::vector<int> label;  // component id, or kEscaped / kUnresolved

        int pixel_index(Complex z) const {
            int i = static_cast<int>((z.real() - window.x0) / (window.x1 - window.x0) * width);
            int j = static_cast<int>((z.imag() - window.y0) / (window.y1 - window.y0) * height);
            if (i < 0 || i >= width || j < 0 || j >= height) return -1;
            return j * width + i;
        }
    };

    struct Component {
        int vertex = 0;
        int cycle = 0;
        int phase = 0;
    };

    std::vector<Grid> grids;            // one per vertex
    std::vector<Component> components;  // indexed by component id
    Classification classification;
};

/**
 * Classify every pixel of a per-vertex grid by the (cycle, phase) of its
 * orbit limit, then label 4-connected components. Phases are step-aligned:
 * two pixels share a phase iff their orbits eventually track the same
 * cycle point at the same times.
 */
inline BasinLabels label_basins(const GenPolyMap& f, const Window& window, int resolution,
                                int max_iter = 1000) {
    if (resolution < 4) fail(ErrorCode::BadWindow, "resolution too small");
    double esc = escape_radius(f);
    auto cls = classify(f, max_iter);

    BasinLabels out;
    out.classification = cls;
    const int n = f.scheme.size();

    // cycle points per vertex with global index and separation-based delta
    struct CyclePt {
        Complex z;
        int cycle;
        int index;  // position within its cycle
    };
    std::vector<std::vector<CyclePt>> at_vertex(n);
    double min_sep = 1.0;
    for (std::size_t c = 0; c < cls.cycles.size(); ++c)
        for (std::size_t k = 0; k < cls.cycles[c].points.size(); ++k) {
            auto [v, z] = cls.cycles[c].points[k];
            for (const auto& other : at_vertex[v]) min_sep = std::min(min_sep, std::abs(z - other.z));
            at_vertex[v].push_back({z, static_cast<int>(c), static_cast<int>(k)});
        }
    double delta = std::min(1e-6, min_sep / 4);

    // per-pixel (cycle, phase); -1 escaped, -2 unresolved
    std::vector<std::vector<std::pair<int, int>>> tag(n);
    for (int v = 0; v < n; ++v) tag[v].assign(static_cast<std::size_t>(resolution) * resolution, {-2, 0});

    for (int v = 0; v < n; ++v) {
        parallel_rows(resolution, [&, v](int row) {
            for (int col = 0; col < resolution; ++col) {
                double x = window.x0 + (col + 0.5) * (window.x1 - window.x0) / resolution;
                double y = window.y0 + (row + 0.5) * (window.y1 - window.y0) / resolution;
                int cv = v;
                Complex z(x, y);
                std::pair<int, int> result{-2, 0};
                for (int step = 0; step < max_iter; ++step) {
                    if (std::abs(z) > esc) {
                        result = {-1, 0};
                        break;
                    }
                    bool hit = false;
                    for (const auto& cp : at_vertex[cv]) {
                        if (std::abs(z - cp.z) < delta) {
                            int m = cls.cycles[cp.cycle].period;
                            int phase = ((cp.index - step) % m + m) % m;
                            result = {cp.cycle, phase};
                            hit = true;
                            break;
                        }
                    }
                    if (hit) break;
                    auto nxt = f.step(cv, z);
                    cv = nxt.first;
                    z = nxt.second;
                }
                tag[v][static_cast<std::size_t>(row) * resolution + col] = result;
            }
        });
    }

    // union-find over 4-neighbors with equal (cycle, phase)
    out.grids.resize(n);
    std::vector<int> parent;
    auto uf_find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<std::pair<int, int>> cell_of;  // (vertex, pixel) per uf node
    std::vector<int> node_id;                  // per vertex*pixel -> uf node or -1

    node_id.assign(static_cast<std::size_t>(n) * resolution * resolution, -1);
    for (int v = 0; v < n; ++v)
        for (int p = 0; p < resolution * resolution; ++p)
            if (tag[v][p].first >= 0) {
                node_id[static_cast<std::size_t>(v) * resolution * resolution + p] =
                    static_cast<int>(parent.size());
                parent.push_back(static_cast<int>(parent.size()));
                cell_of.emplace_back(v, p);
            }

    auto node_at = [&](int v, int p) {
        return node_id[static_cast<std::size_t>(v) * resolution * resolution + p];
    };
    for (int v = 0; v < n; ++v) {
        for (int row = 0; row < resolution; ++row)
            for (int col = 0; col < resolution; ++col) {
                int p = row * resolution + col;
                if (tag[v][p].first < 0) continue;
                if (col + 1 < resolution && tag[v][p + 1] == tag[v][p])
                    parent[uf_find(node_at(v, p))] = uf_find(node_at(v, p + 1));
                if (row + 1 < resolution && tag[v][p + resolution] == tag[v][p])
                    parent[uf_find(node_at(v, p))] = uf_find(node_at(v, p + resolution));
            }
    }

    // compress component ids in scan order
    std::map<int, int> comp_of_root;
    for (int v = 0; v < n; ++v) {
        auto& grid = out.grids[v];
        grid.window = window;
        grid.width = grid.height = resolution;
        grid.label.assign(static_cast<std::size_t>(resolution) * resolution, BasinLabels::kUnresolved);
        for (int p = 0; p < resolution * resolution; ++p) {
            if (tag[v][p].first == -1) {
                grid.label[p] = BasinLabels::kEscaped;
            } else if (tag[v][p].first >= 0) {
                int root = uf_find(node_at(v, p));
                auto it = comp_of_root.find(root);
                if (it == comp_of_root.end()) {
                    int id = static_cast<int>(out.components.size());
                    comp_of_root.emplace(root, id);
                    out.components.push_back({v, tag[v][p].first, tag[v][p].second});
                    grid.label[p] = id;
                } else {
                    grid.label[p] = it->second;
                }
            }
        }
    }
    return out;
}

namespace dyn_detail {

inline int component_at(const BasinLabels& labels, int vertex, Complex z) {
    const auto& grid = labels.grids[vertex];
    if (!grid.window.contains(z))
        fail(ErrorCode::WindowTooSmall, "orbit point left the labeling window");
    int p = grid.pixel_index(z);
    if (p < 0) fail(ErrorCode::WindowTooSmall, "orbit point left the labeling window");
    int label = grid.label[p];
    if (label < 0)
        fail(ErrorCode::ResolutionTooCoarse, "orbit point fell on an unresolved pixel");
    // guard: the 2-pixel neighborhood must agree
    int col = p % grid.width, row = p / grid.width;
    for (int dr = -2; dr <= 2; ++dr)
        for (int dc = -2; dc <= 2; ++dc) {
            int r = row + dr, c = col + dc;
            if (r < 0 || r >= grid.height || c < 0 || c >= grid.width)
                fail(ErrorCode::ResolutionTooCoarse, "orbit point within 2 pixels of the window edge");
            if (grid.label[r * grid.width + c] != label)
                fail(ErrorCode::ResolutionTooCoarse, "orbit point within 2 pixels of a component boundary");
        }
    return label;
}

}  // namespace dyn_detail

/**
 * Full and reduced mapping schemes read off a labeled basin grid: one
 * vertex per Fatou component meeting the critical or postcritical set,
 * weights from critical multiplicities, edges from the one-step component
 * map.
 */
inline std::pair<MappingScheme, MappingScheme> extract_schemes(const GenPolyMap& f,
                                                               const BasinLabels& labels) {
    auto crit = critical_points(f);
    if (crit.empty()) fail(ErrorCode::BadIndex, "map has no critical points");

    std::map<int, int> weight;     // component -> total multiplicity
    std::map<int, int> successor;  // component -> component

    for (const auto& cp : crit) {
        int comp = dyn_detail::component_at(labels, cp.vertex, cp.location);
        weight[comp] += cp.multiplicity;

        int v = cp.vertex;
        Complex z = cp.location;
        int cur = comp;
        while (true) {
            auto [v2, z2] = f.step(v, z);
            int nxt = dyn_detail::component_at(labels, v2, z2);
            auto it = successor.find(cur);
            if (it != successor.end()) {
                if (it->second != nxt)
                    fail(ErrorCode::ResolutionTooCoarse, "component map is not single valued");
                break;  // the walk ahead is already recorded
            }
            successor[cur] = nxt;
            v = v2;
            z = z2;
            cur = nxt;
        }
    }

    // close the walk: make sure every reachable component has a successor
    // (the last component of each walk stops early only when already known)
    std::vector<int> comps;
    for (const auto& [c, s] : successor) comps.push_back(c);
    for (const auto& [c, s] : successor)
        if (!successor.count(s))
            fail(ErrorCode::ResolutionTooCoarse, "component walk did not close");

    std::map<int, int> index;
    for (int c : comps) index.emplace(c, static_cast<int>(index.size()));

    std::vector<MappingScheme::Vertex> verts(index.size());
    for (int c : comps)
        verts[index[c]] = {weight.count(c) ? weight[c] : 0, index[successor[c]]};

    MappingScheme full = validate(verts);
    return {full, reduce(full)};
}

/// Convenience wrapper: label with defaults and extract.
inline std::pair<MappingScheme, MappingScheme> extract_schemes(const GenPolyMap& f,
                                                               int resolution = 512,
                                                               int max_iter = 1000) {
    double r = escape_radius(f);
    Window w{-r, r, -r, r};
    return extract_schemes(f, label_basins(f, w, resolution, max_iter));
}

}  // namespace schemelab
