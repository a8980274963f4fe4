#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "schemelab/error.hpp"
#include "schemelab/polynomial.hpp"
#include "schemelab/scheme.hpp"
#include "schemelab/symmetry.hpp"

namespace schemelab {

/// The disk automorphism with mu_a(a) = 0 and mu_a(1) = 1.
inline Complex mobius_eval(Complex a, Complex z) {
    Complex k = (1.0 - std::conj(a)) / (1.0 - a);
    Complex den = 1.0 - std::conj(a) * z;
    if (std::abs(den) < 1e-14) fail(ErrorCode::PoleHit, "evaluation at the reflected pole 1/conj(a)");
    return k * (z - a) / den;
}

/// Inverse of mu_a: the w with mu_a(w) = u.
inline Complex mobius_inverse(Complex a, Complex u) {
    Complex k = (1.0 - std::conj(a)) / (1.0 - a);
    return (u + k * a) / (k + u * std::conj(a));
}

/**
 * A finite Blaschke product rotation * mu_{a_1}(z) ... mu_{a_d}(z) with
 * all |a_j| < 1. Since every factor fixes 1, rotation equals the value
 * at 1; rotation == 1 means the product is 1-anchored.
 */
struct BlaschkeProduct {
    Complex rotation{1.0, 0.0};
    std::vector<Complex> zeros;

    int degree() const { return static_cast<int>(zeros.size()); }
};

inline BlaschkeProduct make_blaschke(std::vector<Complex> zeros, Complex rotation = Complex(1.0, 0.0)) {
    if (zeros.empty()) fail(ErrorCode::BadIndex, "a Blaschke product needs degree >= 1");
    for (Complex a : zeros)
        if (std::abs(a) >= 1.0) fail(ErrorCode::BadIndex, "Blaschke zeros must lie in the open disk");
    return BlaschkeProduct{rotation, std::move(zeros)};
}

inline Complex blaschke_eval(const BlaschkeProduct& b, Complex z) {
    Complex acc = b.rotation;
    for (Complex a : b.zeros) acc *= mobius_eval(a, z);
    return acc;
}

/// Numerator polynomial P with B = P/Q.
inline Poly blaschke_numerator(const BlaschkeProduct& b) {
    Poly p{b.rotation};
    for (Complex a : b.zeros) {
        Complex k = (1.0 - std::conj(a)) / (1.0 - a);
        p = poly_mul(p, Poly{-k * a, k});
    }
    return p;
}

/// Denominator polynomial Q = prod (1 - conj(a_j) z).
inline Poly blaschke_denominator(const BlaschkeProduct& b) {
    Poly q{Complex(1.0, 0.0)};
    for (Complex a : b.zeros) q = poly_mul(q, Poly{Complex(1.0, 0.0), -std::conj(a)});
    return q;
}

inline Complex blaschke_derivative(const BlaschkeProduct& b, Complex z) {
    Poly p = blaschke_numerator(b), q = blaschke_denominator(b);
    Complex qv = poly_eval(q, z);
    if (std::abs(qv) < 1e-14) fail(ErrorCode::PoleHit, "derivative at a pole");
    Complex pv = poly_eval(p, z);
    Complex dp = poly_eval(poly_derivative(p), z);
    Complex dq = poly_eval(poly_derivative(q), z);
    return (dp * qv - pv * dq) / (qv * qv);
}

/// Interior critical points, exactly d-1 with multiplicity.
inline std::vector<Complex> critical_points(const BlaschkeProduct& b) {
    if (b.degree() < 2) return {};
    Poly p = blaschke_numerator(b), q = blaschke_denominator(b);
    Poly num = poly_sub(poly_mul(poly_derivative(p), q), poly_mul(p, poly_derivative(q)));
    std::vector<Complex> inside;
    for (Complex z : poly_roots(num))
        if (std::abs(z) < 1.0) inside.push_back(z);
    if (static_cast<int>(inside.size()) != b.degree() - 1)
        fail(ErrorCode::RootFindFailure, "expected d-1 interior critical points, found " +
                                             std::to_string(inside.size()));
    std::sort(inside.begin(), inside.end(), [](Complex a, Complex c) {
        if (a.real() != c.real()) return a.real() < c.real();
        return a.imag() < c.imag();
    });
    return inside;
}

/// The attracting interior fixed point, if B has one.
inline std::vector<Complex> interior_fixed_points(const BlaschkeProduct& b) {
    Poly p = blaschke_numerator(b);
    Poly zq = poly_mul(Poly{Complex(0.0, 0.0), Complex(1.0, 0.0)}, blaschke_denominator(b));
    std::vector<Complex> inside;
    for (Complex z : poly_roots(poly_sub(p, zq)))
        if (std::abs(z) < 1.0 - 1e-9) inside.push_back(z);
    return inside;
}

namespace circle_detail {

/**
 * Solve arg(f(e(theta))) - c*theta = t0 (mod 1, in turns) on the circle
 * for a map whose circle lift increases by `degree` turns; c is 0 for
 * preimage equations and 1 for fixed-point equations. Requires the lift
 * of phi(theta) - c*theta to be strictly increasing, which holds for any
 * Blaschke product (c=0) and for products with an interior fixed point
 * (c=1).
 */
inline std::vector<double> solve_on_circle(const std::function<Complex(Complex)>& f, int degree,
                                           double c, double t0) {
    auto point = [](double t) { return Complex(std::cos(kTau * t), std::sin(kTau * t)); };

    int n = 4096;
    std::vector<double> theta, lift;
    for (int attempt = 0; attempt < 8; ++attempt, n *= 2) {
        theta.assign(n + 1, 0.0);
        lift.assign(n + 1, 0.0);
        Complex prev = f(point(0.0));
        double phi = std::arg(prev) / kTau;
        lift[0] = phi - t0;
        bool ok = true;
        for (int k = 1; k <= n; ++k) {
            double t = static_cast<double>(k) / n;
            Complex val = f(point(t));
            double dphi = std::arg(val / prev) / kTau;
            if (std::abs(dphi) > 0.45) { ok = false; break; }
            phi += dphi;
            prev = val;
            theta[k] = t;
            lift[k] = phi - c * t - t0;
        }
        if (ok) break;
        if (attempt == 7) fail(ErrorCode::RootFindFailure, "circle sampling did not resolve the lift");
    }

    double total = lift[n] - lift[0];
    int crossings = static_cast<int>(std::llround(total));
    if (std::abs(total - crossings) > 1e-6 || crossings != degree - static_cast<int>(c))
        fail(ErrorCode::RootFindFailure, "unexpected circle winding in solver");

    std::vector<double> out;
    long long m_lo = static_cast<long long>(std::floor(lift[0])) + 1;
    for (long long m = m_lo; m < m_lo + crossings; ++m) {
        // bracket [k, k+1] with lift[k] < m <= lift[k+1]
        int lo = 0, hi = n;
        // binary search on the sampled lift (it is increasing)
        while (hi - lo > 1) {
            int mid = (lo + hi) / 2;
            if (lift[mid] < static_cast<double>(m)) lo = mid; else hi = mid;
        }
        double ta = theta[lo], tb = theta[hi];
        double ha = lift[lo];
        Complex va = f(point(ta));
        // local continuation bisection
        for (int it = 0; it < 80 && tb - ta > 1e-16; ++it) {
            double tm = 0.5 * (ta + tb);
            Complex vm = f(point(tm));
            double hm = ha + std::arg(vm / va) / kTau - c * (tm - ta);
            if (hm < static_cast<double>(m)) {
                ta = tm; ha = hm; va = vm;
            } else {
                tb = tm;
            }
        }
        double t = 0.5 * (ta + tb);
        out.push_back(t - std::floor(t));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace circle_detail

/**
 * The d-1 repelling fixed points on the unit circle, present whenever B
 * has an interior fixed point (located by monotone bisection on the
 * lifted angle difference).
 */
inline std::vector<Complex> boundary_fixed_points(const BlaschkeProduct& b) {
    if (b.degree() < 2) fail(ErrorCode::BadIndex, "boundary fixed points need degree >= 2");
    if (interior_fixed_points(b).empty())
        fail(ErrorCode::NoInteriorFixedPoint, "all sphere fixed points lie on the circle");
    auto f = [&](Complex z) { return blaschke_eval(b, z); };
    std::vector<Complex> out;
    for (double t : circle_detail::solve_on_circle(f, b.degree(), 1.0, 0.0))
        out.push_back(Complex(std::cos(kTau * t), std::sin(kTau * t)));
    return out;
}

/// The d circle solutions of B(z) = target (|target| = 1).
inline std::vector<Complex> circle_preimages(const BlaschkeProduct& b, Complex target) {
    auto f = [&](Complex z) { return blaschke_eval(b, z); };
    double t0 = std::arg(target) / kTau;
    std::vector<Complex> out;
    for (double t : circle_detail::solve_on_circle(f, b.degree(), 0.0, t0))
        out.push_back(Complex(std::cos(kTau * t), std::sin(kTau * t)));
    return out;
}

/// Degree of the circle covering by the argument principle.
inline int circle_winding(const BlaschkeProduct& b) {
    const int n = 4096;
    double total = 0.0;
    Complex prev = blaschke_eval(b, Complex(1.0, 0.0));
    for (int k = 1; k <= n; ++k) {
        double t = static_cast<double>(k) / n;
        Complex val = blaschke_eval(b, Complex(std::cos(kTau * t), std::sin(kTau * t)));
        total += std::arg(val / prev);
        prev = val;
    }
    return static_cast<int>(std::llround(total / kTau));
}

/**
 * Symbol sequence of a circle point: digits a_k with B^k(z) in the arc
 * A_{a_k}, where the arcs are cut by the d preimages of the first
 * boundary fixed point (counterclockwise from that fixed point).
 */
inline std::vector<int> circle_itinerary(const BlaschkeProduct& b, Complex z, int n) {
    std::vector<Complex> fixed;
    try {
        fixed = boundary_fixed_points(b);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NoInteriorFixedPoint)
            fail(ErrorCode::BoundaryFixedPointMissing, "itinerary needs a boundary fixed point");
        throw;
    }
    Complex z0 = fixed.front();
    double base = std::arg(z0) / kTau;
    auto frac = [&](Complex w) {
        double t = std::arg(w) / kTau - base;
        t -= std::floor(t);
        return t;  // position in [0,1) counterclockwise from z0
    };

    std::vector<double> cuts;
    for (Complex w : circle_preimages(b, z0)) cuts.push_back(frac(w));
    std::sort(cuts.begin(), cuts.end());
    // z0 is its own preimage; force the first cut to exactly 0.
    cuts.front() = 0.0;

    std::vector<int> digits;
    Complex cur = z / std::abs(z);
    for (int k = 0; k < n; ++k) {
        double t = frac(cur);
        int digit = static_cast<int>(std::upper_bound(cuts.begin(), cuts.end(), t) - cuts.begin()) - 1;
        digits.push_back(digit);
        cur = blaschke_eval(b, cur);
        cur /= std::abs(cur);
    }
    return digits;
}

/**
 * Douady-Earle conformal barycenter of points in the open disk: the
 * unique w with sum_j (z_j - w)/(1 - conj(w) z_j) = 0, by damped Newton
 * from the Euclidean mean.
 */
inline Complex conformal_barycenter(const std::vector<Complex>& points, double tol = 1e-13) {
    if (points.empty()) fail(ErrorCode::BadIndex, "barycenter of an empty set");
    for (Complex z : points)
        if (std::abs(z) >= 1.0) fail(ErrorCode::BadIndex, "barycenter points must lie in the disk");

    auto residual = [&](Complex w) {
        Complex r(0.0, 0.0);
        for (Complex z : points) r += (z - w) / (1.0 - std::conj(w) * z);
        return r;
    };

    Complex w(0.0, 0.0);
    for (Complex z : points) w += z;
    w /= static_cast<double>(points.size());

    Complex r = residual(w);
    for (int it = 0; it < 100; ++it) {
        if (std::abs(r) < tol) return w;
        // Wirtinger derivatives of the residual
        Complex dw(0.0, 0.0), dwbar(0.0, 0.0);
        for (Complex z : points) {
            Complex den = 1.0 - std::conj(w) * z;
            dw += -1.0 / den;
            dwbar += (z - w) * z / (den * den);
        }
        double m11 = (dw + dwbar).real(), m12 = -(dw - dwbar).imag();
        double m21 = (dw + dwbar).imag(), m22 = (dw - dwbar).real();
        double det = m11 * m22 - m12 * m21;
        if (std::abs(det) < 1e-300) break;
        double bu = -r.real(), bv = -r.imag();
        Complex step((m22 * bu - m12 * bv) / det, (m11 * bv - m21 * bu) / det);

        double damp = 1.0;
        for (int half = 0; half < 60; ++half) {
            Complex cand = w + damp * step;
            if (std::abs(cand) < 1.0) {
                Complex rc = residual(cand);
                if (std::abs(rc) < std::abs(r)) {
                    w = cand;
                    r = rc;
                    break;
                }
            }
            damp *= 0.5;
        }
        if (damp < 1e-17) break;
    }
    if (std::abs(residual(w)) < tol) return w;
    fail(ErrorCode::NoConvergence, "barycenter iteration did not reach tolerance");
}

/**
 * The d-1 fixed-point-centered 1-anchored conjugates h^{-1} o B o h,
 * one per boundary fixed point (h(0) = interior fixed point, h(1) = the
 * chosen boundary fixed point).
 */
inline std::vector<BlaschkeProduct> fixed_point_center(const BlaschkeProduct& b) {
    auto interior = interior_fixed_points(b);
    if (interior.empty()) fail(ErrorCode::NoInteriorFixedPoint, "fixed point centering needs an interior fixed point");
    Complex p = interior.front();

    // d preimages of p: the zeros of the conjugate pulled back through h.
    Poly num = poly_sub(blaschke_numerator(b), poly_scale(blaschke_denominator(b), p));
    std::vector<Complex> pre = poly_roots(num);
    for (Complex& w : pre)
        if (std::abs(w) >= 1.0)
            fail(ErrorCode::RootFindFailure, "preimage of the interior fixed point left the disk");

    std::vector<BlaschkeProduct> out;
    for (Complex zb : boundary_fixed_points(b)) {
        Complex omega = mobius_eval(p, zb);  // h(z) = mu_p^{-1}(omega z)
        std::vector<Complex> zeros;
        for (Complex w : pre) {
            Complex z = mobius_eval(p, w) / omega;
            if (std::abs(z) < 1e-12) z = Complex(0.0, 0.0);
            zeros.push_back(z);
        }
        std::sort(zeros.begin(), zeros.end(), [](Complex a, Complex c) {
            if (a.real() != c.real()) return a.real() < c.real();
            return a.imag() < c.imag();
        });
        out.push_back(BlaschkeProduct{Complex(1.0, 0.0), std::move(zeros)});
    }
    return out;
}

/**
 * The d zeros-centered 1-anchored compositions B o h, one per circle
 * solution of B(z) = 1 (h(1) = that solution, h(0) = the conformal
 * barycenter of the zeros).
 */
inline std::vector<BlaschkeProduct> zeros_center(const BlaschkeProduct& b) {
    Complex bary = conformal_barycenter(b.zeros);
    std::vector<BlaschkeProduct> out;
    for (Complex z1 : circle_preimages(b, Complex(1.0, 0.0))) {
        Complex omega = mobius_eval(bary, z1);  // h(z) = mu_bary^{-1}(omega z)
        std::vector<Complex> zeros;
        for (Complex a : b.zeros) zeros.push_back(mobius_eval(bary, a) / omega);
        std::sort(zeros.begin(), zeros.end(), [](Complex a, Complex c) {
            if (a.real() != c.real()) return a.real() < c.real();
            return a.imag() < c.imag();
        });
        out.push_back(BlaschkeProduct{Complex(1.0, 0.0), std::move(zeros)});
    }
    return out;
}

/**
 * An element of the model space B^S: one 1-anchored Blaschke product of
 * degree d(s) per vertex, fixed-point centered at periodic vertices and
 * zeros centered at aperiodic ones (so weight-0 vertices carry the
 * identity).
 */
struct ModelMap {
    MappingScheme scheme;
    std::vector<BlaschkeProduct> products;

    Complex apply(int s, Complex z) const { return blaschke_eval(products[s], z); }
    std::pair<int, Complex> step(int s, Complex z) const { return {scheme.image(s), apply(s, z)}; }
};

inline bool model_validate(const ModelMap& m, double tol = 1e-9) {
    auto dec = cycle_decomposition(m.scheme);
    if (static_cast<int>(m.products.size()) != m.scheme.size())
        fail(ErrorCode::CenteringViolation, "product count does not match vertex count");
    for (int v = 0; v < m.scheme.size(); ++v) {
        const auto& b = m.products[v];
        std::string at = "vertex " + std::to_string(v);
        if (b.degree() != m.scheme.degree(v))
            fail(ErrorCode::CenteringViolation, at + ": degree mismatch");
        if (std::abs(b.rotation - Complex(1.0, 0.0)) > tol)
            fail(ErrorCode::CenteringViolation, at + ": product is not 1-anchored");
        if (dec.tail_depth[v] == 0) {
            double closest = 1.0;
            for (Complex a : b.zeros) closest = std::min(closest, std::abs(a));
            if (closest > tol)
                fail(ErrorCode::CenteringViolation, at + ": periodic vertex is not fixed point centered");
        } else {
            Complex sum(0.0, 0.0);
            for (Complex a : b.zeros) sum += a;
            if (std::abs(sum) > tol)
                fail(ErrorCode::CenteringViolation, at + ": aperiodic vertex is not zeros centered");
        }
    }
    return true;
}

/// The unique critically finite model: beta_s(z) = z^{d(s)}.
inline ModelMap center_map(const MappingScheme& s) {
    ModelMap m{s, {}};
    for (int v = 0; v < s.size(); ++v)
        m.products.push_back(BlaschkeProduct{Complex(1.0, 0.0),
                                             std::vector<Complex>(s.degree(v), Complex(0.0, 0.0))});
    return m;
}

inline int model_dimension(const MappingScheme& s) { return 2 * total_weight(s); }

struct BoundaryMarking {
    std::vector<Complex> q;  // one unimodular point per vertex
};

inline double marking_residual(const ModelMap& m, const BoundaryMarking& q) {
    double worst = 0.0;
    for (int v = 0; v < m.scheme.size(); ++v)
        worst = std::max(worst, std::abs(q.q[m.scheme.image(v)] - m.apply(v, q.q[v])));
    return worst;
}

/**
 * All boundary markings of a model map: pick a fixed point of the
 * composite return map on each periodic circle, then pull back through
 * the trees; the count equals |Gamma(S)|.
 */
inline std::vector<BoundaryMarking> enumerate_boundary_markings(const ModelMap& m) {
    const auto& s = m.scheme;
    auto dec = cycle_decomposition(s);

    std::vector<BoundaryMarking> partial{BoundaryMarking{std::vector<Complex>(s.size(), Complex(0.0, 0.0))}};

    // Periodic circles first.
    for (const auto& cyc : dec.cycles) {
        int dprod = 1;
        for (int v : cyc) dprod *= s.degree(v);
        auto composite = [&](Complex z) {
            for (int v : cyc) z = m.apply(v, z);
            return z;
        };
        auto ts = circle_detail::solve_on_circle(composite, dprod, 1.0, 0.0);
        if (static_cast<int>(ts.size()) != dprod - 1)
            fail(ErrorCode::RootFindFailure, "composite circle fixed point count mismatch");

        std::vector<BoundaryMarking> next;
        for (const auto& base : partial) {
            for (double t : ts) {
                BoundaryMarking bm = base;
                Complex q0(std::cos(kTau * t), std::sin(kTau * t));
                Complex q = q0;
                for (std::size_t i = 0; i < cyc.size(); ++i) {
                    bm.q[cyc[i]] = q;
                    q = m.apply(cyc[i], q);
                }
                next.push_back(std::move(bm));
            }
        }
        partial = std::move(next);
    }

    // Aperiodic vertices: q(s) is a circle preimage of q(F(s)); process
    // by increasing distance to the cycle so the image is already marked.
    std::vector<int> aperiodic;
    for (int v = 0; v < s.size(); ++v)
        if (dec.tail_depth[v] > 0) aperiodic.push_back(v);
    std::sort(aperiodic.begin(), aperiodic.end(),
              [&](int a, int b) { return dec.tail_depth[a] < dec.tail_depth[b]; });

    for (int v : aperiodic) {
        std::vector<BoundaryMarking> next;
        for (const auto& base : partial) {
            Complex target = base.q[s.image(v)];
            for (Complex pre : circle_preimages(m.products[v], target)) {
                BoundaryMarking bm = base;
                bm.q[v] = pre;
                next.push_back(std::move(bm));
            }
        }
        partial = std::move(next);
    }

    for (const auto& bm : partial)
        if (marking_residual(m, bm) > 1e-10)
            fail(ErrorCode::RootFindFailure, "boundary marking residual too large");
    return partial;
}

struct VertexRadii {
    double inner = 0.0;  // r(s)
    double outer = 0.0;  // R(s)
};

namespace radii_detail {

inline double max_modulus_on_circle(const BlaschkeProduct& b, double radius, int samples = 1024) {
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
        double t = static_cast<double>(k) / samples;
        Complex z = radius * Complex(std::cos(kTau * t), std::sin(kTau * t));
        worst = std::max(worst, std::abs(blaschke_eval(b, z)));
    }
    return worst;
}

}  // namespace radii_detail

/**
 * Radii 0 < r(s) < R(s) < 1 with all interior critical points of beta_s
 * inside radius r(s) and beta_s(closed R(s)-disk) inside the open
 * r(F(s))-disk; found by slack-relaxation over a grid of margins.
 */
inline std::vector<VertexRadii> choose_radii(const ModelMap& m) {
    const auto& s = m.scheme;
    const int n = s.size();
    auto dec = cycle_decomposition(s);

    std::vector<double> crit(n, 0.0);
    for (int v = 0; v < n; ++v)
        if (s.degree(v) >= 2)
            for (Complex c : critical_points(m.products[v])) crit[v] = std::max(crit[v], std::abs(c));

    auto maxmod = [&](int v, double rad) {
        return radii_detail::max_modulus_on_circle(m.products[v], rad);
    };

    for (double slack : {1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
        std::vector<double> r(n, 0.0);
        bool feasible = true;

        // Aperiodic vertices, deepest first, so every preimage is placed
        // before its image receives a lower bound.
        std::vector<int> aperiodic;
        for (int v = 0; v < n; ++v)
            if (dec.tail_depth[v] > 0) aperiodic.push_back(v);
        std::sort(aperiodic.begin(), aperiodic.end(),
                  [&](int a, int b) { return dec.tail_depth[a] > dec.tail_depth[b]; });

        std::vector<double> bound(n, 0.0);  // lower bounds pushed onto images
        for (int v : aperiodic) {
            double rv = std::max({bound[v], crit[v] + slack, 0.5});
            if (rv >= 1.0 - slack) { feasible = false; break; }
            r[v] = rv;
            int img = s.image(v);
            bound[img] = std::max(bound[img], maxmod(v, rv) + slack);
        }
        if (!feasible) continue;

        // Cycle vertices: monotone relaxation of the propagation
        // constraints r(F(v)) >= maxmod(v, r(v)) + slack.
        for (const auto& cyc : dec.cycles)
            for (int v : cyc) r[v] = std::max({bound[v], crit[v] + slack, 0.5});
        for (int round = 0; round < 400 && feasible; ++round) {
            bool changed = false;
            for (const auto& cyc : dec.cycles) {
                for (int v : cyc) {
                    double need = maxmod(v, r[v]) + slack;
                    int img = s.image(v);
                    if (need > r[img] + 1e-13) {
                        r[img] = need;
                        changed = true;
                        if (r[img] >= 1.0 - slack) { feasible = false; break; }
                    }
                }
                if (!feasible) break;
            }
            if (!changed) break;
            if (round == 399) feasible = false;
        }
        if (!feasible) continue;

        // Outer radii by shrinking a candidate overshoot.
        std::vector<VertexRadii> out(n);
        for (int v = 0; v < n && feasible; ++v) {
            double delta = std::min(slack, (1.0 - r[v]) / 2);
            bool placed = false;
            for (int half = 0; half < 60; ++half) {
                double R = r[v] + delta;
                if (R < 1.0 && maxmod(v, R) < r[s.image(v)] - 1e-12) {
                    out[v] = {r[v], R};
                    placed = true;
                    break;
                }
                delta *= 0.5;
            }
            feasible = feasible && placed;
        }
        if (feasible) return out;
    }
    fail(ErrorCode::NoValidRadii, "no radius assignment found on the slack grid");
}

}  // namespace schemelab
