#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "schemelab/error.hpp"

namespace schemelab {

using Complex = std::complex<double>;

inline constexpr double kTau = 6.283185307179586476925286766559;

/// Dense polynomial, coeffs[k] multiplying z^k.
using Poly = std::vector<Complex>;

inline Complex poly_eval(const Poly& p, Complex z) {
    Complex acc(0.0, 0.0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * z + p[i];
    return acc;
}

inline Poly poly_derivative(const Poly& p) {
    Poly d;
    if (p.size() <= 1) return {Complex(0.0, 0.0)};
    d.resize(p.size() - 1);
    for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = p[k] * static_cast<double>(k);
    return d;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

inline Poly poly_add(const Poly& a, const Poly& b) {
    Poly c(std::max(a.size(), b.size()), Complex(0.0, 0.0));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    return c;
}

inline Poly poly_sub(const Poly& a, const Poly& b) {
    Poly c(std::max(a.size(), b.size()), Complex(0.0, 0.0));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    return c;
}

inline Poly poly_scale(const Poly& a, Complex s) {
    Poly c(a);
    for (auto& x : c) x *= s;
    return c;
}

/// (z - r0)(z - r1)... from a root list.
inline Poly poly_from_roots(const std::vector<Complex>& roots) {
    Poly p{Complex(1.0, 0.0)};
    for (Complex r : roots) p = poly_mul(p, Poly{-r, Complex(1.0, 0.0)});
    return p;
}

inline int poly_degree(const Poly& p, double rel_tol = 1e-14) {
    double biggest = 0.0;
    for (const auto& c : p) biggest = std::max(biggest, std::abs(c));
    if (biggest == 0.0) return -1;
    for (std::size_t i = p.size(); i-- > 0;)
        if (std::abs(p[i]) > rel_tol * biggest) return static_cast<int>(i);
    return -1;
}

/**
 * All complex roots by Aberth-Ehrlich simultaneous iteration.
 *
 * Leading coefficients below rel_tol * max|coeff| are discarded; exact
 * trailing zeros come back as roots at the origin. Degrees in this
 * project stay small (<= ~10), where the method is reliably quadratic.
 */
inline std::vector<Complex> poly_roots(const Poly& poly, double tol = 1e-13, int max_sweeps = 200) {
    int deg = poly_degree(poly);
    if (deg <= 0) return {};

    Poly p(poly.begin(), poly.begin() + deg + 1);

    // Peel off roots at zero.
    std::vector<Complex> roots;
    std::size_t low = 0;
    while (low < p.size() && std::abs(p[low]) == 0.0) ++low;
    for (std::size_t i = 0; i < low; ++i) roots.push_back(Complex(0.0, 0.0));
    if (low > 0) p.erase(p.begin(), p.begin() + low);

    int n = static_cast<int>(p.size()) - 1;
    if (n <= 0) return roots;
    if (n == 1) {
        roots.push_back(-p[0] / p[1]);
        return roots;
    }

    // Cauchy-style enclosing radius.
    double lead = std::abs(p[n]);
    double radius = 0.0;
    for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(p[i]) / lead);
    radius = 1.0 + radius;

    Poly dp = poly_derivative(p);
    std::vector<Complex> z(n);
    for (int i = 0; i < n; ++i) {
        double th = 2.0 * 3.14159265358979323846 * (static_cast<double>(i) / n) + 0.3971;
        z[i] = 0.7 * radius * Complex(std::cos(th), std::sin(th));
    }

    double scale = 0.0;
    for (const auto& c : p) scale = std::max(scale, std::abs(c));

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            Complex pv = poly_eval(p, z[i]);
            if (std::abs(pv) < tol * scale) continue;
            Complex dv = poly_eval(dp, z[i]);
            Complex ratio = (std::abs(dv) == 0.0) ? Complex(0.0, 0.0) : pv / dv;
            Complex sum(0.0, 0.0);
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                Complex diff = z[i] - z[j];
                if (std::abs(diff) < 1e-300) diff = Complex(1e-300, 0.0);
                sum += 1.0 / diff;
            }
            Complex denom = 1.0 - ratio * sum;
            Complex step = (std::abs(denom) < 1e-300) ? ratio : ratio / denom;
            z[i] -= step;
            worst = std::max(worst, std::abs(step));
        }
        if (worst < tol) break;
    }

    for (int i = 0; i < n; ++i) {
        if (!std::isfinite(z[i].real()) || !std::isfinite(z[i].imag()))
            fail(ErrorCode::RootFindFailure, "Aberth iteration diverged");
        roots.push_back(z[i]);
    }
    return roots;
}

/// Group numerically coincident roots; returns (representative, multiplicity).
inline std::vector<std::pair<Complex, int>> cluster_roots(std::vector<Complex> roots,
                                                          double cluster_tol = 1e-7) {
    std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    std::vector<std::pair<Complex, int>> out;
    std::vector<bool> used(roots.size(), false);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) continue;
        Complex sum = roots[i];
        int count = 1;
        used[i] = true;
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            if (!used[j] && std::abs(roots[j] - roots[i]) < cluster_tol) {
                sum += roots[j];
                ++count;
                used[j] = true;
            }
        }
        out.emplace_back(sum / static_cast<double>(count), count);
    }
    return out;
}

}  // namespace schemelab
