#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "schemelab/error.hpp"
#include "schemelab/polynomial.hpp"

namespace schemelab {

/// Multipliers (alpha, beta, gamma) at the three marked fixed points of a
/// quadratic rational map.
struct MultiplierTriple {
    Complex alpha, beta, gamma;
};

/// Coordinates (x1, x2, x3) on the totally marked variety
/// x1 + x2 + x3 + x1 x2 x3 = 0.
struct TotallyMarkedPoint {
    std::array<Complex, 3> x;
};

/// alpha*beta*gamma - alpha - beta - gamma + 2.
inline Complex m2fm_residual(Complex alpha, Complex beta, Complex gamma) {
    return alpha * beta * gamma - alpha - beta - gamma + 2.0;
}

/// 3 - 2(alpha+beta+gamma) + (alpha beta + alpha gamma + beta gamma), the
/// fixed-point multiplier relation for cubic polynomials.
inline Complex cubic_relation_residual(Complex alpha, Complex beta, Complex gamma) {
    return 3.0 - 2.0 * (alpha + beta + gamma) + (alpha * beta + alpha * gamma + beta * gamma);
}

/// Holomorphic index sum over fixed points: sum 1/(1 - lambda_j).
inline Complex index_sum(const std::vector<Complex>& multipliers) {
    Complex sum(0.0, 0.0);
    for (Complex lam : multipliers) {
        if (std::abs(lam - Complex(1.0, 0.0)) < 1e-12)
            fail(ErrorCode::DegenerateMultiplier, "index sum needs every multiplier != 1");
        sum += 1.0 / (1.0 - lam);
    }
    return sum;
}

inline Complex qtm_residual(const TotallyMarkedPoint& p) {
    return p.x[0] + p.x[1] + p.x[2] + p.x[0] * p.x[1] * p.x[2];
}

/// lambda_k = 1 + x_h x_j for {h, j, k} any permutation of {1, 2, 3}.
inline MultiplierTriple lambdas_from_x(const TotallyMarkedPoint& p, double tol = 1e-10) {
    if (std::abs(qtm_residual(p)) > tol)
        fail(ErrorCode::OffVariety, "point does not satisfy the totally marked relation");
    return {1.0 + p.x[1] * p.x[2], 1.0 + p.x[2] * p.x[0], 1.0 + p.x[0] * p.x[1]};
}

/**
 * Invert the multiplier map: x_h^2 = 1 - lambda_j lambda_k, signs fixed
 * by pushing forward again; both global sign classes are returned (they
 * swap the numbering of the critical points).
 */
inline std::vector<TotallyMarkedPoint> x_from_lambdas(const MultiplierTriple& m,
                                                      double tol = 1e-10) {
    if (std::abs(m2fm_residual(m.alpha, m.beta, m.gamma)) > tol)
        fail(ErrorCode::OffVariety, "multipliers do not satisfy the fixed point relation");

    std::array<Complex, 3> lam{m.alpha, m.beta, m.gamma};
    std::array<Complex, 3> sq;
    for (int h = 0; h < 3; ++h) sq[h] = 1.0 - lam[(h + 1) % 3] * lam[(h + 2) % 3];

    TotallyMarkedPoint p;
    // Anchor the largest coordinate on its principal square root, then
    // divide out the others to keep the pairwise products consistent.
    int anchor = 0;
    for (int h = 1; h < 3; ++h)
        if (std::abs(sq[h]) > std::abs(sq[anchor])) anchor = h;
    p.x[anchor] = std::sqrt(sq[anchor]);

    if (std::abs(p.x[anchor]) < 1e-14) {
        // all three coordinates vanish: the branch point (1,1,1)
        p.x = {Complex(0, 0), Complex(0, 0), Complex(0, 0)};
    } else {
        int j = (anchor + 1) % 3, k = (anchor + 2) % 3;
        // lambda_k = 1 + x_anchor x_j  and  lambda_j = 1 + x_k x_anchor
        p.x[j] = (lam[k] - 1.0) / p.x[anchor];
        p.x[k] = (lam[j] - 1.0) / p.x[anchor];
    }

    for (const auto& cand : {p, TotallyMarkedPoint{{-p.x[0], -p.x[1], -p.x[2]}}}) {
        if (std::abs(qtm_residual(cand)) > 100 * tol)
            fail(ErrorCode::OffVariety, "inverse image left the variety");
        auto back = lambdas_from_x(cand, 100 * tol);
        if (std::abs(back.alpha - m.alpha) + std::abs(back.beta - m.beta) +
                std::abs(back.gamma - m.gamma) > 100 * tol)
            fail(ErrorCode::OffVariety, "inverse image does not push forward to the multipliers");
    }
    return {p, TotallyMarkedPoint{{-p.x[0], -p.x[1], -p.x[2]}}};
}

/// A rational map as a pair of coefficient lists p/q.
struct RationalMap {
    Poly num, den;

    Complex eval(Complex z) const { return poly_eval(num, z) / poly_eval(den, z); }

    Complex derivative(Complex z) const {
        Complex n = poly_eval(num, z), d = poly_eval(den, z);
        Complex dn = poly_eval(poly_derivative(num), z), dd = poly_eval(poly_derivative(den), z);
        return (dn * d - n * dd) / (d * d);
    }
};

/// f(z) = z (z + alpha) / (beta z + 1): fixes 0 with multiplier alpha,
/// infinity with multiplier beta.
inline RationalMap normal_form(Complex alpha, Complex beta) {
    if (std::abs(alpha * beta - Complex(1.0, 0.0)) < 1e-12)
        fail(ErrorCode::CrashedFixedPoints, "alpha*beta = 1 crashes the marked fixed points");
    return {Poly{Complex(0, 0), alpha, Complex(1, 0)}, Poly{Complex(1, 0), beta}};
}

inline Complex third_fixed_point(Complex alpha, Complex beta) {
    if (std::abs(alpha * beta - Complex(1.0, 0.0)) < 1e-12)
        fail(ErrorCode::CrashedFixedPoints, "alpha*beta = 1 crashes the marked fixed points");
    return (1.0 - alpha) / (1.0 - beta);
}

/**
 * Critical points of the normal form: (-1 +- x)/beta with x^2 = 1 -
 * alpha beta. For beta = 0 the map is the polynomial z(z + alpha) with
 * critical points -alpha/2 and infinity.
 */
inline std::pair<Complex, Complex> critical_points_nf(Complex alpha, Complex beta) {
    if (std::abs(alpha * beta - Complex(1.0, 0.0)) < 1e-12)
        fail(ErrorCode::CrashedFixedPoints, "alpha*beta = 1 crashes the marked fixed points");
    if (std::abs(beta) < 1e-14) {
        return {-alpha / 2.0, Complex(INFINITY, 0.0)};
    }
    Complex x = std::sqrt(1.0 - alpha * beta);
    return {(-1.0 + x) / beta, (-1.0 - x) / beta};
}

/// r_h = (1 - x_h)/(1 + x_h); on the variety r1 r2 r3 = 1.
inline std::array<Complex, 3> cross_ratios(const TotallyMarkedPoint& p) {
    std::array<Complex, 3> r;
    for (int h = 0; h < 3; ++h) {
        if (std::abs(p.x[h] + Complex(1.0, 0.0)) < 1e-13)
            fail(ErrorCode::CrossRatioPole, "cross ratio pole at x = -1");
        r[h] = (1.0 - p.x[h]) / (1.0 + p.x[h]);
    }
    return r;
}

/**
 * Solve the fixed point identity z q(z) - p(z) = prod (z - z_j) for p,
 * given monic q of degree d and the d+1 prescribed fixed points; returns
 * f = p/q with f(z_j) = z_j.
 */
inline RationalMap from_fixed_point_data(const Poly& q, const std::vector<Complex>& fixed_points) {
    int d = poly_degree(q);
    if (d < 1) fail(ErrorCode::BadIndex, "denominator must have degree >= 1");
    if (static_cast<int>(fixed_points.size()) != d + 1)
        fail(ErrorCode::BadIndex, "need exactly d+1 fixed points");
    if (std::abs(q[d] - Complex(1.0, 0.0)) > 1e-12)
        fail(ErrorCode::BadIndex, "denominator must be monic");

    for (Complex z : fixed_points)
        if (std::abs(poly_eval(q, z)) < 1e-12)
            fail(ErrorCode::FixedPointOnPoleSet, "a prescribed fixed point is a pole");

    Poly zq = poly_mul(Poly{Complex(0, 0), Complex(1, 0)}, q);
    Poly p = poly_sub(zq, poly_from_roots(fixed_points));
    // both are monic of degree d+1, so p has degree <= d
    p.resize(d + 1);
    return {p, q};
}

}  // namespace schemelab
