#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "schemelab/dynamics.hpp"
#include "schemelab/genpoly.hpp"

namespace schemelab {

/**
 * The parameterized map families behind the parameter-plane figures.
 * Complex pixel coordinates double as real parameter pairs where the
 * family is real: (re, im) = (c1, c2) or (A, b).
 */
enum class Family {
    Tricorn,         // (s1,z) -> (s2, z^2 + c), (s2,w) -> (s1, w^2 + conj(c))
    Top,             // (s1,z) -> (s2, z^2 + c1), (s2,w) -> (s1, w^2 + c2), real
    Product,         // two non-interacting real quadratics
    Capture,         // (s1,z) -> (s2, z^2 + c1), (s2,w) -> (s2, w^2 + c2), real
    CubicSlice,      // z -> z^3 - 1.5 z + b, complex b
    RealCubicPlus,   // x -> x^3 - 3A x + b, real (A, b)
    RealCubicMinus,  // x -> -x^3 - 3A x + b, real (A, b)
    RationalA,       // f_a(z) = (a - 1)/(z (a - z)), complex a
};

inline const std::vector<std::pair<std::string, Family>>& family_names() {
    static const std::vector<std::pair<std::string, Family>> names = {
        {"tricorn", Family::Tricorn},
        {"top", Family::Top},
        {"product", Family::Product},
        {"capture", Family::Capture},
        {"cubic_slice", Family::CubicSlice},
        {"real_cubic_plus", Family::RealCubicPlus},
        {"real_cubic_minus", Family::RealCubicMinus},
        {"rational_a", Family::RationalA},
    };
    return names;
}

inline Family parse_family(const std::string& name) {
    for (const auto& [n, f] : family_names())
        if (n == name) return f;
    fail(ErrorCode::BadIndex, "unknown family '" + name + "'");
}

/**
 * The generalized polynomial map at a parameter point. The minus real
 * cubic is handled through the linear conjugacy z -> iz, which turns
 * -z^3 - 3Az + b into the monic centered z^3 - 3Az - ib with the same
 * orbit classification.
 */
inline GenPolyMap family_map(Family family, Complex param) {
    switch (family) {
        case Family::Tricorn:
            return make_gen_poly(bitransitive_scheme(), {{param}, {std::conj(param)}});
        case Family::Top:
            return make_gen_poly(bitransitive_scheme(),
                                 {{Complex(param.real(), 0)}, {Complex(param.imag(), 0)}});
        case Family::Product:
            return make_gen_poly(decomposable_scheme(),
                                 {{Complex(param.real(), 0)}, {Complex(param.imag(), 0)}});
        case Family::Capture:
            return make_gen_poly(capture_scheme(),
                                 {{Complex(param.real(), 0)}, {Complex(param.imag(), 0)}});
        case Family::CubicSlice:
            return make_gen_poly(fixed_vertex_scheme(2), {{param, Complex(-1.5, 0)}});
        case Family::RealCubicPlus:
            return make_gen_poly(fixed_vertex_scheme(2),
                                 {{Complex(param.imag(), 0), Complex(-3.0 * param.real(), 0)}});
        case Family::RealCubicMinus:
            return make_gen_poly(fixed_vertex_scheme(2),
                                 {{Complex(0, -param.imag()), Complex(-3.0 * param.real(), 0)}});
        case Family::RationalA:
            fail(ErrorCode::BadIndex, "the rational family is not a polynomial map");
    }
    fail(ErrorCode::BadIndex, "unknown family");
}

/// Direct evaluation of the real cubic family (for symmetry checks).
inline Complex real_cubic_eval(int sign, double a_param, double b_param, Complex x) {
    return static_cast<double>(sign) * x * x * x - 3.0 * a_param * x + b_param;
}

enum class PixelClass : unsigned char {
    AllBounded = 0,   // every critical orbit bounded (black)
    OneEscapes = 1,   // some but not all escape (light grey)
    AllEscape = 2,    // every critical orbit escapes (white)
    CycleBasin = 3,   // rational family: free orbit joins the 0 <-> infinity cycle (white)
    OtherBasin = 4,   // rational family: everything else (black)
    Excluded = 5,     // rational family: the degenerate parameter a = 1 (red)
};

/// Escape counts of the critical orbits; cheap per-pixel classifier.
inline PixelClass classify_escape(const GenPolyMap& f, int max_iter) {
    double esc = escape_radius(f);
    int total = 0, escaped = 0;
    for (const auto& cp : critical_points(f)) {
        ++total;
        int v = cp.vertex;
        Complex z = cp.location;
        for (int k = 0; k < max_iter; ++k) {
            if (std::abs(z) > esc) {
                ++escaped;
                break;
            }
            auto nxt = f.step(v, z);
            v = nxt.first;
            z = nxt.second;
        }
    }
    if (escaped == 0) return PixelClass::AllBounded;
    if (escaped == total) return PixelClass::AllEscape;
    return PixelClass::OneEscapes;
}

/**
 * The rational family f_a(z) = (a-1)/(z(a-z)) on the sphere: iterate the
 * free critical point a/2 and report whether it joins the superattractive
 * 0 <-> infinity cycle. Orbits through the poles pass through infinity,
 * where f(infinity) = 0.
 */
inline PixelClass classify_rational_a(Complex a, int max_iter, double excluded_eps = 1e-12) {
    if (std::abs(a - Complex(1.0, 0.0)) < excluded_eps) return PixelClass::Excluded;
    Complex z = a / 2.0;
    bool at_infinity = false;
    for (int k = 0; k < max_iter; ++k) {
        if (at_infinity) {
            z = Complex(0.0, 0.0);
            at_infinity = false;
            continue;
        }
        if (std::abs(z) < 1e-8) return PixelClass::CycleBasin;   // next stop is infinity
        if (std::abs(z) > 1e8) return PixelClass::CycleBasin;    // effectively at infinity
        Complex den = z * (a - z);
        if (std::abs(den) < 1e-30) {
            at_infinity = true;
            continue;
        }
        z = (a - 1.0) / den;
    }
    return PixelClass::OtherBasin;
}

/// Parameter-plane class at one parameter point.
inline PixelClass classify_parameter(Family family, Complex param, int max_iter,
                                     double excluded_eps = 1e-12) {
    if (family == Family::RationalA) return classify_rational_a(param, max_iter, excluded_eps);
    return classify_escape(family_map(family, param), max_iter);
}

}  // namespace schemelab
