#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "schemelab/moduli.hpp"

using namespace schemelab;

namespace {

Complex rand_c(std::mt19937& rng, double scale = 1.5) {
    std::uniform_real_distribution<double> d(-scale, scale);
    return {d(rng), d(rng)};
}

// Random point on x1 + x2 + x3 + x1 x2 x3 = 0 by solving for x3.
TotallyMarkedPoint random_variety_point(std::mt19937& rng) {
    while (true) {
        Complex x1 = rand_c(rng), x2 = rand_c(rng);
        Complex den = 1.0 + x1 * x2;
        if (std::abs(den) < 0.1) continue;
        return {{x1, x2, -(x1 + x2) / den}};
    }
}

}  // namespace

TEST_CASE("fixed point relation residuals") {
    REQUIRE(std::abs(m2fm_residual(Complex(1, 0), Complex(1, 0), Complex(1, 0))) == 0.0);
    REQUIRE(std::abs(cubic_relation_residual(Complex(1, 0), Complex(1, 0), Complex(1, 0))) == 0.0);

    std::mt19937 rng(2);
    for (int k = 0; k < 200; ++k) {
        auto p = random_variety_point(rng);
        auto m = lambdas_from_x(p);
        REQUIRE(std::abs(m2fm_residual(m.alpha, m.beta, m.gamma)) < 1e-12);
    }
}

TEST_CASE("index sum identity against the multiplier relation") {
    std::mt19937 rng(3);
    int on_variety_checked = 0;
    for (int k = 0; k < 1000; ++k) {
        Complex a = rand_c(rng), b = rand_c(rng), c = rand_c(rng);
        if (std::abs(a - 1.0) < 1e-3 || std::abs(b - 1.0) < 1e-3 || std::abs(c - 1.0) < 1e-3)
            continue;
        Complex lhs = (index_sum({a, b, c}) - 1.0) * (1.0 - a) * (1.0 - b) * (1.0 - c);
        REQUIRE(std::abs(lhs - m2fm_residual(a, b, c)) < 1e-9);
    }
    for (int k = 0; k < 1000; ++k) {
        auto m = lambdas_from_x(random_variety_point(rng));
        if (std::abs(m.alpha - 1.0) < 1e-3 || std::abs(m.beta - 1.0) < 1e-3 ||
            std::abs(m.gamma - 1.0) < 1e-3)
            continue;
        REQUIRE(std::abs(index_sum({m.alpha, m.beta, m.gamma}) - 1.0) < 1e-9);
        ++on_variety_checked;
    }
    REQUIRE(on_variety_checked > 800);
}

TEST_CASE("index sum rejects multiplier one") {
    REQUIRE_THROWS_MATCHES(index_sum({Complex(1, 0), Complex(0.5, 0)}), Error,
                           Catch::Matchers::Predicate<Error>([](const Error& e) {
                               return e.code() == ErrorCode::DegenerateMultiplier;
                           }));
}

TEST_CASE("multipliers from the branch point and a symmetric slice") {
    auto branch = lambdas_from_x({{Complex(0, 0), Complex(0, 0), Complex(0, 0)}});
    REQUIRE(std::abs(branch.alpha - 1.0) < 1e-15);
    REQUIRE(std::abs(branch.beta - 1.0) < 1e-15);
    REQUIRE(std::abs(branch.gamma - 1.0) < 1e-15);

    for (double t : {0.3, 1.1, -0.8}) {
        auto m = lambdas_from_x({{Complex(t, 0), Complex(-t, 0), Complex(0, 0)}});
        REQUIRE(std::abs(m.alpha - 1.0) < 1e-14);
        REQUIRE(std::abs(m.beta - 1.0) < 1e-14);
        REQUIRE(std::abs(m.gamma - (1.0 - t * t)) < 1e-14);
    }
}

TEST_CASE("round trip x -> lambda -> {x, -x}") {
    std::mt19937 rng(5);
    for (int k = 0; k < 100; ++k) {
        auto p = random_variety_point(rng);
        auto m = lambdas_from_x(p);
        auto back = x_from_lambdas(m);
        REQUIRE(back.size() == 2);
        bool plus = true, minus = true;
        for (int h = 0; h < 3; ++h) {
            plus = plus && std::abs(back[0].x[h] - p.x[h]) < 1e-8;
            minus = minus && std::abs(back[0].x[h] + p.x[h]) < 1e-8;
        }
        REQUIRE((plus || minus));
        // the two classes are global sign flips of each other
        for (int h = 0; h < 3; ++h) REQUIRE(std::abs(back[0].x[h] + back[1].x[h]) < 1e-12);
        // both satisfy the variety relation and push forward to m
        for (const auto& q : back) {
            REQUIRE(std::abs(qtm_residual(q)) < 1e-8);
            auto fwd = lambdas_from_x(q, 1e-6);
            REQUIRE(std::abs(fwd.alpha - m.alpha) < 1e-8);
            REQUIRE(std::abs(fwd.beta - m.beta) < 1e-8);
            REQUIRE(std::abs(fwd.gamma - m.gamma) < 1e-8);
        }
    }
}

TEST_CASE("x squared identity for all index patterns") {
    std::mt19937 rng(7);
    for (int k = 0; k < 500; ++k) {
        auto p = random_variety_point(rng);
        auto m = lambdas_from_x(p);
        std::array<Complex, 3> lam{m.alpha, m.beta, m.gamma};
        for (int h = 0; h < 3; ++h) {
            Complex expect = 1.0 - lam[(h + 1) % 3] * lam[(h + 2) % 3];
            REQUIRE(std::abs(p.x[h] * p.x[h] - expect) < 1e-11);
        }
    }
}

TEST_CASE("sign and permutation equivariance") {
    std::mt19937 rng(11);
    for (int k = 0; k < 100; ++k) {
        auto p = random_variety_point(rng);
        auto m = lambdas_from_x(p);
        // global sign flip fixes the multipliers
        auto flip = lambdas_from_x({{-p.x[0], -p.x[1], -p.x[2]}});
        REQUIRE(std::abs(flip.alpha - m.alpha) < 1e-12);
        REQUIRE(std::abs(flip.beta - m.beta) < 1e-12);
        REQUIRE(std::abs(flip.gamma - m.gamma) < 1e-12);
        // the cyclic permutation of x cycles the multipliers
        auto cyc = lambdas_from_x({{p.x[1], p.x[2], p.x[0]}});
        REQUIRE(std::abs(cyc.alpha - m.beta) < 1e-12);
        REQUIRE(std::abs(cyc.beta - m.gamma) < 1e-12);
        REQUIRE(std::abs(cyc.gamma - m.alpha) < 1e-12);
    }
}

TEST_CASE("off-variety inputs are rejected") {
    REQUIRE_THROWS_MATCHES(lambdas_from_x({{Complex(1, 0), Complex(1, 0), Complex(1, 0)}}), Error,
                           Catch::Matchers::Predicate<Error>([](const Error& e) {
                               return e.code() == ErrorCode::OffVariety;
                           }));
    REQUIRE_THROWS_MATCHES(x_from_lambdas({Complex(3, 0), Complex(5, 0), Complex(7, 0)}), Error,
                           Catch::Matchers::Predicate<Error>([](const Error& e) {
                               return e.code() == ErrorCode::OffVariety;
                           }));
}

TEST_CASE("normal form fixes 0, infinity and the third point") {
    REQUIRE_THROWS_MATCHES(normal_form(Complex(2, 0), Complex(0.5, 0)), Error,
                           Catch::Matchers::Predicate<Error>([](const Error& e) {
                               return e.code() == ErrorCode::CrashedFixedPoints;
                           }));

    // alpha = beta = 0 is the squaring map
    auto sq = normal_form(Complex(0, 0), Complex(0, 0));
    REQUIRE(std::abs(sq.eval(Complex(0.3, 0.4)) - Complex(0.3, 0.4) * Complex(0.3, 0.4)) < 1e-15);
    auto [c1, c2] = critical_points_nf(Complex(0, 0), Complex(0, 0));
    REQUIRE(std::abs(c1) < 1e-15);
    REQUIRE(std::isinf(c2.real()));

    std::mt19937 rng(13);
    for (int k = 0; k < 100; ++k) {
        Complex a = rand_c(rng), b = rand_c(rng);
        if (std::abs(a * b - 1.0) < 0.05 || std::abs(b) < 0.05 || std::abs(1.0 - b) < 0.05) continue;
        auto f = normal_form(a, b);
        // multiplier at 0 is alpha
        REQUIRE(std::abs(f.derivative(Complex(0, 0)) - a) < 1e-10);
        // the third fixed point and its multiplier from the relation
        Complex third = third_fixed_point(a, b);
        REQUIRE(std::abs(f.eval(third) - third) < 1e-9);
        Complex gamma = (2.0 - a - b) / (1.0 - a * b);
        REQUIRE(std::abs(f.derivative(third) - gamma) < 1e-8);
        // critical points kill the derivative
        auto [p1, p2] = critical_points_nf(a, b);
        REQUIRE(std::abs(f.derivative(p1)) < 1e-10);
        REQUIRE(std::abs(f.derivative(p2)) < 1e-10);
    }
}

TEST_CASE("cross ratios multiply to one on the variety") {
    auto r0 = cross_ratios({{Complex(0, 0), Complex(0, 0), Complex(0, 0)}});
    for (auto r : r0) REQUIRE(std::abs(r - 1.0) < 1e-15);

    std::mt19937 rng(17);
    for (int k = 0; k < 200; ++k) {
        auto p = random_variety_point(rng);
        bool near_pole = false;
        for (auto x : p.x) near_pole = near_pole || std::abs(x + 1.0) < 0.05;
        if (near_pole) continue;
        auto r = cross_ratios(p);
        REQUIRE(std::abs(r[0] * r[1] * r[2] - 1.0) < 1e-12);
    }

    REQUIRE_THROWS_MATCHES(cross_ratios({{Complex(-1, 0), Complex(0, 0), Complex(0, 0)}}), Error,
                           Catch::Matchers::Predicate<Error>([](const Error& e) {
                               return e.code() == ErrorCode::CrossRatioPole;
                           }));
}

TEST_CASE("maps from fixed point data") {
    // worked example: q = z^2 + 1, fixed points 0, 1, -1 give p = 2z
    Poly q{Complex(1, 0), Complex(0, 0), Complex(1, 0)};
    std::vector<Complex> fixed{Complex(0, 0), Complex(1, 0), Complex(-1, 0)};
    auto f = from_fixed_point_data(q, fixed);
    REQUIRE(poly_degree(f.num) == 1);
    REQUIRE(std::abs(f.num[1] - Complex(2, 0)) < 1e-14);
    for (Complex z : fixed) REQUIRE(std::abs(f.eval(z) - z) < 1e-13);

    // the monic fixed point identity holds at sample points
    std::mt19937 rng(19);
    for (int k = 0; k < 10; ++k) {
        int d = 2 + static_cast<int>(rng() % 3);
        Poly den(d + 1, Complex(0, 0));
        den[d] = Complex(1, 0);
        for (int j = 0; j < d; ++j) den[j] = rand_c(rng);
        std::vector<Complex> pts;
        for (int j = 0; j <= d; ++j) pts.push_back(rand_c(rng, 2.0));
        RationalMap g;
        try {
            g = from_fixed_point_data(den, pts);
        } catch (const Error& e) {
            REQUIRE(e.code() == ErrorCode::FixedPointOnPoleSet);
            continue;
        }
        Poly lhs = poly_sub(poly_mul(Poly{Complex(0, 0), Complex(1, 0)}, den), g.num);
        Poly rhs = poly_from_roots(pts);
        for (int j = 0; j < 64; ++j) {
            Complex z = rand_c(rng, 3.0);
            REQUIRE(std::abs(poly_eval(lhs, z) - poly_eval(rhs, z)) < 1e-10 * (1.0 + std::abs(poly_eval(rhs, z))));
        }
        for (Complex z : pts) REQUIRE(std::abs(g.eval(z) - z) < 1e-9);
    }
}

TEST_CASE("fixed points on the pole set are rejected") {
    Poly q{Complex(1, 0), Complex(0, 0), Complex(1, 0)};  // z^2 + 1, poles at +-i
    std::vector<Complex> fixed{Complex(0, 1), Complex(1, 0), Complex(-1, 0)};
    REQUIRE_THROWS_MATCHES(from_fixed_point_data(q, fixed), Error,
                           Catch::Matchers::Predicate<Error>([](const Error& e) {
                               return e.code() == ErrorCode::FixedPointOnPoleSet;
                           }));
}
