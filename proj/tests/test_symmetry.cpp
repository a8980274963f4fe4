#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "schemelab/census.hpp"
#include "schemelab/symmetry.hpp"

using namespace schemelab;

namespace {

GenPolyMap random_map(const MappingScheme& s, std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<std::vector<Complex>> coeffs(s.size());
    for (int v = 0; v < s.size(); ++v)
        for (int k = 0; k <= s.degree(v) - 2; ++k) coeffs[v].push_back({dist(rng), dist(rng)});
    return make_gen_poly(s, std::move(coeffs));
}

double map_distance(const GenPolyMap& a, const GenPolyMap& b) {
    double d = 0.0;
    for (int v = 0; v < a.scheme.size(); ++v)
        for (std::size_t k = 0; k < a.coeffs[v].size(); ++k)
            d = std::max(d, std::abs(a.coeffs[v][k] - b.coeffs[v][k]));
    return d;
}

}  // namespace

TEST_CASE("gamma order formula on the weight-2 schemes") {
    REQUIRE(gamma_order(bitransitive_scheme()) == 3);   // 2*2 - 1
    REQUIRE(gamma_order(capture_scheme()) == 2);        // (2-1)*2
    REQUIRE(gamma_order(decomposable_scheme()) == 1);   // (2-1)*(2-1)
    for (int d = 2; d <= 6; ++d) REQUIRE(gamma_order(fixed_vertex_scheme(d - 1)) == d - 1);
}

TEST_CASE("brute-force enumeration matches the order formula") {
    for (int w = 1; w <= 3; ++w) {
        for (const auto& s : enumerate_all(w)) {
            auto gammas = enumerate_gamma(s);
            REQUIRE(static_cast<std::int64_t>(gammas.size()) == gamma_order(s));
            for (const auto& g : gammas) REQUIRE(satisfies_symmetry_relation(s, g));
            // the identity is present
            REQUIRE(std::find(gammas.begin(), gammas.end(), identity_symmetry(s)) != gammas.end());
        }
    }
}

TEST_CASE("gamma is closed under composition") {
    for (const auto& s : {bitransitive_scheme(), capture_scheme(), fixed_vertex_scheme(3)}) {
        auto gammas = enumerate_gamma(s);
        for (const auto& a : gammas)
            for (const auto& b : gammas) {
                auto c = compose(a, b);
                REQUIRE(satisfies_symmetry_relation(s, c));
                REQUIRE(std::find(gammas.begin(), gammas.end(), c) != gammas.end());
            }
    }
}

TEST_CASE("gamma0 of the capture scheme has two elements") {
    auto s = capture_scheme();
    auto g0 = gamma0(s);
    REQUIRE(g0.size() == 2);  // one free degree-2 vertex
    REQUIRE(enumerate_gamma(s).size() == 2);

    // every Gamma_0 element satisfies the symmetry relation
    for (const auto& g : g0) REQUIRE(satisfies_symmetry_relation(s, g));
}

TEST_CASE("gamma0 of the bitransitive scheme is trivial") {
    REQUIRE(gamma0(bitransitive_scheme()).size() == 1);
}

TEST_CASE("automorphism groups of the weight-2 schemes") {
    REQUIRE(aut(decomposable_scheme()).size() == 2);
    REQUIRE(aut(bitransitive_scheme()).size() == 2);
    REQUIRE(aut(capture_scheme()).size() == 1);
    REQUIRE(extended_group(bitransitive_scheme()).size() == 2 * 3);
}

TEST_CASE("identity and kernel act trivially on maps") {
    std::mt19937 rng(7);
    for (const auto& s : {capture_scheme(), bitransitive_scheme(), fixed_vertex_scheme(2)}) {
        for (int trial = 0; trial < 100; ++trial) {
            auto f = random_map(s, rng);
            REQUIRE(map_distance(act_on_map(identity_symmetry(s), f), f) == 0.0);
            for (const auto& g : gamma0(s))
                REQUIRE(map_distance(act_on_map(g, f), f) < 1e-15);
        }
    }
}

TEST_CASE("action on a degree-3 aperiodic vertex matches the expansion") {
    // s0 (w=2, d=3) feeding a fixed vertex s1 (w=1): rho_{s0} runs over
    // cube roots of unity, rho_{s1} = 1.
    auto s = make_scheme({{2, 1}, {1, 1}});
    REQUIRE(gamma_order(s) == 3);
    auto gammas = enumerate_gamma(s);
    REQUIRE(gammas.size() == 3);

    Complex a(0.3, -0.2), b(0.7, 0.1), c(-0.4, 0.0);
    auto f = make_gen_poly(s, {{b, a}, {c}});
    for (const auto& g : gammas) {
        auto fg = act_on_map(g, f);
        Complex omega = g.rho[0].to_complex();
        // ((w z)^3 + a (w z) + b) / 1 = z^3 + a w z + b
        REQUIRE(std::abs(fg.coeffs[0][1] - a * omega) < 1e-14);
        REQUIRE(std::abs(fg.coeffs[0][0] - b) < 1e-14);
        // result evaluates as the conjugate g^{-1} o f o g
        std::mt19937 rng(11);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        for (int k = 0; k < 20; ++k) {
            Complex z(dist(rng), dist(rng));
            Complex lhs = fg.apply(0, z);
            Complex rhs = f.apply(0, omega * z) / g.rho[1].to_complex();
            REQUIRE(std::abs(lhs - rhs) < 1e-12);
        }
    }
}

TEST_CASE("action composes contravariantly (and Gamma is abelian)") {
    std::mt19937 rng(21);
    auto s = make_scheme({{2, 1}, {1, 1}});
    auto gammas = enumerate_gamma(s);
    for (const auto& g : gammas)
        for (const auto& h : gammas) {
            auto f = random_map(s, rng);
            auto lhs = act_on_map(g, act_on_map(h, f));
            auto rhs = act_on_map(compose(g, h), f);
            REQUIRE(map_distance(lhs, rhs) < 1e-14);
        }
}

TEST_CASE("reduction preserves the symmetry group order") {
    auto f2 = make_scheme({{1, 1}, {0, 2}, {1, 2}});
    auto f3 = make_scheme({{1, 1}, {0, 2}, {1, 3}, {0, 2}});
    auto f4 = make_scheme({{1, 1}, {0, 2}, {0, 3}, {1, 3}});
    for (const auto& s : {f2, f3, f4}) {
        REQUIRE(gamma_order(s) == gamma_order(reduce(s)));
        REQUIRE(enumerate_gamma(s).size() == enumerate_gamma(reduce(s)).size());
    }
}

TEST_CASE("antilinear involutions square to the identity and commute with the base map") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (const auto& s : {bitransitive_scheme(), capture_scheme(), fixed_vertex_scheme(2),
                          make_scheme({{2, 1}, {1, 1}})}) {
        auto f0 = base_map(s);
        for (const auto& inv : enumerate_antilinear(s)) {
            for (int v = 0; v < s.size(); ++v) {
                int v2 = inv.vertex_involution[v];
                REQUIRE(inv.vertex_involution[v2] == v);
                REQUIRE(s.degree(v2) == s.degree(v));
                REQUIRE(inv.alpha[v2] == inv.alpha[v]);
                REQUIRE(inv.vertex_involution[s.image(v)] == s.image(v2));
                // alpha(F(s)) = alpha(s)^{d(s)}
                REQUIRE(inv.alpha[s.image(v)] == inv.alpha[v].times(s.degree(v)));
            }
            // numeric check on random points: gamma(f0(s,z)) = f0(gamma(s,z))
            for (int k = 0; k < 25; ++k) {
                int v = static_cast<int>(rng() % s.size());
                Complex z(dist(rng), dist(rng));
                auto [fv, fz] = f0.step(v, z);
                Complex lhs = inv.alpha[fv].to_complex() * std::conj(fz);
                int gv = inv.vertex_involution[v];
                Complex gz = inv.alpha[v].to_complex() * std::conj(z);
                Complex rhs = f0.apply(gv, gz);
                REQUIRE(f0.scheme.image(gv) == inv.vertex_involution[fv]);
                REQUIRE(std::abs(lhs - rhs) < 1e-12);
            }
        }
    }
}

TEST_CASE("real forms of a single vertex: one class for even degree, two for odd") {
    // even degree
    for (int d : {2, 4, 6}) {
        auto s = fixed_vertex_scheme(d - 1);
        auto classes = classify_real_forms(s);
        REQUIRE(classes.size() == 1);
        auto sf = sign_normalize(s, classes[0][0]);
        REQUIRE(sf.sigma[0] == 1);
    }
    // odd degree >= 3
    for (int d : {3, 5, 7}) {
        auto s = fixed_vertex_scheme(d - 1);
        auto classes = classify_real_forms(s);
        REQUIRE(classes.size() == 2);
        std::set<int> signs;
        for (const auto& cls : classes) signs.insert(sign_normalize(s, cls[0]).sigma[0]);
        REQUIRE(signs == std::set<int>{-1, 1});
    }
}

TEST_CASE("the bitransitive scheme has exactly two real forms") {
    auto s = bitransitive_scheme();
    auto classes = classify_real_forms(s);
    REQUIRE(classes.size() == 2);

    // one class per vertex involution, each containing an alpha == 1 element
    std::set<std::vector<int>> involutions;
    for (const auto& cls : classes) {
        involutions.insert(cls[0].vertex_involution);
        bool has_trivial_alpha = false;
        for (const auto& inv : cls) {
            bool trivial = true;
            for (const auto& a : inv.alpha) trivial = trivial && a.is_zero();
            has_trivial_alpha = has_trivial_alpha || trivial;
        }
        REQUIRE(has_trivial_alpha);
    }
    REQUIRE(involutions == std::set<std::vector<int>>{{0, 1}, {1, 0}});
}

TEST_CASE("real form dimension equals the total weight") {
    REQUIRE(real_form_dimension(bitransitive_scheme()) == 2);
    REQUIRE(real_form_dimension(fixed_vertex_scheme(5)) == 5);
}
