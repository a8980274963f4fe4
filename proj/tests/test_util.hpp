#pragma once

#include <random>

#include "schemelab/blaschke.hpp"
#include "schemelab/scheme.hpp"

namespace schemelab::testutil {

inline Complex random_disk_point(std::mt19937& rng, double max_radius) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double r = max_radius * std::sqrt(unit(rng));
    double t = kTau * unit(rng);
    return Complex(r * std::cos(t), r * std::sin(t));
}

/// A valid element of B^S with zeros kept away from the unit circle.
inline ModelMap random_model_map(const MappingScheme& s, std::mt19937& rng) {
    auto dec = cycle_decomposition(s);
    ModelMap m{s, {}};
    for (int v = 0; v < s.size(); ++v) {
        int d = s.degree(v);
        std::vector<Complex> zeros;
        if (dec.tail_depth[v] == 0) {
            zeros.push_back(Complex(0.0, 0.0));
            for (int k = 1; k < d; ++k) zeros.push_back(random_disk_point(rng, 0.6));
        } else {
            double cap = std::min(0.45, 0.8 / std::max(1, d - 1));
            Complex sum(0.0, 0.0);
            for (int k = 0; k + 1 < d; ++k) {
                Complex a = random_disk_point(rng, cap);
                zeros.push_back(a);
                sum += a;
            }
            zeros.push_back(-sum);
        }
        m.products.push_back(BlaschkeProduct{Complex(1.0, 0.0), std::move(zeros)});
    }
    return m;
}

}  // namespace schemelab::testutil
