#pragma once

#include <complex>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "schemelab/error.hpp"
#include "schemelab/polynomial.hpp"
#include "schemelab/scheme.hpp"

namespace schemelab {

/**
 * A generalized polynomial map in P^{S0}: for each vertex s a monic
 * centered polynomial f_s of degree d(s) = w(s) + 1, acting on
 * |S0| x C by (s, z) -> (F(s), f_s(z)). Weight-zero vertices carry the
 * identity. coeffs[s] stores (a_0, ..., a_{d-2}) of
 * z^d + a_{d-2} z^{d-2} + ... + a_1 z + a_0.
 */
struct GenPolyMap {
    MappingScheme scheme;
    std::vector<std::vector<Complex>> coeffs;

    int degree(int s) const { return scheme.degree(s); }

    /// f_s(z) by Horner evaluation of the monic centered polynomial.
    Complex apply(int s, Complex z) const {
        int d = degree(s);
        if (d == 1) return z;
        const auto& a = coeffs[s];
        Complex acc(1.0, 0.0);       // leading coefficient
        acc = acc * z;               // skip the zero z^{d-1} coefficient
        for (int k = d - 2; k >= 0; --k) acc = acc * z + a[k];
        return acc;
    }

    /// f_s'(z).
    Complex derivative(int s, Complex z) const {
        int d = degree(s);
        if (d == 1) return Complex(1.0, 0.0);
        const auto& a = coeffs[s];
        Complex acc = Complex(static_cast<double>(d), 0.0);
        acc = acc * z;
        for (int k = d - 2; k >= 1; --k) acc = acc * z + a[k] * static_cast<double>(k);
        return acc;
    }

    std::pair<int, Complex> step(int s, Complex z) const { return {scheme.image(s), apply(s, z)}; }

    Poly polynomial(int s) const {
        int d = degree(s);
        Poly p(d + 1, Complex(0.0, 0.0));
        p[d] = Complex(1.0, 0.0);
        for (int k = 0; k <= d - 2; ++k) p[k] = coeffs[s][k];
        return p;
    }
};

inline GenPolyMap make_gen_poly(const MappingScheme& s, std::vector<std::vector<Complex>> coeffs) {
    if (static_cast<int>(coeffs.size()) != s.size())
        fail(ErrorCode::BadIndex, "coefficient rows must match vertex count");
    for (int v = 0; v < s.size(); ++v) {
        std::size_t want = s.degree(v) >= 2 ? static_cast<std::size_t>(s.degree(v) - 1) : 0;
        if (coeffs[v].size() != want)
            fail(ErrorCode::BadIndex, "vertex " + std::to_string(v) + " expects " +
                                          std::to_string(want) + " coefficients");
    }
    return GenPolyMap{s, std::move(coeffs)};
}

/// The base map f0(s, z) = (F(s), z^{d(s)}).
inline GenPolyMap base_map(const MappingScheme& s) {
    std::vector<std::vector<Complex>> coeffs(s.size());
    for (int v = 0; v < s.size(); ++v)
        if (s.degree(v) >= 2) coeffs[v].assign(s.degree(v) - 1, Complex(0.0, 0.0));
    return GenPolyMap{s, std::move(coeffs)};
}

/// Complex literal of the form "a+bi", "a-bi", "a", "bi", "i" or "-i".
inline Complex parse_complex(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) fail(ErrorCode::ParseError, "empty complex literal");

    auto bad = [&]() -> double { fail(ErrorCode::ParseError, "bad complex literal '" + text + "'"); };
    auto number = [&](std::string s) -> double {
        if (s.empty() || s == "+") return 1.0;
        if (s == "-") return -1.0;
        std::size_t used = 0;
        double val = 0.0;
        try {
            val = std::stod(s, &used);
        } catch (...) {
            return bad();
        }
        if (used != s.size()) return bad();
        return val;
    };

    // split at the last '+'/'-' that is not part of an exponent or leading
    std::size_t split = std::string::npos;
    for (std::size_t i = t.size(); i-- > 1;) {
        if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (t.back() == 'i') {
        std::string imag_part = t.substr(0, t.size() - 1);
        if (split == std::string::npos || split == 0)
            return {0.0, number(imag_part)};
        return {number(t.substr(0, split)), number(imag_part.substr(split))};
    }
    if (split != std::string::npos && t.find('i') != std::string::npos) bad();
    return {number(t), 0.0};
}

inline std::string format_complex(Complex z) {
    double re = z.real() == 0.0 ? 0.0 : z.real();  // normalize -0
    double im = z.imag() == 0.0 ? 0.0 : z.imag();
    std::ostringstream os;
    os.precision(17);
    os << re;
    if (im >= 0) os << "+";
    os << im << "i";
    return os.str();
}

/**
 * Map file: one line per vertex, "id image : c0 c1 ... c_{d-2}" with
 * complex literals "a+bi"; the degree is the coefficient count plus one
 * (no coefficients marks an identity vertex), weights follow as d - 1.
 */
inline GenPolyMap parse_map_file(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::map<int, std::pair<int, std::vector<Complex>>> rows;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected 'id image : coeffs'");
        std::istringstream head(line.substr(0, colon));
        long long id, image;
        if (!(head >> id >> image))
            fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected 'id image : coeffs'");
        std::istringstream tail(line.substr(colon + 1));
        std::vector<Complex> coeffs;
        std::string token;
        while (tail >> token) {
            try {
                coeffs.push_back(parse_complex(token));
            } catch (const Error&) {
                fail(ErrorCode::ParseError,
                     "line " + std::to_string(lineno) + ": bad coefficient '" + token + "'");
            }
        }
        if (rows.count(static_cast<int>(id)))
            fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": duplicate id");
        rows[static_cast<int>(id)] = {static_cast<int>(image), std::move(coeffs)};
    }
    if (rows.empty()) fail(ErrorCode::ParseError, "no vertex rows found");

    std::vector<MappingScheme::Vertex> verts;
    std::vector<std::vector<Complex>> coeffs;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
        auto it = rows.find(i);
        if (it == rows.end()) fail(ErrorCode::ParseError, "ids are not a contiguous 0-based range");
        int degree = static_cast<int>(it->second.second.size()) + 1;
        verts.push_back({degree - 1, it->second.first});
        coeffs.push_back(it->second.second);
    }
    return make_gen_poly(validate(verts), std::move(coeffs));
}

inline std::string serialize_map_file(const GenPolyMap& f) {
    std::ostringstream os;
    for (int v = 0; v < f.scheme.size(); ++v) {
        os << v << ' ' << f.scheme.image(v) << " :";
        for (Complex c : f.coeffs[v]) os << ' ' << format_complex(c);
        os << '\n';
    }
    return os.str();
}

}  // namespace schemelab
