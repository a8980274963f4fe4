#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include "schemelab/dynamics.hpp"
#include "schemelab/families.hpp"
#include "schemelab/parallel.hpp"

namespace schemelab {

/// Raster with per-pixel class codes and RGB; rows run top to bottom.
struct RasterImage {
    int width = 0, height = 0;
    std::vector<unsigned char> cls;  // class code per pixel
    std::vector<unsigned char> rgb;  // 3 bytes per pixel

    void set(int col, int row, unsigned char code, unsigned char r, unsigned char g,
             unsigned char b) {
        std::size_t p = static_cast<std::size_t>(row) * width + col;
        cls[p] = code;
        rgb[3 * p] = r;
        rgb[3 * p + 1] = g;
        rgb[3 * p + 2] = b;
    }
};

inline RasterImage make_raster(int width, int height) {
    if (width < 1 || height < 1) fail(ErrorCode::BadWindow, "raster dimensions must be positive");
    RasterImage img;
    img.width = width;
    img.height = height;
    img.cls.assign(static_cast<std::size_t>(width) * height, 0);
    img.rgb.assign(static_cast<std::size_t>(width) * height * 3, 0);
    return img;
}

struct Rgb {
    unsigned char r, g, b;
};

/// Palette: bounded black, partial escape light grey, full escape white;
/// the rational-family extras get fixed hues.
inline Rgb class_color(PixelClass c) {
    switch (c) {
        case PixelClass::AllBounded: return {0, 0, 0};
        case PixelClass::OneEscapes: return {200, 200, 200};
        case PixelClass::AllEscape: return {255, 255, 255};
        case PixelClass::CycleBasin: return {255, 255, 255};
        case PixelClass::OtherBasin: return {0, 0, 0};
        case PixelClass::Excluded: return {200, 30, 30};
    }
    return {255, 0, 255};
}

/// Pixel-center parameter value; row 0 is the top of the window.
inline Complex pixel_parameter(const Window& w, int width, int height, int col, int row) {
    double x = w.x0 + (col + 0.5) * (w.x1 - w.x0) / width;
    double y = w.y1 - (row + 0.5) * (w.y1 - w.y0) / height;
    return {x, y};
}

/**
 * Parameter-plane raster for a family: every pixel is classified by the
 * escape pattern of the critical orbits (or the basin pattern for the
 * rational family). Deterministic for fixed inputs; rows render in
 * parallel.
 */
inline RasterImage render_parameter_plane(Family family, const Window& window, int width,
                                          int height, int max_iter = 1000) {
    if (!(window.x0 < window.x1 && window.y0 < window.y1))
        fail(ErrorCode::BadWindow, "window must have positive area");
    RasterImage img = make_raster(width, height);
    double half_pixel = 0.5 * (window.x1 - window.x0) / width;
    parallel_rows(height, [&](int row) {
        for (int col = 0; col < width; ++col) {
            Complex c = pixel_parameter(window, width, height, col, row);
            PixelClass pc = classify_parameter(family, c, max_iter, half_pixel);
            Rgb color = class_color(pc);
            img.set(col, row, static_cast<unsigned char>(pc), color.r, color.g, color.b);
        }
    });
    return img;
}

/**
 * Dynamical-plane raster on one vertex: black where the orbit stays
 * below the escape radius for max_iter steps.
 */
inline RasterImage render_dynamical_plane(const GenPolyMap& f, int vertex, const Window& window,
                                          int width, int height, int max_iter = 1000) {
    if (!(window.x0 < window.x1 && window.y0 < window.y1))
        fail(ErrorCode::BadWindow, "window must have positive area");
    if (vertex < 0 || vertex >= f.scheme.size()) fail(ErrorCode::BadIndex, "vertex out of range");
    RasterImage img = make_raster(width, height);
    double esc = escape_radius(f);
    parallel_rows(height, [&](int row) {
        for (int col = 0; col < width; ++col) {
            Complex z = pixel_parameter(window, width, height, col, row);
            int v = vertex;
            bool escaped = false;
            for (int k = 0; k < max_iter; ++k) {
                if (std::abs(z) > esc) {
                    escaped = true;
                    break;
                }
                auto nxt = f.step(v, z);
                v = nxt.first;
                z = nxt.second;
            }
            if (escaped)
                img.set(col, row, static_cast<unsigned char>(PixelClass::AllEscape), 255, 255, 255);
            else
                img.set(col, row, static_cast<unsigned char>(PixelClass::AllBounded), 0, 0, 0);
        }
    });
    return img;
}

/// Binary PPM bytes: "P6\n<w> <h>\n255\n" followed by RGB rows.
inline std::string ppm_bytes(const RasterImage& img) {
    std::string out = "P6\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
    out.append(reinterpret_cast<const char*>(img.rgb.data()), img.rgb.size());
    return out;
}

inline void write_ppm(const RasterImage& img, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) fail(ErrorCode::IoError, "cannot open '" + path + "' for writing");
    std::string bytes = ppm_bytes(img);
    os.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!os) fail(ErrorCode::IoError, "short write to '" + path + "'");
}

}  // namespace schemelab
