// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the l3pipe Project.

#include "l3/color.hpp"

#include <cmath>

#include "l3/error.hpp"

namespace l3 {
namespace {

constexpr double kLabDelta = 6.0 / 29.0;
constexpr double kLabDelta3 = kLabDelta * kLabDelta * kLabDelta;

inline double lab_f(double t) {
    if (t > kLabDelta3) {
        return std::cbrt(t);
    }
    return t / (3.0 * kLabDelta * kLabDelta) + 4.0 / 29.0;
}

inline double lab_f_inv(double u) {
    if (u > kLabDelta) {
        return u * u * u;
    }
    return 3.0 * kLabDelta * kLabDelta * (u - 4.0 / 29.0);
}

// IEC 61966-2-1 reference primaries, D65 white.
constexpr double kXyzToRgb[3][3] = {
    {3.2404542, -1.5371385, -0.4985314},
    {-0.9692660, 1.8760108, 0.0415560},
    {0.0556434, -0.2040259, 1.0572252},
};
constexpr double kRgbToXyz[3][3] = {
    {0.4124564, 0.3575761, 0.1804375},
    {0.2126729, 0.7151522, 0.0721750},
    {0.0193339, 0.1191920, 0.9503041},
};

} // namespace

std::array<double, 3> xyz_to_lab(const Xyz& xyz, const Xyz& white,
                                 long* clamp_count) {
    if (!(white[0] > 0.0 && white[1] > 0.0 && white[2] > 0.0)) {
        throw InvalidArgument("white point components must be positive");
    }
    std::array<double, 3> ratio;
    for (int i = 0; i < 3; ++i) {
        double v = xyz[i];
        if (v < 0.0) {
            v = 0.0;
            if (clamp_count != nullptr) {
                ++*clamp_count;
            }
        }
        ratio[static_cast<std::size_t>(i)] = v / white[static_cast<std::size_t>(i)];
    }
    const double fx = lab_f(ratio[0]);
    const double fy = lab_f(ratio[1]);
    const double fz = lab_f(ratio[2]);
    return {116.0 * fy - 16.0, 500.0 * (fx - fy), 200.0 * (fy - fz)};
}

Xyz lab_to_xyz(const std::array<double, 3>& lab, const Xyz& white) {
    const double fy = (lab[0] + 16.0) / 116.0;
    const double fx = fy + lab[1] / 500.0;
    const double fz = fy - lab[2] / 200.0;
    return {white[0] * lab_f_inv(fx), white[1] * lab_f_inv(fy),
            white[2] * lab_f_inv(fz)};
}

std::array<double, 3> xyz_to_linear_srgb(const Xyz& xyz) {
    std::array<double, 3> rgb;
    for (int r = 0; r < 3; ++r) {
        rgb[static_cast<std::size_t>(r)] = kXyzToRgb[r][0] * xyz[0] +
                                           kXyzToRgb[r][1] * xyz[1] +
                                           kXyzToRgb[r][2] * xyz[2];
    }
    return rgb;
}

Xyz linear_srgb_to_xyz(const std::array<double, 3>& rgb) {
    Xyz xyz;
    for (int r = 0; r < 3; ++r) {
        xyz[static_cast<std::size_t>(r)] = kRgbToXyz[r][0] * rgb[0] +
                                           kRgbToXyz[r][1] * rgb[1] +
                                           kRgbToXyz[r][2] * rgb[2];
    }
    return xyz;
}

double srgb_encode(double v) {
    if (v <= 0.0031308) {
        return 12.92 * v;
    }
    return 1.055 * std::pow(v, 1.0 / 2.4) - 0.055;
}

double srgb_decode(double v) {
    if (v <= 0.04045) {
        return v / 12.92;
    }
    return std::pow((v + 0.055) / 1.055, 2.4);
}

std::vector<double> SpectralTable::resample(
    int col, const std::vector<double>& grid_nm) const {
    std::vector<double> out(grid_nm.size(), 0.0);
    const auto& v = values[static_cast<std::size_t>(col)];
    for (std::size_t i = 0; i < grid_nm.size(); ++i) {
        const double w = grid_nm[i];
        if (w < wavelengths.front() || w > wavelengths.back()) {
            continue;
        }
        std::size_t hi = 1;
        while (hi + 1 < wavelengths.size() && wavelengths[hi] < w) {
            ++hi;
        }
        const double w0 = wavelengths[hi - 1];
        const double w1 = wavelengths[hi];
        const double t = (w - w0) / (w1 - w0);
        out[i] = v[hi - 1] * (1.0 - t) + v[hi] * t;
    }
    return out;
}

std::vector<double> SpectralTable::resample_clamped(
    int col, const std::vector<double>& grid_nm) const {
    std::vector<double> out = resample(col, grid_nm);
    const auto& v = values[static_cast<std::size_t>(col)];
    for (std::size_t i = 0; i < grid_nm.size(); ++i) {
        if (grid_nm[i] < wavelengths.front()) {
            out[i] = v.front();
        } else if (grid_nm[i] > wavelengths.back()) {
            out[i] = v.back();
        }
    }
    return out;
}

std::vector<double> blackbody_spd(double kelvin,
                                  const std::vector<double>& grid_nm) {
    if (kelvin <= 0.0) {
        throw InvalidArgument("blackbody temperature must be positive");
    }
    // Photon-count form of Planck's law, lambda^-4 / (exp(hc/lambda k T)-1).
    constexpr double hc_over_k = 1.4387768775039336e7; // nm * K
    auto photon_radiance = [&](double nm) {
        return 1.0 /
               (std::pow(nm, 4.0) * std::expm1(hc_over_k / (nm * kelvin)));
    };
    const double ref = photon_radiance(560.0);
    std::vector<double> out(grid_nm.size());
    for (std::size_t i = 0; i < grid_nm.size(); ++i) {
        out[i] = 100.0 * photon_radiance(grid_nm[i]) / ref;
    }
    return out;
}

std::vector<double> trapezoid_weights(const std::vector<double>& grid) {
    const std::size_t n = grid.size();
    std::vector<double> w(n, 0.0);
    if (n == 1) {
        w[0] = 1.0;
        return w;
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double h = 0.5 * (grid[i + 1] - grid[i]);
        w[i] += h;
        w[i + 1] += h;
    }
    return w;
}

} // namespace l3
