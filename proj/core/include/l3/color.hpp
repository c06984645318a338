// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the l3pipe Project.

#pragma once

#include <array>
#include <string>
#include <vector>

namespace l3 {

using Xyz = std::array<double, 3>;

/// D65 white point of the sRGB standard (Y = 1).
constexpr Xyz kD65White = {0.95047, 1.0, 1.08883};

/// CIELAB from XYZ relative to a white point. Negative XYZ components are
/// clamped to zero; `clamp_count`, when given, counts how many were.
std::array<double, 3> xyz_to_lab(const Xyz& xyz, const Xyz& white,
                                 long* clamp_count = nullptr);

Xyz lab_to_xyz(const std::array<double, 3>& lab, const Xyz& white);

/// Linear sRGB (D65) from XYZ and back.
std::array<double, 3> xyz_to_linear_srgb(const Xyz& xyz);
Xyz linear_srgb_to_xyz(const std::array<double, 3>& rgb);

/// sRGB transfer curve (linear value in [0,1] to encoded value in [0,1]).
double srgb_encode(double v);
double srgb_decode(double v);

/// A sampled spectral table: value per wavelength.
struct SpectralTable {
    std::vector<double> wavelengths; // nm
    std::vector<std::vector<double>> values;

    /// Linear interpolation of column `col` onto a grid, zero outside.
    std::vector<double> resample(int col,
                                 const std::vector<double>& grid_nm) const;
    /// As `resample` but holding the end values outside the tabulated range.
    std::vector<double> resample_clamped(
        int col, const std::vector<double>& grid_nm) const;
};

/// Directory holding the shipped data tables. Resolution order: the
/// L3_DATA_DIR environment variable, the install location, the source tree.
std::string data_dir();

/// CIE 1931 2-degree color matching functions (xbar, ybar, zbar columns).
const SpectralTable& cie_cmf_1931();

/// CIE standard illuminant D65 relative spectral power distribution.
const SpectralTable& illuminant_d65();

/// Relative blackbody spectral photon exitance at temperature `kelvin`,
/// normalized to 100 at 560 nm (illuminant A uses 2856 K).
std::vector<double> blackbody_spd(double kelvin,
                                  const std::vector<double>& grid_nm);

/// Trapezoid integration weights for a strictly increasing grid.
std::vector<double> trapezoid_weights(const std::vector<double>& grid);

} // namespace l3
