// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the l3pipe Project.

#pragma once

#include <string>
#include <vector>

#include "l3/cfa.hpp"

namespace l3 {

/// Full description of a simulated camera: CFA, per-channel quantum
/// efficiency, pixel geometry, optics f-number and readout parameters.
struct SensorSpec {
    std::string name;
    CfaPattern cfa;

    std::vector<double> qe_wavelengths;      // nm, strictly increasing
    std::vector<std::vector<double>> qe;     // [channel][wavelength], in [0,1]

    double pixel_size_um = 2.0;
    double f_number = 4.0;
    double exposure_s = 0.01;     // <= 0 requests auto exposure in the CLI
    double well_capacity_e = 6000.0;
    double read_noise_sd_e = 2.0;
    double conversion_gain = 1.0; // output units per electron, informational
    int bits = 10;
    double analog_gain = 1.0;

    void validate() const;

    /// QE of one channel interpolated onto an arbitrary grid (zero outside
    /// the tabulated range).
    std::vector<double> qe_on_grid(int channel,
                                   const std::vector<double>& grid_nm) const;

    bool operator==(const SensorSpec& other) const = default;
};

} // namespace l3
