// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the l3pipe Project.

#include "l3/sensor.hpp"

#include "l3/error.hpp"

namespace l3 {

void SensorSpec::validate() const {
    cfa.validate();
    if (pixel_size_um <= 0.0) {
        throw InvalidArgument("pixel size must be positive");
    }
    if (f_number <= 0.0) {
        throw InvalidArgument("f-number must be positive");
    }
    if (well_capacity_e <= 0.0) {
        throw InvalidArgument("well capacity must be positive");
    }
    if (bits < 8 || bits > 16) {
        throw InvalidArgument("bit depth must be in [8, 16]");
    }
    if (read_noise_sd_e < 0.0) {
        throw InvalidArgument("read noise must be non-negative");
    }
    if (analog_gain <= 0.0) {
        throw InvalidArgument("analog gain must be positive");
    }
    if (qe_wavelengths.size() < 2) {
        throw InvalidArgument("QE needs at least two wavelength samples");
    }
    for (std::size_t i = 1; i < qe_wavelengths.size(); ++i) {
        if (qe_wavelengths[i] <= qe_wavelengths[i - 1]) {
            throw InvalidArgument("QE wavelengths must be strictly increasing");
        }
    }
    if (qe.size() != static_cast<std::size_t>(cfa.channel_count())) {
        throw InvalidArgument("QE table needs one curve per CFA channel");
    }
    for (const auto& curve : qe) {
        if (curve.size() != qe_wavelengths.size()) {
            throw InvalidArgument("QE curve length does not match its grid");
        }
        for (double v : curve) {
            if (v < 0.0 || v > 1.0) {
                throw InvalidArgument("QE values must lie in [0, 1]");
            }
        }
    }
}

std::vector<double> SensorSpec::qe_on_grid(
    int channel, const std::vector<double>& grid_nm) const {
    const auto& curve = qe[static_cast<std::size_t>(channel)];
    std::vector<double> out(grid_nm.size(), 0.0);
    for (std::size_t i = 0; i < grid_nm.size(); ++i) {
        const double w = grid_nm[i];
        if (w < qe_wavelengths.front() || w > qe_wavelengths.back()) {
            continue;
        }
        std::size_t hi = 1;
        while (hi + 1 < qe_wavelengths.size() && qe_wavelengths[hi] < w) {
            ++hi;
        }
        const double w0 = qe_wavelengths[hi - 1];
        const double w1 = qe_wavelengths[hi];
        const double t = (w - w0) / (w1 - w0);
        out[i] = curve[hi - 1] * (1.0 - t) + curve[hi] * t;
    }
    return out;
}

} // namespace l3
