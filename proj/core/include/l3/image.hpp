// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the l3pipe Project.

#pragma once

#include <cstdint>
#include <vector>

#include "l3/sensor.hpp"

namespace l3 {

enum class ColorSpace { Xyz, LinearSrgb, Cielab };

const char* color_space_name(ColorSpace space);
ColorSpace color_space_from_name(const std::string& name);

/// Scene (or sensor-plane) spectral radiance cube. Data is plane-major:
/// data[(k * height + y) * width + x] is the sample at wavelength k.
struct SpectralImage {
    int height = 0;
    int width = 0;
    std::vector<double> wavelengths; // nm, strictly increasing
    std::vector<float> data;

    /// Spectral power distribution of the scene illuminant on the same
    /// wavelength grid. Optional in-memory metadata (empty when unknown,
    /// e.g. after loading from a spectral cube file); used as the white
    /// reference when computing rendering targets.
    std::vector<double> illuminant;

    int plane_count() const { return static_cast<int>(wavelengths.size()); }
    std::size_t plane_size() const {
        return static_cast<std::size_t>(height) * static_cast<std::size_t>(width);
    }
    float at(int y, int x, int k) const {
        return data[(static_cast<std::size_t>(k) * height + y) * width + x];
    }
    float& at(int y, int x, int k) {
        return data[(static_cast<std::size_t>(k) * height + y) * width + x];
    }

    void validate() const;
};

/// Raw mosaic in normalized response units (1 = full well after
/// quantization) plus per-pixel saturation flags.
struct SensorImage {
    int height = 0;
    int width = 0;
    std::vector<float> values;
    std::vector<std::uint8_t> saturated;
    SensorSpec spec;

    float at(int y, int x) const {
        return values[static_cast<std::size_t>(y) * width + x];
    }
    bool is_saturated(int y, int x) const {
        return saturated[static_cast<std::size_t>(y) * width + x] != 0;
    }

    void validate() const;
};

/// Rendered or ground-truth image in a target color space. Data is
/// interleaved: data[(y * width + x) * 3 + c].
struct TargetImage {
    int height = 0;
    int width = 0;
    ColorSpace space = ColorSpace::Xyz;
    std::vector<float> data;

    static constexpr int kChannels = 3;

    float at(int y, int x, int c) const {
        return data[(static_cast<std::size_t>(y) * width + x) * kChannels + c];
    }
    float& at(int y, int x, int c) {
        return data[(static_cast<std::size_t>(y) * width + x) * kChannels + c];
    }

    void validate() const;
};

/// Single-channel float image (metric inputs, masks, weight maps).
struct PlaneImage {
    int height = 0;
    int width = 0;
    std::vector<float> data;

    float at(int y, int x) const {
        return data[static_cast<std::size_t>(y) * width + x];
    }
    float& at(int y, int x) {
        return data[static_cast<std::size_t>(y) * width + x];
    }
};

/// 8-bit interleaved RGB image for display-encoded output.
struct RgbImage8 {
    int height = 0;
    int width = 0;
    std::vector<std::uint8_t> data; // (y, x, c)
};

} // namespace l3
