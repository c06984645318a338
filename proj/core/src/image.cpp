// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the l3pipe Project.

#include "l3/image.hpp"

#include <string>

#include "l3/error.hpp"

namespace l3 {

const char* color_space_name(ColorSpace space) {
    switch (space) {
    case ColorSpace::Xyz:
        return "xyz";
    case ColorSpace::LinearSrgb:
        return "srgb-linear";
    case ColorSpace::Cielab:
        return "lab";
    }
    return "xyz";
}

ColorSpace color_space_from_name(const std::string& name) {
    if (name == "xyz") {
        return ColorSpace::Xyz;
    }
    if (name == "srgb-linear" || name == "srgb") {
        return ColorSpace::LinearSrgb;
    }
    if (name == "lab" || name == "cielab") {
        return ColorSpace::Cielab;
    }
    throw InvalidArgument("unknown color space: " + name);
}

void SpectralImage::validate() const {
    if (height <= 0 || width <= 0) {
        throw InvalidArgument("spectral image dimensions must be positive");
    }
    if (wavelengths.size() < 2) {
        throw InvalidArgument("spectral image needs at least two wavelengths");
    }
    for (std::size_t i = 1; i < wavelengths.size(); ++i) {
        if (wavelengths[i] <= wavelengths[i - 1]) {
            throw InvalidArgument("wavelengths must be strictly increasing");
        }
    }
    if (data.size() != plane_size() * wavelengths.size()) {
        throw InvalidArgument("spectral data size does not match dimensions");
    }
    for (float v : data) {
        if (!(v >= 0.0f)) {
            throw InvalidArgument("radiance must be non-negative and finite");
        }
    }
    if (!illuminant.empty() && illuminant.size() != wavelengths.size()) {
        throw InvalidArgument("illuminant grid does not match wavelengths");
    }
}

void SensorImage::validate() const {
    const std::size_t n = static_cast<std::size_t>(height) * width;
    if (values.size() != n || saturated.size() != n) {
        throw InvalidArgument("sensor image buffers do not match dimensions");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!(values[i] >= 0.0f && values[i] <= 1.0f)) {
            throw InvalidArgument("sensor values must lie in [0, 1]");
        }
        if (saturated[i] != 0 && values[i] != 1.0f) {
            throw InvalidArgument("saturated pixels must read exactly 1");
        }
    }
}

void TargetImage::validate() const {
    if (data.size() !=
        static_cast<std::size_t>(height) * width * kChannels) {
        throw InvalidArgument("target image buffer does not match dimensions");
    }
}

} // namespace l3
