// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the l3pipe Project.

#pragma once

#include <cstdint>
#include <string>

#include "l3/image.hpp"

namespace l3 {

enum class SceneKind {
    MacbethChart,
    SlantedEdge,
    SmoothGradients,
    SpectralNoise,
    FacesProxy,
};

SceneKind scene_kind_from_name(const std::string& name);
const char* scene_kind_name(SceneKind kind);

enum class IlluminantKind { D65, IllA, EqualEnergy };

IlluminantKind illuminant_from_name(const std::string& name);
const char* illuminant_name(IlluminantKind kind);

/// Recipe for a synthetic training/evaluation scene. The generated radiance
/// lives on the sensor pixel grid and is deterministic given the seed.
struct SceneRecipe {
    SceneKind kind = SceneKind::SmoothGradients;
    int size = 128; // height = width = size, must be >= 16
    IlluminantKind illuminant = IlluminantKind::D65;
    std::uint64_t seed = 0;

    // Wavelength grid; extend max to ~950 nm for NIR sensor work.
    double lambda_min_nm = 400.0;
    double lambda_max_nm = 700.0;
    double lambda_step_nm = 10.0;

    /// Absolute photon scale applied to illuminant * reflectance,
    /// photons s^-1 nm^-1 m^-2 sr^-1 per relative SPD unit.
    double photon_scale = 1e16;
};

/// Slanted-edge angle from vertical, degrees (ISO practice).
constexpr double kSlantedEdgeAngleDeg = 5.0;

SpectralImage generate_scene(const SceneRecipe& recipe);

/// Illuminant SPD sampled on a grid (relative units, 100 at 560 nm for the
/// standard illuminants; constant extension outside the tabulated range).
std::vector<double> illuminant_spd(IlluminantKind kind,
                                   const std::vector<double>& grid_nm);

} // namespace l3
