// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the l3pipe Project.

#pragma once

#include <vector>

#include "l3/classes.hpp"
#include "l3/image.hpp"

namespace l3 {

/// A pixel-centered neighborhood flattened row-major, with a trailing
/// constant 1 for the affine term.
struct PatchVector {
    std::vector<double> values; // patch_size^2 + 1, last element is 1
    int center_x = 0;
    int center_y = 0;
    ClassId class_id;
};

/// Upper bin edges for the response-level classes. Linear spacing puts the
/// k-th edge at (k+1)/nLevels; logarithmic spacing places edges
/// geometrically between `floor` and 1.0 so bins concentrate at the low
/// response levels.
std::vector<double> level_bounds(int n_levels, LevelSpacing spacing,
                                 double floor = 1e-3);

/// Level bin of a mean response under the given upper edges.
int level_bin_of(double mean, const std::vector<double>& bounds);

/// Mirror-padded coordinate fold into [0, n).
int mirror_index(int i, int n);

/// Reads the patch around (x, y) with mirror padding; no classification.
PatchVector extract_patch(const SensorImage& sensor, int x, int y,
                          int patch_size);

/// Assigns the patch its class from the local features: center-cell pixel
/// type, mean response level (saturated pixels excluded; top bin when all
/// are saturated), contrast split on the patch standard deviation, and the
/// configured saturation pattern that matches the saturated channels.
ClassId classify_patch(const PatchVector& patch, const SensorImage& sensor,
                       const ClassConfig& config);

/// Saturation-case index for a mask of saturated channels: exact match,
/// else the wildcard "any", else the most severe configured subset.
int match_saturation_case(std::uint32_t saturated_channels,
                          const ClassConfig& config);

} // namespace l3
