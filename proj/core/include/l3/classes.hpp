// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the l3pipe Project.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "l3/cfa.hpp"

namespace l3 {

enum class LevelSpacing { Linear, Logarithmic };

const char* level_spacing_name(LevelSpacing spacing);
LevelSpacing level_spacing_from_name(const std::string& name);

/// Which channels contain at least one full-well pixel inside a patch.
/// `any_channel` is a wildcard that matches every non-empty combination;
/// it lets a config say "no saturation" vs "some saturation" without
/// enumerating channel subsets.
struct SaturationPattern {
    std::uint32_t channel_mask = 0;
    bool any_channel = false;

    static SaturationPattern none() { return {}; }
    static SaturationPattern any() { return {0, true}; }
    static SaturationPattern channels(std::uint32_t mask) { return {mask, false}; }

    bool is_none() const { return channel_mask == 0 && !any_channel; }
    int severity() const;

    std::string name(const std::vector<std::string>& channel_names) const;
    static SaturationPattern from_name(const std::string& name,
                                       const std::vector<std::string>& channel_names);

    bool operator==(const SaturationPattern& other) const = default;
};

/// Defines the class space: patch geometry, response-level binning,
/// contrast split and saturation cases. Total class count is
/// pixel_types * n_levels * (contrast_split ? 2 : 1) * saturation_cases.
struct ClassConfig {
    int patch_size = 5; // odd
    int n_levels = 50;
    LevelSpacing spacing = LevelSpacing::Logarithmic;
    std::vector<double> level_bounds; // upper bin edges, last = 1.0
    bool contrast_split = false;
    double contrast_threshold = 0.05; // normalized response units
    std::vector<SaturationPattern> saturation_cases{SaturationPattern::none()};
    int pixel_types = 4; // CFA block cell count

    int contrast_bins() const { return contrast_split ? 2 : 1; }
    int saturation_case_count() const {
        return static_cast<int>(saturation_cases.size());
    }
    std::int64_t total_class_count() const;
    int patch_length() const { return patch_size * patch_size + 1; }

    void validate() const;
};

/// Class identity: (pixel type, level bin, contrast bin, saturation case)
/// plus its mixed-radix encoding. Field order pixelType, levelBin,
/// contrastBin, saturationCase runs slowest to fastest.
struct ClassId {
    int pixel_type = 0;
    int level_bin = 0;
    int contrast_bin = 0;
    int saturation_case = 0;
    std::int64_t encoded = 0;

    bool operator==(const ClassId& other) const = default;
};

ClassId encode_class(int pixel_type, int level_bin, int contrast_bin,
                     int saturation_case, const ClassConfig& config);
ClassId decode_class(std::int64_t encoded, const ClassConfig& config);

std::string class_id_to_string(const ClassId& id);

/// Builds a ClassConfig for a sensor: pixel types from the CFA block,
/// level bounds from `level_bounds()`, saturation cases as given.
ClassConfig make_class_config(const CfaPattern& cfa, int n_levels,
                              LevelSpacing spacing,
                              bool contrast_split = false,
                              std::vector<SaturationPattern> saturation_cases =
                                  {SaturationPattern::none()},
                              int patch_size = 5,
                              double log_floor = 1e-3);

/// Default saturation cases for a sensor design: RGBW gets
/// {none, W, W+G}, anything else {none, any}.
std::vector<SaturationPattern> default_saturation_cases(const CfaPattern& cfa);

} // namespace l3
