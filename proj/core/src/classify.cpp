// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the l3pipe Project.

#include "l3/classify.hpp"

#include <algorithm>
#include <cmath>

#include "l3/error.hpp"

namespace l3 {

std::vector<double> level_bounds(int n_levels, LevelSpacing spacing,
                                 double floor) {
    if (n_levels < 1) {
        throw InvalidArgument("level count must be at least 1");
    }
    std::vector<double> edges(static_cast<std::size_t>(n_levels));
    if (n_levels == 1) {
        edges[0] = 1.0;
        return edges;
    }
    if (spacing == LevelSpacing::Linear) {
        for (int k = 0; k < n_levels; ++k) {
            edges[static_cast<std::size_t>(k)] =
                static_cast<double>(k + 1) / n_levels;
        }
    } else {
        if (floor <= 0.0 || floor >= 1.0) {
            throw InvalidArgument("log spacing floor must lie in (0, 1)");
        }
        // e_k = floor * (1/floor)^(k/(n-1)); bin 0 covers [0, floor].
        for (int k = 0; k < n_levels; ++k) {
            edges[static_cast<std::size_t>(k)] =
                floor * std::pow(1.0 / floor,
                                 static_cast<double>(k) / (n_levels - 1));
        }
    }
    edges.back() = 1.0;
    return edges;
}

int level_bin_of(double mean, const std::vector<double>& bounds) {
    const auto it = std::lower_bound(bounds.begin(), bounds.end(), mean);
    if (it == bounds.end()) {
        return static_cast<int>(bounds.size()) - 1;
    }
    return static_cast<int>(it - bounds.begin());
}

int mirror_index(int i, int n) {
    if (n == 1) {
        return 0;
    }
    const int period = 2 * (n - 1);
    int m = i % period;
    if (m < 0) {
        m += period;
    }
    return m < n ? m : period - m;
}

PatchVector extract_patch(const SensorImage& sensor, int x, int y,
                          int patch_size) {
    if (patch_size < 1 || patch_size % 2 == 0) {
        throw InvalidArgument("patch size must be odd and positive");
    }
    if (x < 0 || x >= sensor.width || y < 0 || y >= sensor.height) {
        throw InvalidArgument("patch center outside the sensor image");
    }
    const int half = patch_size / 2;
    PatchVector patch;
    patch.center_x = x;
    patch.center_y = y;
    patch.values.resize(static_cast<std::size_t>(patch_size) * patch_size + 1);
    std::size_t k = 0;
    for (int dy = -half; dy <= half; ++dy) {
        const int sy = mirror_index(y + dy, sensor.height);
        for (int dx = -half; dx <= half; ++dx) {
            const int sx = mirror_index(x + dx, sensor.width);
            patch.values[k++] = sensor.at(sy, sx);
        }
    }
    patch.values[k] = 1.0;
    return patch;
}

int match_saturation_case(std::uint32_t saturated_channels,
                          const ClassConfig& config) {
    const auto& cases = config.saturation_cases;
    int best = 0;
    int best_severity = -1;
    int wildcard = -1;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& p = cases[i];
        if (!p.any_channel && p.channel_mask == saturated_channels) {
            return static_cast<int>(i);
        }
        if (p.any_channel) {
            wildcard = static_cast<int>(i);
            continue;
        }
        // Candidate fallback: configured subset of the observed channels.
        if ((p.channel_mask & ~saturated_channels) == 0 &&
            p.severity() >= best_severity) {
            best_severity = p.severity();
            best = static_cast<int>(i);
        }
    }
    if (saturated_channels != 0 && wildcard >= 0) {
        return wildcard;
    }
    return best;
}

ClassId classify_patch(const PatchVector& patch, const SensorImage& sensor,
                       const ClassConfig& config) {
    const int half = config.patch_size / 2;
    const int x = patch.center_x;
    const int y = patch.center_y;

    const int pixel_type = sensor.spec.cfa.cell_index_at(x, y);

    double sum = 0.0;
    double sum_sq = 0.0;
    int unsaturated = 0;
    std::uint32_t saturated_channels = 0;
    for (int dy = -half; dy <= half; ++dy) {
        const int sy = mirror_index(y + dy, sensor.height);
        for (int dx = -half; dx <= half; ++dx) {
            const int sx = mirror_index(x + dx, sensor.width);
            const double v = sensor.at(sy, sx);
            if (sensor.is_saturated(sy, sx)) {
                saturated_channels |= 1u << sensor.spec.cfa.channel_at(sx, sy);
            } else {
                sum += v;
                sum_sq += v * v;
                ++unsaturated;
            }
        }
    }

    int level_bin;
    if (unsaturated == 0) {
        level_bin = config.n_levels - 1;
    } else {
        level_bin = level_bin_of(sum / unsaturated, config.level_bounds);
    }

    int contrast_bin = 0;
    if (config.contrast_split && unsaturated > 1) {
        const double mean = sum / unsaturated;
        const double var = std::max(0.0, sum_sq / unsaturated - mean * mean);
        if (std::sqrt(var) > config.contrast_threshold) {
            contrast_bin = 1;
        }
    }

    const int sat_case = match_saturation_case(saturated_channels, config);
    return encode_class(pixel_type, level_bin, contrast_bin, sat_case, config);
}

} // namespace l3
