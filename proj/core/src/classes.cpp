// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the l3pipe Project.

#include "l3/classes.hpp"

#include <bit>
#include <sstream>

#include "l3/classify.hpp"
#include "l3/error.hpp"

namespace l3 {

const char* level_spacing_name(LevelSpacing spacing) {
    return spacing == LevelSpacing::Linear ? "linear" : "log";
}

LevelSpacing level_spacing_from_name(const std::string& name) {
    if (name == "linear") {
        return LevelSpacing::Linear;
    }
    if (name == "log" || name == "logarithmic") {
        return LevelSpacing::Logarithmic;
    }
    throw InvalidArgument("unknown level spacing: " + name);
}

int SaturationPattern::severity() const {
    if (any_channel) {
        return 1; // between "none" and any explicit channel subset
    }
    return channel_mask == 0 ? 0 : 1 + std::popcount(channel_mask);
}

std::string SaturationPattern::name(
    const std::vector<std::string>& channel_names) const {
    if (is_none()) {
        return "none";
    }
    if (any_channel) {
        return "any";
    }
    std::string out;
    for (std::size_t c = 0; c < channel_names.size(); ++c) {
        if (channel_mask & (1u << c)) {
            if (!out.empty()) {
                out += '+';
            }
            out += channel_names[c];
        }
    }
    return out;
}

SaturationPattern SaturationPattern::from_name(
    const std::string& name, const std::vector<std::string>& channel_names) {
    if (name == "none") {
        return none();
    }
    if (name == "any") {
        return any();
    }
    SaturationPattern p;
    std::size_t start = 0;
    while (start <= name.size()) {
        const std::size_t plus = name.find('+', start);
        const std::string part = name.substr(
            start, plus == std::string::npos ? std::string::npos : plus - start);
        bool found = false;
        for (std::size_t c = 0; c < channel_names.size(); ++c) {
            if (channel_names[c] == part) {
                p.channel_mask |= (1u << c);
                found = true;
                break;
            }
        }
        if (!found) {
            throw InvalidArgument("unknown channel in saturation pattern: " + part);
        }
        if (plus == std::string::npos) {
            break;
        }
        start = plus + 1;
    }
    return p;
}

std::int64_t ClassConfig::total_class_count() const {
    return static_cast<std::int64_t>(pixel_types) * n_levels * contrast_bins() *
           saturation_case_count();
}

void ClassConfig::validate() const {
    if (patch_size < 1 || patch_size % 2 == 0) {
        throw InvalidArgument("patch size must be odd and positive");
    }
    if (n_levels < 1) {
        throw InvalidArgument("level count must be at least 1");
    }
    if (pixel_types < 1) {
        throw InvalidArgument("pixel type count must be at least 1");
    }
    if (level_bounds.size() != static_cast<std::size_t>(n_levels)) {
        throw InvalidArgument("level bounds length must equal level count");
    }
    for (std::size_t i = 0; i < level_bounds.size(); ++i) {
        if (i > 0 && level_bounds[i] <= level_bounds[i - 1]) {
            throw InvalidArgument("level bounds must be strictly increasing");
        }
    }
    if (level_bounds.back() != 1.0) {
        throw InvalidArgument("last level bound must be exactly 1.0");
    }
    if (saturation_cases.empty()) {
        throw InvalidArgument("at least one saturation case (none) is required");
    }
    if (!saturation_cases.front().is_none()) {
        throw InvalidArgument("first saturation case must be none");
    }
    if (contrast_threshold < 0.0) {
        throw InvalidArgument("contrast threshold must be non-negative");
    }
}

ClassId encode_class(int pixel_type, int level_bin, int contrast_bin,
                     int saturation_case, const ClassConfig& config) {
    if (pixel_type < 0 || pixel_type >= config.pixel_types) {
        throw InvalidArgument("pixel type index out of range");
    }
    if (level_bin < 0 || level_bin >= config.n_levels) {
        throw InvalidArgument("level bin index out of range");
    }
    if (contrast_bin < 0 || contrast_bin >= config.contrast_bins()) {
        throw InvalidArgument("contrast bin index out of range");
    }
    if (saturation_case < 0 ||
        saturation_case >= config.saturation_case_count()) {
        throw InvalidArgument("saturation case index out of range");
    }
    ClassId id;
    id.pixel_type = pixel_type;
    id.level_bin = level_bin;
    id.contrast_bin = contrast_bin;
    id.saturation_case = saturation_case;
    id.encoded =
        ((static_cast<std::int64_t>(pixel_type) * config.n_levels + level_bin) *
             config.contrast_bins() +
         contrast_bin) *
            config.saturation_case_count() +
        saturation_case;
    return id;
}

ClassId decode_class(std::int64_t encoded, const ClassConfig& config) {
    if (encoded < 0 || encoded >= config.total_class_count()) {
        throw InvalidArgument("encoded class id out of range");
    }
    std::int64_t rest = encoded;
    const int sat = static_cast<int>(rest % config.saturation_case_count());
    rest /= config.saturation_case_count();
    const int contrast = static_cast<int>(rest % config.contrast_bins());
    rest /= config.contrast_bins();
    const int level = static_cast<int>(rest % config.n_levels);
    rest /= config.n_levels;
    return encode_class(static_cast<int>(rest), level, contrast, sat, config);
}

std::string class_id_to_string(const ClassId& id) {
    std::ostringstream os;
    os << "class " << id.encoded << " (type=" << id.pixel_type
       << ", level=" << id.level_bin << ", contrast=" << id.contrast_bin
       << ", sat=" << id.saturation_case << ")";
    return os.str();
}

ClassConfig make_class_config(const CfaPattern& cfa, int n_levels,
                              LevelSpacing spacing, bool contrast_split,
                              std::vector<SaturationPattern> saturation_cases,
                              int patch_size, double log_floor) {
    ClassConfig config;
    config.patch_size = patch_size;
    config.n_levels = n_levels;
    config.spacing = spacing;
    config.level_bounds = level_bounds(n_levels, spacing, log_floor);
    config.contrast_split = contrast_split;
    config.saturation_cases = std::move(saturation_cases);
    config.pixel_types = cfa.cell_count();
    config.validate();
    return config;
}

std::vector<SaturationPattern> default_saturation_cases(const CfaPattern& cfa) {
    const int w = cfa.channel_index("W");
    if (w >= 0) {
        const int g = cfa.channel_index("G");
        std::uint32_t wg = 1u << w;
        if (g >= 0) {
            wg |= 1u << g;
        }
        return {SaturationPattern::none(),
                SaturationPattern::channels(1u << w),
                SaturationPattern::channels(wg)};
    }
    return {SaturationPattern::none(), SaturationPattern::any()};
}

} // namespace l3
