// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the l3pipe Project.

#pragma once

#include <string>
#include <vector>

namespace l3 {

/// Periodic color filter array. The block tiles the sensor; the pixel at
/// (x, y) carries channel `channel_at(y % block_height, x % block_width)`.
struct CfaPattern {
    int block_height = 0;
    int block_width = 0;
    std::vector<int> channel_of_cell;       // row-major block cells
    std::vector<std::string> channel_names; // e.g. R,G,B / R,G,B,W

    int channel_count() const { return static_cast<int>(channel_names.size()); }

    /// Number of distinct block cells. Patches centered on different cells
    /// see different mosaic phases, so cells (not channels) index classes.
    /// A Bayer RGGB block therefore has four pixel types: R, G-in-R-row,
    /// G-in-B-row and B.
    int cell_count() const { return block_height * block_width; }

    int channel_at(int x, int y) const;
    int cell_index_at(int x, int y) const;

    /// Channel of a block cell by its cell index.
    int channel_of(int cell) const { return channel_of_cell[static_cast<std::size_t>(cell)]; }

    int channel_index(const std::string& name) const; // -1 when absent
    void validate() const;

    bool operator==(const CfaPattern& other) const = default;
};

/// 2x2 RGGB Bayer block.
CfaPattern make_bayer_rggb();

/// 2x2 block with one R, G, B and W pixel (R G / B W). The arrangement of
/// RGBW blocks differs between vendors; this is one documented choice and
/// sensor files may declare any layout.
CfaPattern make_rgbw_2x2();

/// 2x2 block with the second green of a Bayer block replaced by NIR.
CfaPattern make_rgbnir_2x2();

} // namespace l3
