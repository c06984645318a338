// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the l3pipe Project.

#include "l3/cfa.hpp"

#include "l3/error.hpp"

namespace l3 {

int CfaPattern::channel_at(int x, int y) const {
    return channel_of_cell[static_cast<std::size_t>(cell_index_at(x, y))];
}

int CfaPattern::cell_index_at(int x, int y) const {
    const int by = ((y % block_height) + block_height) % block_height;
    const int bx = ((x % block_width) + block_width) % block_width;
    return by * block_width + bx;
}

int CfaPattern::channel_index(const std::string& name) const {
    for (std::size_t i = 0; i < channel_names.size(); ++i) {
        if (channel_names[i] == name) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

void CfaPattern::validate() const {
    if (block_height <= 0 || block_width <= 0) {
        throw InvalidArgument("CFA block dimensions must be positive");
    }
    if (channel_of_cell.size() !=
        static_cast<std::size_t>(block_height * block_width)) {
        throw InvalidArgument("CFA cell table does not match block dimensions");
    }
    if (channel_names.empty()) {
        throw InvalidArgument("CFA needs at least one channel name");
    }
    for (int c : channel_of_cell) {
        if (c < 0 || c >= channel_count()) {
            throw InvalidArgument("CFA cell references an unknown channel");
        }
    }
}

CfaPattern make_bayer_rggb() {
    CfaPattern cfa;
    cfa.block_height = 2;
    cfa.block_width = 2;
    cfa.channel_names = {"R", "G", "B"};
    cfa.channel_of_cell = {0, 1, 1, 2}; // R G / G B
    return cfa;
}

CfaPattern make_rgbw_2x2() {
    CfaPattern cfa;
    cfa.block_height = 2;
    cfa.block_width = 2;
    cfa.channel_names = {"R", "G", "B", "W"};
    cfa.channel_of_cell = {0, 1, 2, 3}; // R G / B W
    return cfa;
}

CfaPattern make_rgbnir_2x2() {
    CfaPattern cfa;
    cfa.block_height = 2;
    cfa.block_width = 2;
    cfa.channel_names = {"R", "G", "B", "N"};
    cfa.channel_of_cell = {0, 1, 3, 2}; // R G / N B
    return cfa;
}

} // namespace l3
