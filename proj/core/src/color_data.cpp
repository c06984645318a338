// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the l3pipe Project.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>

#include "l3/color.hpp"
#include "l3/error.hpp"

namespace l3 {
namespace {

SpectralTable load_table(const std::string& filename, std::size_t columns) {
    const std::string path = data_dir() + "/" + filename;
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open data table: " + path);
    }
    SpectralTable table;
    table.values.resize(columns);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream row(line);
        double w;
        if (!(row >> w)) {
            continue; // blank or comment-only line
        }
        table.wavelengths.push_back(w);
        for (std::size_t c = 0; c < columns; ++c) {
            double v;
            if (!(row >> v)) {
                throw IoError(path + ":" + std::to_string(line_no) +
                              ": expected " + std::to_string(columns + 1) +
                              " columns");
            }
            table.values[c].push_back(v);
        }
    }
    if (table.wavelengths.size() < 2) {
        throw IoError(path + ": table needs at least two rows");
    }
    return table;
}

} // namespace

std::string data_dir() {
    if (const char* env = std::getenv("L3_DATA_DIR")) {
        if (env[0] != '\0') {
            return env;
        }
    }
#ifdef L3_INSTALL_DATA_DIR
    if (std::filesystem::exists(std::string(L3_INSTALL_DATA_DIR) +
                                "/cie_xyz_cmf_2deg.txt")) {
        return L3_INSTALL_DATA_DIR;
    }
#endif
#ifdef L3_SOURCE_DATA_DIR
    return L3_SOURCE_DATA_DIR;
#else
    return "data";
#endif
}

const SpectralTable& cie_cmf_1931() {
    static const SpectralTable table = load_table("cie_xyz_cmf_2deg.txt", 3);
    return table;
}

const SpectralTable& illuminant_d65() {
    static const SpectralTable table = load_table("illuminant_d65.txt", 1);
    return table;
}

} // namespace l3
