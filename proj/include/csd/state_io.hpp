// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>

#include "csd/qmat.hpp"

namespace csd {

// JSON state carriers:
//   {"matrix": [[[re, im] x4] x4]}        explicit matrix
//   {"cs": {"p1": ..., ..., "p7": ...}}   centrosymmetric parameters
//   {"x":  {"q1": ..., ..., "q7": ...}}   X parameters
// Parameter carriers are embedded into their matrix form; no validity check
// beyond structure happens here.
CMat4 load_state(const std::filesystem::path& path);

void save_state(const std::filesystem::path& path, const CMat4& m);

} // namespace csd
