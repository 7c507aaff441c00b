#pragma once

#include "gwx/params.hpp"

#include <cstdint>
#include <filesystem>

namespace gwx {

struct CheckpointMeta {
  uint64_t seed = 0;
  int64_t step = 0;
};

// Single-file checkpoint: one line of JSON (names, shapes, dtype, seed,
// step), then the raw little-endian float64 buffers in header order.
// Round-trips bit-exactly.
void save_checkpoint(const std::filesystem::path& path, const ParamDict& params,
                     const CheckpointMeta& meta);

struct Checkpoint {
  ParamDict params;
  CheckpointMeta meta;
};

Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace gwx
