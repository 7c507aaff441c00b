#pragma once

#include "gwx/rng.hpp"
#include "gwx/types.hpp"

#include <array>
#include <span>
#include <vector>

namespace gwx {

// Corruption regimes. Noise is Gaussian in standardized backbone latent
// space, so sigma is in units of the latent's native standard deviation.
enum class ScheduleKind {
  standard_pair,        // 2 of 3 modalities noised per sample
  leave_out_task,       // mask-wise identical to standard_pair
  modality_gen1,        // designated modality always among the noised
  modality_gen2_train,  // designated modality absent; 1 of remaining 2 noised
  modality_gen2_eval,   // all present; exactly 1 noised
  all_noised,           // every modality noised (chance-collapse probes)
  designated_clean,     // the designated modality always clean, other 2 noised
};

std::string_view to_string(ScheduleKind k);
ScheduleKind schedule_kind_from_string(std::string_view s);

struct Schedule {
  ScheduleKind kind = ScheduleKind::standard_pair;
  double sigma = 0.0;
  Modality designated = Modality::text;  // gen-1 / gen-2 only
  uint64_t stream = 0;                   // rng stream for masks and noise
};

struct CorruptionMask {
  ModalitySet present;
  ModalitySet noised;  // subset of present
};

// Modalities present under this schedule (identical for every sample).
ModalitySet present_set(const Schedule& schedule);

// Which present modalities get noised for one sample; uniform over the
// schedule's admissible choices.
CorruptionMask draw_mask(const Schedule& schedule, Rng& rng);

// Per-sample application: noised coordinates get x + sigma * eps. Clean
// modalities pass through bitwise; absent ones are left untouched here and
// dropped by the caller via mask.present.
void apply_mask(const CorruptionMask& mask, std::array<Vec, 3>& x, double sigma, Rng& rng);

// Batched corruption of the given dataset rows. Per-sample rngs derive from
// (schedule.stream, row index), so results do not depend on batching.
struct CorruptedBatch {
  std::array<Mat, 3> x;  // rows for present modalities; absent slots are 0x0
  ModalitySet present;
  std::vector<CorruptionMask> masks;
};

CorruptedBatch corrupt_rows(const std::array<Mat, 3>& clean, std::span<const Index> rows,
                            const Schedule& schedule);

// Canonical noise grid for train x test heatmaps.
const std::vector<double>& sigma_grid();

}  // namespace gwx
