#pragma once

#include "gwx/attention.hpp"
#include "gwx/corruption.hpp"
#include "gwx/probes.hpp"

#include <optional>

namespace gwx {

// Fusion-weight policies used at evaluation (and attention-training) time.
enum class FusionPolicy { random, uniform, attention };

std::string_view to_string(FusionPolicy p);
FusionPolicy policy_from_string(std::string_view s);

struct EvalOptions {
  FusionPolicy policy = FusionPolicy::random;
  Schedule schedule;         // stream seeds the per-sample corruption draws
  uint64_t policy_seed = 0;  // seeds random-policy fusion draws
  Index batch = 256;
  bool collect_scores = false;
};

// Mean fusion weight a modality receives, split by its own mask state.
struct AlphaStats {
  std::array<double, 3> mean_when_clean{};
  std::array<double, 3> mean_when_noised{};
  std::array<int64_t, 3> n_clean{};
  std::array<int64_t, 3> n_noised{};
};

struct ScoreRow {
  Index sample = 0;
  ModalitySet noised;
  std::array<double, 3> alpha{};  // NaN for absent modalities
};

struct EvalResult {
  std::array<double, kNumTasks> accuracy{};
  double macro = 0.0;
  Index n = 0;
  AlphaStats alpha;
  std::vector<ScoreRow> scores;  // filled when collect_scores
};

// Deterministic given (schedule.stream, policy_seed): results do not depend
// on the batch size.
EvalResult evaluate(const GWParams& gw, const ProbeParams& probes, const AttentionParams* attn,
                    const Split& split, const EvalOptions& opts);

struct AttentionTrainOptions {
  std::vector<TaskId> tasks;  // cross-entropy averaged over these heads
  int epochs = 5;
  Index batch = 128;
  double peak_lr = 5e-3;
  uint64_t seed = 0;
};

struct AttentionTrainResult {
  AttentionParams init;    // seed-derived initialization
  AttentionParams params;  // after training
  int64_t steps = 0;
  std::string log_csv;
};

// Stage 3: only the Key/Query maps receive gradients; the workspace and the
// probes stay frozen (checked exactly on every step). Corruption masks and
// noise are redrawn each epoch from seeds derived off opts.seed.
AttentionTrainResult train_attention(const GWParams& gw, const ProbeParams& probes,
                                     const Schedule& schedule, const Datasets& data,
                                     const AttentionTrainOptions& opts);

}  // namespace gwx
