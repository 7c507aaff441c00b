#pragma once

#include "gwx/dataset.hpp"
#include "gwx/gw.hpp"
#include "gwx/optim.hpp"

namespace gwx {

// Frozen-workspace classification heads, one per task. GELU hidden layers,
// linear logits; no normalization layers.
struct ProbeConfig {
  int d = 32;
  int hidden = 128;
};

struct ProbeParams {
  ProbeConfig config;
  std::array<MlpParams, kNumTasks> heads;  // d -> hidden -> hidden -> n_classes

  static ProbeParams init(const ProbeConfig& config, Rng& rng);
  ParamDict to_dict() const;  // names under "probe/<task>/"
  static ProbeParams from_dict(const ParamDict& dict);
};

struct ProbeVars {
  std::array<MlpVars, kNumTasks> heads;
};

ProbeVars bind(Tape& tape, const ProbeParams& params, bool trainable);

Var probe_forward(Var z, TaskId task, const ProbeVars& probes);
Vec probe_forward_one(const ProbeParams& params, const Vec& z, TaskId task);

struct StageOptions {
  int epochs = 3;
  Index batch = 128;
  double peak_lr = 2e-3;
  uint64_t seed = 0;
};

struct ProbeTrainResult {
  ProbeParams params;
  std::array<double, kNumTasks> clean_accuracy{};  // on the held-out split
  int64_t steps = 0;
  std::string log_csv;
};

// Stage 2: cross-entropy probes on clean classification data, the workspace
// frozen, fusion weights drawn at random per sample over all modalities.
// Asserts that gradients touch probe parameters only.
ProbeTrainResult train_probes(const GWParams& gw, const Datasets& data, const StageOptions& opts);

// Data-quality check: per-task accuracy of probes trained directly on one
// modality's clean backbone latents, bypassing the workspace.
std::array<double, kNumTasks> single_modality_probe_accuracy(const Datasets& data, Modality m,
                                                             const StageOptions& opts);

}  // namespace gwx
