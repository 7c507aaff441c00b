#pragma once

#include "gwx/gw.hpp"

namespace gwx {

// Top-down modality selector: a shared Key map over pre-fusion latents and
// a Query from the uniform-fusion initial workspace state. Dot-product
// logits, softmax across the participating modalities. The Key map being
// shared is what lets the same parameters score any subset size.
struct AttentionConfig {
  int d = 32;  // workspace dimension
  int h = 64;  // head size
};

struct AttentionParams {
  AttentionConfig config;
  Mat k_w, k_b;  // d x h, 1 x h
  Mat q_w, q_b;

  static AttentionParams init(const AttentionConfig& config, Rng& rng);
  ParamDict to_dict() const;  // names under "attn/"
  static AttentionParams from_dict(const ParamDict& dict);
};

struct AttentionVars {
  Var k_w, k_b, q_w, q_b;
};

AttentionVars bind(Tape& tape, const AttentionParams& params, bool trainable);

struct AttendResult {
  Var z_init;  // uniform-fusion workspace state
  Var logits;  // B x |subset|
  Var alpha;   // softmax over the subset, columns in ascending modality order
  Var z;       // attention-weighted fused latent
};

// Batched attention over the latents of `subset` (each B x d).
AttendResult attend(Tape& tape, const std::array<Var, 3>& g, ModalitySet subset,
                    const AttentionVars& attn);

// Single-sample convenience: returns (alpha, z) for row vectors.
std::pair<Vec, Vec> attend_one(const AttentionParams& params,
                               const std::vector<std::pair<Modality, Vec>>& latents);

}  // namespace gwx
