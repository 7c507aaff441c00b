#pragma once

#include "gwx/gw.hpp"

#include <span>

namespace gwx {

struct LossWeights {
  double tr = 1.0;
  double dcy = 1.0;
  double cycle = 1.0;
  double contrast = 0.01;
  double contrast_temperature = 0.1;

  void validate() const {
    if (tr < 0 || dcy < 0 || cycle < 0 || contrast < 0)
      throw ContractError("LossWeights: weights must be non-negative");
    if (contrast_temperature <= 0) throw ContractError("LossWeights: temperature must be positive");
  }
};

// One encoder subset with its target sets. The cycle complement is taken in
// the full modality set, so it can include modalities unobserved for the
// sample; it is empty (cycle skipped) when the subset covers everything.
struct SubsetTerm {
  ModalitySet encoders;
  ModalitySet demi_targets;         // == encoders
  ModalitySet translation_targets;  // observed minus encoders
  ModalitySet cycle_complement;     // full set minus encoders
};

struct SubsetPlan {
  ModalitySet observed;
  std::vector<SubsetTerm> terms;  // all non-empty encoder subsets, bitmask ascending

  static SubsetPlan make(ModalitySet observed, ModalitySet universe = ModalitySet::all());
};

// Mean over the batch of -log softmax(logits)[label]; built from
// log-softmax plus a one-hot contraction.
Var cross_entropy(Tape& tape, Var logits, std::span<const int32_t> labels);

// ---- representation losses (graph level) ----
// `g` holds pre-encoded latents for every modality in the relevant subset;
// `x` holds the clean target latents. Alphas are per-sample rows.

Var demi_cycle_loss(Tape& tape, const GWVars& gw, const std::array<Var, 3>& g,
                    const std::array<Mat, 3>& x, ModalitySet subset, const Mat& alpha);

Var translation_loss(Tape& tape, const GWVars& gw, const std::array<Var, 3>& g,
                     const std::array<Mat, 3>& x, ModalitySet subset, ModalitySet targets,
                     const Mat& alpha);

// Broadcast to the complement, re-encode the predictions, broadcast back,
// and compare on the original subset. Gradients flow through both passes.
Var cycle_loss(Tape& tape, const GWVars& gw, const std::array<Var, 3>& g,
               const std::array<Mat, 3>& x, ModalitySet subset, ModalitySet complement,
               const Mat& alpha_fwd, const Mat& alpha_bwd);

// Symmetric InfoNCE over every unordered modality pair in `observed`, on
// L2-normalized pre-fusion latents, averaged over pairs and directions.
Var contrastive_loss(Tape& tape, const std::array<Var, 3>& g, ModalitySet observed,
                     double temperature);

struct RepLossValues {
  Var total, tr, dcy, cycle, contrast;
};

// Enumerates the plan; every fusion site draws fresh per-sample random
// weights from `rng`. Each component is averaged over its contributing
// subsets before weighting.
RepLossValues total_rep_loss(Tape& tape, const GWVars& gw, const std::array<Mat, 3>& x,
                             const SubsetPlan& plan, const LossWeights& weights, double tau,
                             Rng& rng);

// ---- plain-value wrappers (spec operation surface; no gradients) ----

double demi_cycle_loss_value(const GWParams& params, const std::array<Mat, 3>& x,
                             ModalitySet subset, const Mat& alpha);
double translation_loss_value(const GWParams& params, const std::array<Mat, 3>& x,
                              ModalitySet subset, ModalitySet targets, const Mat& alpha);
double cycle_loss_value(const GWParams& params, const std::array<Mat, 3>& x, ModalitySet subset,
                        ModalitySet complement, const Mat& alpha_fwd, const Mat& alpha_bwd);
double contrastive_loss_value(const GWParams& params, const std::array<Mat, 3>& x,
                              ModalitySet observed, double temperature);

// Deterministic stage-1 validation metric: mean over ordered modality pairs
// (i -> j, i != j) of the singleton-encoder translation MSE.
double translation_validation(const GWParams& params, const std::array<Mat, 3>& x);

}  // namespace gwx
