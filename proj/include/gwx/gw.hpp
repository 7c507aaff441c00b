#pragma once

#include "gwx/dataset.hpp"
#include "gwx/params.hpp"
#include "gwx/rng.hpp"
#include "gwx/tape.hpp"

#include <array>
#include <string>
#include <vector>

namespace gwx {

// ---- MLP building block ----

enum class Activation { tanh, gelu };

// Dense layers; hidden activations applied between layers, linear output.
// Bias-free variants (empty `b`) make the whole map odd when the
// activations are odd; encoders use this so that heavy symmetric input
// noise lands in a zero-centered cloud regardless of modality.
struct MlpParams {
  std::vector<Mat> w;  // layer l: in x out
  std::vector<Mat> b;  // 1 x out; empty when bias-free

  bool has_bias() const { return !b.empty(); }

  int64_t count() const {
    int64_t n = 0;
    for (const auto& m : w) n += m.size();
    for (const auto& m : b) n += m.size();
    return n;
  }
};

// Fan-in uniform init (variance 1/fan_in), zero biases.
MlpParams make_mlp(const std::vector<int>& widths, Rng& rng, bool bias = true);

void mlp_to_dict(ParamDict& dict, const std::string& prefix, const MlpParams& mlp);
MlpParams mlp_from_dict(const ParamDict& dict, const std::string& prefix);

struct MlpVars {
  std::vector<Var> w, b;
};

MlpVars bind(Tape& tape, const MlpParams& mlp, bool trainable);

// Hidden activation between layers; optionally tanh on the output layer
// too (encoders bound their outputs, decoders stay linear to hit
// standardized targets).
Var mlp_apply(const MlpVars& mlp, Var x, Activation hidden, bool tanh_output = false);

// ---- global workspace ----

struct GWConfig {
  int d = 32;                             // workspace dimension
  int hidden = 64;                        // encoder/decoder hidden width
  std::array<int, 3> dims = kModalityDims;  // modality latent dims
  double tau = 1.0;                       // random-fusion temperature

  void validate() const;
};

struct GWParams {
  GWConfig config;
  std::array<MlpParams, 3> enc;  // d_m -> hidden -> hidden -> d, tanh throughout
  std::array<MlpParams, 3> dec;  // d -> hidden -> hidden -> d_m, tanh hidden, linear out

  static GWParams init(const GWConfig& config, Rng& rng);
  ParamDict to_dict() const;  // names under "gw/"
  static GWParams from_dict(const ParamDict& dict, const GWConfig& config);
};

struct GWVars {
  std::array<MlpVars, 3> enc, dec;
};

GWVars bind(Tape& tape, const GWParams& params, bool trainable);

// g_m = E_m(x_m) for each modality in `subset`; other slots stay invalid.
std::array<Var, 3> encode_subset(Tape& tape, const GWVars& gw, const std::array<Mat, 3>& x,
                                 ModalitySet subset);
std::array<Var, 3> encode_subset(const GWVars& gw, const std::array<Var, 3>& x, ModalitySet subset);

// z = tanh(sum_i alpha_i g_i). `alpha` columns follow ascending modality
// order over `subset`; every row must lie on the simplex.
Var fuse(const std::array<Var, 3>& g, ModalitySet subset, Var alpha);
Var fuse(Tape& tape, const std::array<Var, 3>& g, ModalitySet subset, const Mat& alpha);

// Single-vector convenience used by tests and tools.
Vec encode_one(const GWParams& params, const Vec& x, Modality m);
Vec fuse_one(const std::vector<std::pair<Modality, Vec>>& latents,
             const std::vector<double>& alpha);

// One random simplex draw over `m` weights: softmax(s / tau), s ~ U(0,1).
Mat random_fusion_weights(int m, double tau, Rng& rng);
// One independent draw per batch row.
Mat random_fusion_weights_batch(Index batch, int m, double tau, Rng& rng);

// x_hat_j = D_j(fuse(...)) for each j in `targets`.
std::array<Var, 3> decode_subset(const GWVars& gw, Var z, ModalitySet targets);

// Set-to-set broadcast on plain matrices (batch rows). `alpha` as in fuse.
std::array<Mat, 3> broadcast(const GWParams& params, const std::array<Mat, 3>& x,
                             ModalitySet inputs, ModalitySet outputs, const Mat& alpha);

// Exact trainable scalar count of any parameter collection.
int64_t count_params(const ParamDict& dict);

// The (name, leaf) pairs one training step may update. backward results are
// checked against this set exactly, so a gradient can never silently reach
// a frozen parameter and every declared trainable must be reachable.
class Trainables {
 public:
  void add(const std::string& name, Var v);
  void add_mlp(const std::string& prefix, const MlpVars& mlp);

  // backward + exact-coverage check; returns gradients keyed by name.
  GradMap collect(Tape& tape, Var loss) const;

  const std::vector<std::string>& names() const { return names_; }
  size_t size() const { return vars_.size(); }

 private:
  std::vector<std::string> names_;
  std::vector<Var> vars_;
};

}  // namespace gwx
