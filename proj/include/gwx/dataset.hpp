#pragma once

#include "gwx/rng.hpp"
#include "gwx/types.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

namespace gwx {

using IMat = Eigen::Matrix<int32_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline constexpr std::array<int, 3> kModalityDims{10, 8, 64};

// ---- shape attributes ----

enum class ShapeCategory : int { diamond = 0, triangle = 1, egg = 2 };

inline constexpr double kPosMin = -3.0, kPosMax = 3.0;
inline constexpr double kSizeMin = 7.0, kSizeMax = 14.0;

struct ShapeAttributes {
  ShapeCategory category = ShapeCategory::diamond;
  double x = 0.0, y = 0.0;   // each in [-3, 3]
  double size = kSizeMin;    // [7, 14]
  double rotation = 0.0;     // canonical [0, 2pi)
  double r = 0.0, g = 0.0, b = 0.0;  // [0, 1]
};

// Uniform over the full attribute ranges; category uniform over 3.
ShapeAttributes sample_attributes(Rng& rng);

// category one-hot(3), x, y, size, cos(rot), sin(rot), r, g, b
inline constexpr int kCanonicalDim = 11;
Vec canonical_encoding(const ShapeAttributes& a);

// ---- classification grid ----

enum class TaskId : int { category = 0, color = 1, rotation = 2, position = 3, size = 4 };

inline constexpr int kNumTasks = 5;
inline constexpr std::array<int, kNumTasks> kTaskClassCounts{3, 9, 4, 4, 4};

std::string_view to_string(TaskId t);
TaskId task_from_string(std::string_view s);

// The 9 palette colors: (r, g) on the {0.1, 0.5, 0.9} grid, b fixed at 0.5.
const std::array<std::array<double, 3>, 9>& color_palette();

// Kept rotation bins: [c - pi/16, c + pi/16) around c in {0, pi/2, pi, 3pi/2}.
// Kept position cells (unit squares around): bottom (0,-2), top (0,2),
// left (-2,0), right (2,0). Size bins: equal quarters of [7, 14].
inline constexpr std::array<std::array<double, 2>, 4> kPositionCells{{{0, -2}, {0, 2}, {-2, 0}, {2, 0}}};

// Attributes fall outside every kept bin of some task.
struct RejectionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using TaskLabels = std::array<int32_t, kNumTasks>;

// Labels for attributes that lie on the restricted grid; throws
// RejectionError otherwise (generators must resample).
TaskLabels make_classification_labels(const ShapeAttributes& a);

// Attributes drawn inside the bins that the given labels name.
ShapeAttributes sample_classification_attributes(const TaskLabels& labels, Rng& rng);

// ---- simulated frozen backbones ----

// Stand-ins for the pretrained per-modality encoders: a fixed, seeded
// two-layer tanh feature map from the canonical encoding to the modality
// latent dimension, followed by frozen per-coordinate standardization
// calibrated on a dedicated sample stream.
class BackboneSim {
 public:
  static BackboneSim make(uint64_t dataset_seed);

  Vec encode(const ShapeAttributes& a, Modality m) const;
  Mat encode_batch(const std::vector<ShapeAttributes>& attrs, Modality m) const;

  int latent_dim(Modality m) const { return kModalityDims[static_cast<int>(m)]; }

 private:
  struct Net {
    Mat w1, b1, w2, b2;  // biases are 1 x width
    Vec mean, stddev;    // standardization, per output coordinate
  };
  Vec raw_forward(const Net& net, const ShapeAttributes& a) const;
  std::array<Net, 3> nets_;
};

// ---- dataset bundle ----

struct Split {
  std::vector<ShapeAttributes> attrs;  // regenerable; not serialized
  std::array<Mat, 3> latents;          // n x d_m per modality
  IMat labels;                         // n x 5 for classification splits, else 0 x 0

  Index size() const { return latents[0].rows(); }
  bool has_labels() const { return labels.rows() > 0; }
};

struct DataConfig {
  uint64_t seed = 1;
  int n_rep_train = 50000;
  int n_rep_val = 2000;
  int n_cls_train = 20000;
  int n_cls_test = 2000;
};

struct Datasets {
  DataConfig config;
  BackboneSim backbone;
  Split rep_train, rep_val, cls_train, cls_test;
};

Datasets build_datasets(const DataConfig& config);

// Copy the given rows of each modality in `subset` into fresh matrices.
std::array<Mat, 3> gather_latent_rows(const std::array<Mat, 3>& latents,
                                      std::span<const Index> rows, ModalitySet subset);

// Single file: one-line JSON manifest (sizes, seed, per-block sha256),
// then raw little-endian float64 blocks per split and modality, with
// int32 label blocks for the classification splits.
void save_datasets(const std::filesystem::path& path, const Datasets& data);
Datasets load_datasets(const std::filesystem::path& path);

}  // namespace gwx
