#pragma once

#include "gwx/eval.hpp"
#include "gwx/objectives.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace gwx {

// ---- run configuration ----
// Key-value config file, one `key = value` per line, '#' comments. The
// documented schema lives in the README; config_version is required.

struct StageSpec {
  int64_t steps = 0;  // stage 1 counts steps
  int epochs = 0;     // stages 2 and 3 count epochs
  Index batch = 128;
  double peak_lr = 2e-3;
};

struct RunConfig {
  int config_version = 1;
  std::string out_dir = "runs/default";
  uint64_t master_seed = 1;

  DataConfig data;
  GWConfig gw;
  LossWeights loss;

  StageSpec stage1{5000, 0, 128, 2e-3};
  StageSpec stage2{0, 3, 128, 2e-3};
  StageSpec stage3{0, 5, 128, 5e-3};

  Schedule schedule;                    // stage-3 training / eval regime
  std::vector<TaskId> attention_tasks;  // defaults to all five
  std::vector<double> eval_grid;        // defaults to sigma_grid()
  int eval_seeds = 3;                   // stage-3 replicates per reported cell

  static RunConfig defaults();
  void validate() const;
};

RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::filesystem::path& path);
std::string serialize_config(const RunConfig& config);

// ---- stages ----

struct Stage1Result {
  GWParams params;
  int64_t steps = 0;
  double final_total = 0.0;
  double val_translation = 0.0;  // singleton-encoder translation MSE on rep_val
  std::string log_csv;           // step,lr,L_tr,L_dcy,L_cycle,L_contrast,total
};

// Representation learning with random fusion on clean data. On divergence
// (non-finite loss) saves the last-good parameters and rethrows.
Stage1Result stage1_train_gw(const RunConfig& config, const Datasets& data,
                             const std::filesystem::path* lastgood_path = nullptr);

ProbeTrainResult stage2_train_probes(const RunConfig& config, const Datasets& data,
                                     const GWParams& gw);

AttentionTrainResult stage3_train_attention(const RunConfig& config, const Datasets& data,
                                            const GWParams& gw, const ProbeParams& probes,
                                            const Schedule& schedule,
                                            const std::vector<TaskId>& tasks, uint64_t seed);

// ---- pipeline driver ----
// Owns the out_dir layout: datasets.bin, checkpoints/, metrics/,
// manifest.json. Stages are cached by file existence; the manifest pins the
// config hash so a changed config cannot silently reuse stale artifacts.

class Pipeline {
 public:
  Pipeline(const RunConfig& config, std::filesystem::path out_dir);

  const Datasets& datasets();
  const GWParams& gw();
  const ProbeParams& probes();

  // Trains (or loads) a tagged stage-3 attention model.
  AttentionParams attention(const std::string& tag, const Schedule& schedule,
                            const std::vector<TaskId>& tasks, uint64_t seed);

  // Protocols: noise-grid | leave-out-task | modality-gen-1 | modality-gen-2.
  void run_experiment(const std::string& protocol);

  // Single evaluation under the config schedule; writes an accuracy CSV.
  EvalResult run_eval(FusionPolicy policy);

  void write_manifest();

  // JSON text of a recorded stage, if that stage ran or was loaded.
  std::optional<std::string> stage_record(const std::string& name) const;

  const std::filesystem::path& dir() const { return out_dir_; }
  const RunConfig& config() const { return config_; }

 private:
  void record_metric(const std::filesystem::path& relpath, const std::string& content);
  void record_stage(const std::string& name, double wall_seconds,
                    const std::vector<std::pair<std::string, std::string>>& info);
  EvalResult cell_eval(FusionPolicy policy, const AttentionParams* attn, const Schedule& schedule,
                       const std::string& stream_tag);

  void protocol_noise_grid();
  void protocol_leave_out_task();
  void protocol_modality_gen1();
  void protocol_modality_gen2();

  RunConfig config_;
  std::filesystem::path out_dir_;
  std::optional<Datasets> data_;
  std::optional<GWParams> gw_;
  std::optional<ProbeParams> probes_;
  std::vector<std::pair<std::string, std::string>> stage_records_;   // name -> json text
  std::vector<std::pair<std::string, std::string>> metric_records_;  // relpath -> sha256
};

// Accuracy-table CSV row formatting shared by protocols and the eval
// command: policy,schedule,train_sigma,test_sigma,task,accuracy,n
std::string accuracy_table_header();
void append_accuracy_rows(std::string& csv, const EvalResult& result, FusionPolicy policy,
                          const Schedule& schedule, double train_sigma);

}  // namespace gwx
