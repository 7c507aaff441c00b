#pragma once

#include "gwx/params.hpp"

#include <cstdint>

namespace gwx {

// Adam with bias correction. Moment buffers are keyed by parameter name and
// created lazily on first update.
struct AdamState {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  double base_lr = 1e-3;
  int64_t step = 0;
  std::map<std::string, Mat> m;
  std::map<std::string, Mat> v;
};

// One update for every entry of `grads`; parameters without a gradient are
// left untouched. Throws NumericError naming the parameter if its gradient
// is non-finite.
void adam_step(ParamDict& params, const GradMap& grads, AdamState& state, double lr);

// Linear warmup from peak/div_factor to peak over the first warmup_frac of
// steps, then cosine anneal down to peak/final_div_factor.
struct OneCycleSchedule {
  int64_t total_steps = 0;
  double peak_lr = 1e-3;
  double warmup_frac = 0.3;
  double div_factor = 25.0;
  double final_div_factor = 1e4;
};

double onecycle_lr(int64_t step, const OneCycleSchedule& sched);

}  // namespace gwx
