#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "recot/losses/losses.hpp"
#include "recot/model/recot.hpp"
#include "recot/numerics/grad_check.hpp"
#include "recot/synthdata/synthdata.hpp"

namespace recot::harness {

using model::ModelConfig;
using numerics::ParamRegistry;

struct TrainConfig {
  double lr = 0.0025;
  double weight_decay = 0.0001;
  int batch_size = 16;
  int epochs = 30;
  int m_train = 6;
  int m_eval = 0;  // 0: same as m_train
  double alpha = 1.0;
  std::uint64_t seed = 0;
  int eval_every = 1;  // epochs between validation passes (the last epoch always runs one)
  double clip_norm = 1.0;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double adam_eps = 1e-8;
  bool use_token = true;
  bool use_sam = true;
  // Each training sample gets a random flip/transpose applied jointly to both
  // views, the prompt, the masks and the box.
  bool augment = false;
  ModelConfig model;

  int eval_steps() const { return m_eval > 0 ? m_eval : m_train; }
  losses::LossOptions loss_options() const;
  void validate() const;
  bool operator==(const TrainConfig&) const = default;
};

// One sample in model-ready form.
struct Example {
  std::string id;
  model::ModelInputs inputs;
  losses::LossTargets targets;
};

Example to_example(const synthdata::CvoglSample& s, const ModelConfig& cfg);
// Joint dihedral transform, op in [0, 8): bit 0 mirrors x, bit 1 mirrors y,
// bit 2 transposes first. Transposes need square rasters.
Example transform_example(const Example& ex, int op, const ModelConfig& cfg);
int dihedral_ops(const ModelConfig& cfg);  // 8 for square rasters, else 4

std::vector<Example> load_examples(const std::filesystem::path& root, const std::string& split,
                                   const ModelConfig& cfg);

// Decoupled weight decay, scaled by the learning rate like the gradient step.
class AdamW {
 public:
  AdamW(double lr, double weight_decay, double beta1 = 0.9, double beta2 = 0.999, double eps = 1e-8);
  void step(ParamRegistry<float>& params, const numerics::GradientSet<float>& grads);
  long steps_taken() const { return t_; }

 private:
  double lr_, wd_, b1_, b2_, eps_;
  long t_ = 0;
  std::vector<std::vector<double>> m_, v_;
};

// Rescales in place so the global L2 norm is at most max_norm; returns the
// norm before clipping.
double clip_global_norm(numerics::GradientSet<float>& grads, double max_norm);

struct StepMetrics {
  int step = 0;
  double acc25 = 0.0;
  double acc50 = 0.0;
  double mean_iou = 0.0;
};

struct EvalReport {
  std::vector<StepMetrics> steps;
  int m_star = 1;
  int count = 0;
  // Mean loss over the split; filled when targets were available.
  losses::LossBreakdown mean_loss;

  const StepMetrics& at(int step) const { return steps.at(static_cast<std::size_t>(step - 1)); }
  const StepMetrics& headline() const { return at(m_star); }
};

// Step with the best Acc@0.25; ties go to the earliest step.
int select_m_star(const std::vector<StepMetrics>& steps);

// Best-confidence box per step for one example.
std::vector<Box> predict_boxes(const ModelConfig& cfg, const ParamRegistry<float>& params, const Example& ex,
                               int m);

// m_star <= 0 selects on this split; otherwise the given step is the headline.
EvalReport evaluate(const ModelConfig& cfg, const ParamRegistry<float>& params, const std::vector<Example>& data,
                    int m_eval, int m_star = 0, const losses::LossOptions* loss = nullptr);

struct Checkpoint {
  ParamRegistry<float> params;
  TrainConfig config;
  int epoch = 0;
  std::string rng_state;
  int m_star = 1;
};

void save_checkpoint(const std::filesystem::path& dir, const Checkpoint& ckpt);
Checkpoint load_checkpoint(const std::filesystem::path& dir);

struct EpochRecord {
  int epoch = 0;
  std::string split;
  losses::LossBreakdown loss;
  std::vector<double> acc25;
  std::vector<double> acc50;
};

// One NDJSON line.
std::string to_ndjson(const EpochRecord& r);

struct TrainResult {
  Checkpoint best;   // best validation Acc@0.25 (at its own m*)
  Checkpoint last;
  std::vector<EpochRecord> log;
  EvalReport best_val;
};

// Writes NDJSON records to `log` as they are produced when non-null. NaN or
// Inf anywhere in an update raises TrainingAborted naming epoch and batch.
TrainResult train(const TrainConfig& cfg, const std::vector<Example>& train_set, const std::vector<Example>& val_set,
                  std::ostream* log = nullptr);

// Ablation switches.
struct Switches {
  bool no_rfem = false;
  bool no_l_sam = false;
  bool no_l_token = false;
  bool replace_flr_with_fhr = false;
  bool replace_fhr_with_flr = false;
  bool no_M = false;

  static Switches parse(const std::string& spec);  // "no_rfem+no_l_sam"; "" or "full" is none
  std::string name() const;
  bool any() const;
  TrainConfig apply(TrainConfig cfg) const;
};

struct AblationRow {
  std::string variant;
  EvalReport val;
  EvalReport test;  // headline at the val-selected m*
  Checkpoint best;
};

// Full model first, then one row per requested variant, all from cfg.seed.
std::vector<AblationRow> ablate(const TrainConfig& cfg, const std::vector<Switches>& variants,
                                const std::vector<Example>& train_set, const std::vector<Example>& val_set,
                                const std::vector<Example>& test_set);

// Gradient verification of the full objective on one toy sample in 64-bit.
struct GradCheckSetup {
  ModelConfig model;
  int m = 3;
  double alpha = 1.0;
  std::uint64_t seed = 1;
  numerics::GradCheckOptions options;
};
GradCheckSetup toy_grad_check_setup();
synthdata::SceneConfig toy_scene(const ModelConfig& cfg);
numerics::GradCheckReport run_grad_check(const GradCheckSetup& setup);

}  // namespace recot::harness
