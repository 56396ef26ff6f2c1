#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "recot/encoder/encoder.hpp"

// The recurrent localization network: learnable tokens take in query and
// prompt context, the reference features are filtered by the query (RFEM), and
// one shared cross-attention block plus one shared linear head refine the
// tokens step by step.
namespace recot::model {

using encoder::EncoderConfig;
using encoder::PromptPoint;
using numerics::Graph;
using numerics::ParamRegistry;
using numerics::Tensor;
using numerics::Var;

struct ModelConfig {
  EncoderConfig enc;
  int n_tokens = 16;
  int heads = 4;

  // Ablation switches. Defaults are the full model.
  bool use_rfem = true;           // off: F'_r is the tokenized F_lr
  bool use_spatial_gate = true;   // off: F_hr enters the cross-attention ungated
  bool gate_on_hr = false;        // spatial map computed against F_hr instead of F_lr
  bool cross_on_lr = false;       // upsampled F_lr replaces F_hr in the cross-attention

  void validate() const;
  bool operator==(const ModelConfig&) const = default;
};

// Registers every parameter in a fixed order. The count depends on c, n and
// the encoder widths only; the number of refinement steps never enters.
template <typename T>
ParamRegistry<T> build_params(const ModelConfig& cfg, std::uint64_t seed);

// Learnable n x c token matrix, N(0, 0.02^2).
template <typename T>
void init_tokens(ParamRegistry<T>& reg, int n, int c, std::mt19937_64& rng);

struct Interaction {
  Var t_q;       // token rows after self-attention over [T; F_q]
  Var t_prime;   // token rows after prompt cross-attention
  Var f_qc;      // full (n + h_q*w_q) x c sequence after prompt cross-attention
};

template <typename T>
Interaction query_interaction(Graph<T>& g, const ModelConfig& cfg, Var tokens, Var f_q, Var prompt);

struct RfemOutput {
  Var spatial_map;  // M, 1 x h x w on the grid it was computed on
  Var gated;        // high-resolution tokens after the multiplicative gate
  Var f_r;          // F'_r, (h_r*w_r) x c
};

// f_lr and f_hr are feature maps (c x h x w); positions are added here.
template <typename T>
RfemOutput rfem(Graph<T>& g, const ModelConfig& cfg, Var t_q, Var f_qc, Var f_lr, Var f_hr);

// Keys/values of the shared loop block, projected once per forward pass.
template <typename T>
numerics::layers::ProjectedKV loop_memory(Graph<T>& g, const ModelConfig& cfg, Var f_r);

template <typename T>
Var recurrent_step(Graph<T>& g, const ModelConfig& cfg, Var tokens,
                   const numerics::layers::ProjectedKV& memory, Tensor<T>* probs = nullptr);

// Sum over rows of T ⊙ softmax(T) with the softmax taken across rows.
template <typename T>
Var aggregate_tokens(Graph<T>& g, Var tokens);

// sigmoid(T'' F'_rᵀ / sqrt(c)) as 1 x h x w.
template <typename T>
Var token_map(Graph<T>& g, Var global, Var f_r, int h, int w);

struct BoxHead {
  Var boxes;  // n x 4 (cx, cy, w, h)
  Var conf;   // n x 1
};

template <typename T>
BoxHead predict_boxes(Graph<T>& g, Var tokens);

// Segmentation map of the prompt-conditioned query features, 1 x h_q x w_q.
template <typename T>
Var seg_head(Graph<T>& g, const ModelConfig& cfg, Var f_q_prime);

struct ModelInputs {
  Tensor<float> query;      // 3 x H_q x W_q, normalized
  Tensor<float> reference;  // 3 x H_r x W_r, normalized
  PromptPoint prompt;
};

struct StepVars {
  Var tokens;
  Var boxes;
  Var conf;
  Var agg_map;
};

template <typename T>
struct ForwardTrace {
  Var f_q;
  Var t_q;
  Var t_prime;
  Var f_qc;
  Var f_r;
  Var spatial_map;
  Var seg_map;
  std::vector<StepVars> steps;  // one per refinement step, 1..m
  // heads x n x (h_r*w_r) per step, only when requested.
  std::vector<Tensor<T>> attention;
};

template <typename T>
ForwardTrace<T> forward(Graph<T>& g, const ModelConfig& cfg, const ModelInputs& in, int m,
                        bool keep_attention = false);

// Plain values of one step, detached from the graph.
struct StepPrediction {
  int step = 0;
  std::vector<std::array<double, 4>> boxes;
  std::vector<double> conf;
  Tensor<double> agg_map;

  // Token with the highest confidence; ties go to the lowest index.
  int best() const;
};

template <typename T>
std::vector<StepPrediction> step_predictions(const Graph<T>& g, const ForwardTrace<T>& trace);

}  // namespace recot::model
