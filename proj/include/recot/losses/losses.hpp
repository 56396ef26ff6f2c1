#pragma once

#include <vector>

#include "recot/box.hpp"
#include "recot/io/raster.hpp"
#include "recot/model/recot.hpp"

// Training objectives. Every loss is a scalar node on the caller's graph.
namespace recot::losses {

using numerics::Graph;
using numerics::Tensor;
using numerics::Var;

inline constexpr double kProbClamp = 1e-7;
inline constexpr double kDiceSmooth = 1.0;

// Mean binary cross-entropy; pred is clamped to [1e-7, 1 - 1e-7].
template <typename T>
Var bce_loss(Graph<T>& g, Var pred, const Tensor<T>& target);

// 1 - (2 Σ p t + 1) / (Σ p + Σ t + 1)
template <typename T>
Var dice_loss(Graph<T>& g, Var pred, const Tensor<T>& target);

// 1 x h x w; a cell is 1 when its centre lies inside the box (edges included).
// An empty result is reported on stderr.
Tensor<double> box_mask(const Box& gt, int h, int w);

// Area-average of a binary raster onto an h x w grid, 1 x h x w in [0, 1].
Tensor<double> downsample_mask(const io::Raster& mask, int h, int w);

template <typename T>
Var l_token(Graph<T>& g, const Tensor<T>& m_o, Var m_hat);

// Same composite as l_token, supervising the query segmentation head.
template <typename T>
Var l_sam(Graph<T>& g, const Tensor<T>& m_sam, Var m_hat);

struct DetWeights {
  double l1 = 5.0;
  double giou = 2.0;
  double conf = 1.0;
};

// Positive token: argmin of l1*L1 + giou*(1 - GIoU) - conf*ln(conf). Ties go to
// the lowest index.
int match_token(const Tensor<double>& boxes, const Tensor<double>& conf, const Box& gt,
                const DetWeights& w = {});

// l1*L1 + giou*(1 - GIoU) on the matched token plus conf * mean BCE of all
// confidences against the one-hot match.
template <typename T>
Var l_det(Graph<T>& g, Var boxes, Var conf, const Box& gt, const DetWeights& w = {},
          int* matched = nullptr);

struct LossTargets {
  Box gt;
  Tensor<double> box_mask;    // 1 x h_r x w_r
  Tensor<double> query_mask;  // 1 x h_q x w_q
};

LossTargets make_targets(const Box& gt, const io::Raster& oracle_mask, const model::ModelConfig& cfg);

struct LossOptions {
  double alpha = 1.0;
  bool use_token = true;
  bool use_sam = true;
  DetWeights det;
};

// Disabled terms are left out of the graph and reported as 0.
struct LossBreakdown {
  std::vector<double> l_det_per_step;
  std::vector<double> l_token_per_step;
  double l_sam = 0.0;
  double total = 0.0;
  double alpha = 1.0;

  double det_sum() const;
  double token_sum() const;
};

struct TotalLoss {
  Var total;
  LossBreakdown breakdown;
};

template <typename T>
TotalLoss total_loss(Graph<T>& g, const model::ForwardTrace<T>& trace, const LossTargets& targets,
                     const LossOptions& opts = {});

}  // namespace recot::losses
