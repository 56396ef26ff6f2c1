#pragma once

#include <vector>

#include "recot/box.hpp"

namespace recot::harness {

// Analytic rectangle IoU; both boxes need positive area.
double box_iou(const Box& pred, const Box& gt);

// Fraction of samples with IoU >= t. preds[i] is the max-confidence box of
// sample i.
double acc_at_t(const std::vector<Box>& preds, const std::vector<Box>& gts, double t);

}  // namespace recot::harness
