#pragma once

#include <random>
#include <vector>

#include "recot/io/raster.hpp"
#include "recot/numerics/layers.hpp"

// Small strided conv stacks standing in for the image backbone, plus the point
// prompt embedder.
namespace recot::encoder {

using numerics::Graph;
using numerics::ParamRegistry;
using numerics::Tensor;
using numerics::Var;

struct EncoderConfig {
  int c = 64;
  int query_h = 64;
  int query_w = 64;
  int ref_h = 128;
  int ref_w = 128;
  // Channel widths of the first two stride-2 stages; the third emits c.
  int width1 = 16;
  int width2 = 32;
  // Reference trunk reuses the query stages (off by default: the two views have
  // different statistics).
  bool share_views = false;

  int hq() const { return query_h / 8; }
  int wq() const { return query_w / 8; }
  int hr() const { return ref_h / 16; }
  int wr() const { return ref_w / 16; }

  void validate() const;
  bool operator==(const EncoderConfig&) const = default;
};

// Normalized click position inside the query raster.
struct PromptPoint {
  double x = 0.5;
  double y = 0.5;
};

template <typename T>
void register_encoder(ParamRegistry<T>& reg, const EncoderConfig& cfg, std::mt19937_64& rng);

// 3 x H x W, values 4 (pixel/255 - 0.5) in [-2, 2]: near unit scale for
// natural-looking images, so content is not drowned by the positional codes.
template <typename T>
Tensor<T> raster_to_tensor(const io::Raster& r);

// C x H x W feature map to (H*W) x C tokens; row i*W + j is cell (i, j).
template <typename T>
Var flatten_tokens(Graph<T>& g, Var fmap);

// F_q as (h_q*w_q) x c tokens.
template <typename T>
Var encode_query(Graph<T>& g, const EncoderConfig& cfg, Var img);

struct ReferenceFeatures {
  Var hr;  // c x 2h_r x 2w_r
  Var lr;  // c x h_r x w_r
};

template <typename T>
ReferenceFeatures encode_reference(Graph<T>& g, const EncoderConfig& cfg, Var img);

// sin/cos pairs of (x, y) at log-spaced frequencies, `dim` values in total.
std::vector<double> fourier_features(double x, double y, int dim);

// Fourier features of every cell centre of an h x w grid: (h*w) x dim.
template <typename T>
Tensor<T> grid_positions(int h, int w, int dim);

// P as 1 x c.
template <typename T>
Var embed_prompt(Graph<T>& g, const EncoderConfig& cfg, const PromptPoint& p);

}  // namespace recot::encoder
