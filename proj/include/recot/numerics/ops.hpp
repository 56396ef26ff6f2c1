#pragma once

#include "recot/numerics/graph.hpp"

// Differentiable kernels. Every op records its analytic reverse rule on the
// graph. Rank-2 operands are (rows x cols); image operands are (C x H x W).
namespace recot::numerics::ops {

template <typename T>
Var matmul(Graph<T>& g, Var a, Var b);
// a · bᵀ
template <typename T>
Var matmul_nt(Graph<T>& g, Var a, Var b);
template <typename T>
Var transpose(Graph<T>& g, Var a);
template <typename T>
Var reshape(Graph<T>& g, Var a, Shape shape);

template <typename T>
Var add(Graph<T>& g, Var a, Var b);
template <typename T>
Var sub(Graph<T>& g, Var a, Var b);
template <typename T>
Var mul(Graph<T>& g, Var a, Var b);
template <typename T>
Var scale(Graph<T>& g, Var a, T s);
// x: r x d, b: any shape with d elements; adds b to every row.
template <typename T>
Var add_row_bias(Graph<T>& g, Var x, Var b);
// x: r x d, s: r elements; row i is multiplied by s[i].
template <typename T>
Var scale_rows(Graph<T>& g, Var x, Var s);
// x·w + b with w: d_in x d_out, b: d_out.
template <typename T>
Var linear(Graph<T>& g, Var x, Var w, Var b);

template <typename T>
Var sigmoid(Graph<T>& g, Var x);
template <typename T>
Var relu(Graph<T>& g, Var x);
template <typename T>
Var abs(Graph<T>& g, Var x);
// Max-subtracted softmax along `axis` of a tensor of any rank.
template <typename T>
Var softmax(Graph<T>& g, Var x, int axis);
// Row-wise layer normalization of a rank-2 tensor, affine gamma/beta per column.
template <typename T>
Var layer_norm(Graph<T>& g, Var x, Var gamma, Var beta, double eps = 1e-5);

template <typename T>
Var concat_rows(Graph<T>& g, Var a, Var b);
template <typename T>
Var slice_rows(Graph<T>& g, Var x, int begin, int end);

// Scalar (shape [1]) sum / mean of all elements.
template <typename T>
Var sum(Graph<T>& g, Var x);
template <typename T>
Var mean(Graph<T>& g, Var x);
// r x d -> 1 x d
template <typename T>
Var sum_rows(Graph<T>& g, Var x);

// Cross-correlation. x: C_in x H x W, w: C_out x C_in x k x k, b: C_out.
template <typename T>
Var conv2d(Graph<T>& g, Var x, Var w, Var b, int stride, int pad);
// Half-pixel (align_corners = false) bilinear resize of C x H x W.
template <typename T>
Var resize_bilinear(Graph<T>& g, Var x, int out_h, int out_w);
// 2x2 mean pooling, stride 2. H and W must be even.
template <typename T>
Var avg_pool2(Graph<T>& g, Var x);
// C x H x W -> 2 x H x W: channel-wise max (plane 0) and mean (plane 1).
template <typename T>
Var channel_pool(Graph<T>& g, Var x);

// Multi-head scaled dot-product attention on already projected Q (Lq x c),
// K (Lk x c), V (Lk x c). Head h uses columns [h·d, (h+1)·d) with d = c/heads
// and weights softmax(Q_h K_hᵀ / sqrt(d)). If `probs` is given it receives the
// weights as heads x Lq x Lk.
template <typename T>
Var attention(Graph<T>& g, Var q, Var k, Var v, int heads, Tensor<T>* probs = nullptr);

}  // namespace recot::numerics::ops
