#pragma once

#include <random>
#include <string>

#include "recot/numerics/ops.hpp"

// Parameterized building blocks layered on the raw kernels. Each block owns a
// name prefix within a ParamRegistry; `register_*` creates the entries and the
// matching apply function binds them on a graph.
namespace recot::numerics::layers {

// <prefix>.w (d_in x d_out), <prefix>.b (d_out)
template <typename T>
void register_linear(ParamRegistry<T>& reg, const std::string& prefix, int d_in, int d_out,
                     std::mt19937_64& rng, double gain = 1.0);
template <typename T>
Var apply_linear(Graph<T>& g, const std::string& prefix, Var x);

// <prefix>.gamma, <prefix>.beta (d)
template <typename T>
void register_layer_norm(ParamRegistry<T>& reg, const std::string& prefix, int d);
template <typename T>
Var apply_layer_norm(Graph<T>& g, const std::string& prefix, Var x);

// <prefix>.w (C_out x C_in x k x k), <prefix>.b (C_out, filled with `bias`)
template <typename T>
void register_conv(ParamRegistry<T>& reg, const std::string& prefix, int c_in, int c_out, int k,
                   std::mt19937_64& rng, double gain = 1.0, double bias = 0.0);
template <typename T>
Var apply_conv(Graph<T>& g, const std::string& prefix, Var x, int stride, int pad);

// Multi-head attention: projections <prefix>.{q,k,v,o}, each c x c.
template <typename T>
void register_mha(ParamRegistry<T>& reg, const std::string& prefix, int c, std::mt19937_64& rng);

struct ProjectedKV {
  Var k;
  Var v;
};

template <typename T>
ProjectedKV project_kv(Graph<T>& g, const std::string& prefix, Var k_in, Var v_in);

// Attends projected queries of `q_in` to already projected keys/values and
// applies the output projection. Splitting the key/value projection out lets a
// block that reuses the same memory at several steps project it once.
template <typename T>
Var attend(Graph<T>& g, const std::string& prefix, Var q_in, const ProjectedKV& kv, int heads,
           Tensor<T>* probs = nullptr);

// softmax(QKᵀ/sqrt(c/heads))·V per head, heads concatenated, then projected.
template <typename T>
Var mha(Graph<T>& g, const std::string& prefix, Var q_in, Var k_in, Var v_in, int heads,
        Tensor<T>* probs = nullptr);

}  // namespace recot::numerics::layers
