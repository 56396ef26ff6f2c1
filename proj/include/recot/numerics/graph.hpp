#pragma once

#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "recot/numerics/param_registry.hpp"
#include "recot/numerics/tensor.hpp"

namespace recot::numerics {

// Handle to a node on a Graph tape.
struct Var {
  int id = -1;
  bool valid() const { return id >= 0; }
};

// Recorded computation tape. Nodes are appended in evaluation order, so reverse
// creation order is a topological order for the reverse pass. A graph is used
// from one thread only.
template <typename T>
class Graph {
 public:
  using BackwardFn = std::function<void(Graph&, int self)>;

  explicit Graph(const ParamRegistry<T>* params = nullptr) : params_(params) {}

  Var constant(Tensor<T> value);
  // Leaf that collects a gradient; used by tests and by grad_check.
  Var leaf(Tensor<T> value);
  // Leaf bound to a registry entry. Repeated calls with the same name return the
  // same node, so a shared block used at several steps accumulates into one
  // gradient.
  Var param(const std::string& name);
  Var param(int index);

  const Tensor<T>& value(Var v) const { return nodes_[check(v)].value; }
  bool requires_grad(Var v) const { return nodes_[check(v)].requires_grad; }
  bool requires_grad(int id) const { return nodes_[id].requires_grad; }
  const Tensor<T>& value(int id) const { return nodes_[id].value; }

  // Gradient after backward(); zeros when the node was unreachable.
  Tensor<T> grad(Var v) const;
  // Gradient buffer of a node, materialized as zeros on first access.
  Tensor<T>& grad_mut(int id);

  Var record(const char* op, Tensor<T> value, std::initializer_list<Var> parents, BackwardFn fn);
  Var record(const char* op, Tensor<T> value, const std::vector<Var>& parents, BackwardFn fn);

  // Populates gradients of every node reachable from a scalar loss.
  void backward(Var loss);

  // Gradients of registry parameters, aligned with registry order. Parameters
  // absent from this tape get zeros.
  GradientSet<T> param_grads() const;
  void accumulate_param_grads(GradientSet<T>& into) const;

  const ParamRegistry<T>* registry() const { return params_; }
  std::size_t node_count() const { return nodes_.size(); }

 private:
  struct Node {
    Tensor<T> value;
    Tensor<T> grad;
    bool requires_grad = false;
    bool grad_ready = false;
    int param_index = -1;
    std::vector<int> parents;
    BackwardFn backward;
    const char* op = "";
  };

  int check(Var v) const;

  const ParamRegistry<T>* params_;
  std::vector<Node> nodes_;
  std::vector<int> param_nodes_;  // registry index -> node id (or -1)
};

namespace debug {
// Test-only mutation hook: negates the sigmoid backward rule so that gradient
// verification can be shown to catch a broken kernel.
void set_sigmoid_backward_sign_flip(bool on);
bool sigmoid_backward_sign_flip();
}  // namespace debug

extern template class Graph<float>;
extern template class Graph<double>;

}  // namespace recot::numerics
