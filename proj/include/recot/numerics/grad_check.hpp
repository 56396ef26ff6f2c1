#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "recot/numerics/graph.hpp"

namespace recot::numerics {

struct GradCheckOptions {
  double eps = 1e-4;
  double tol = 1e-4;
  // Scalars probed per parameter tensor; tensors at or below this size are
  // probed exhaustively.
  int samples_per_param = 4;
  std::uint64_t seed = 0;
};

struct GradCheckEntry {
  std::string param;
  std::size_t index = 0;
  double analytic = 0.0;
  double numeric = 0.0;
  // |analytic - numeric| / max(1, |numeric|)
  double rel_error = 0.0;
};

struct GradCheckReport {
  bool passed = true;
  double max_rel_error = 0.0;
  GradCheckEntry worst;
  std::vector<GradCheckEntry> entries;

  std::string summary() const;
};

// Builds a scalar loss on the given graph; the graph is bound to the registry
// under test. Must be deterministic.
using Objective = std::function<Var(Graph<double>&)>;

// Compares reverse-mode gradients against central differences for sampled
// trainable scalars of `params`. The registry is restored before returning.
GradCheckReport grad_check(const Objective& f, ParamRegistry<double>& params,
                           const GradCheckOptions& options = {});

}  // namespace recot::numerics
