#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "recot/numerics/tensor.hpp"

namespace recot::numerics {

template <typename T>
struct Parameter {
  std::string name;
  Tensor<T> value;
  bool trainable = true;
};

// Ordered name -> tensor store. Iteration order is registration order, which is
// a pure function of the model config.
template <typename T>
class ParamRegistry {
 public:
  int add(const std::string& name, Tensor<T> value, bool trainable = true);

  bool contains(const std::string& name) const { return by_name_.count(name) != 0; }
  int index_of(const std::string& name) const;

  std::size_t size() const { return entries_.size(); }
  std::size_t scalar_count() const;

  Parameter<T>& at(int i) { return entries_.at(static_cast<std::size_t>(i)); }
  const Parameter<T>& at(int i) const { return entries_.at(static_cast<std::size_t>(i)); }
  Parameter<T>& at(const std::string& name) { return at(index_of(name)); }
  const Parameter<T>& at(const std::string& name) const { return at(index_of(name)); }

  const std::vector<Parameter<T>>& entries() const { return entries_; }
  std::vector<Parameter<T>>& entries() { return entries_; }

  template <typename U>
  ParamRegistry<U> cast() const {
    ParamRegistry<U> out;
    for (const auto& e : entries_) out.add(e.name, e.value.template cast<U>(), e.trainable);
    return out;
  }

 private:
  std::vector<Parameter<T>> entries_;
  std::map<std::string, int> by_name_;
};

// Per-parameter gradient buffers aligned with a registry's index order.
template <typename T>
class GradientSet {
 public:
  GradientSet() = default;
  explicit GradientSet(const ParamRegistry<T>& registry);

  std::size_t size() const { return grads_.size(); }
  Tensor<T>& operator[](std::size_t i) { return grads_[i]; }
  const Tensor<T>& operator[](std::size_t i) const { return grads_[i]; }

  void zero();
  void add(const GradientSet& other);
  void scale(T s);
  double global_norm() const;

 private:
  std::vector<Tensor<T>> grads_;
};

// Fan-in scaled uniform init: U(-b, b) with b = gain·sqrt(3/fan_in), so the
// output variance is gain² times the input variance. Use gain sqrt(2) ahead of
// a ReLU.
template <typename T>
Tensor<T> kaiming_uniform(Shape shape, int fan_in, std::mt19937_64& rng, double gain = 1.0);

template <typename T>
Tensor<T> normal_init(Shape shape, double stddev, std::mt19937_64& rng);

extern template class ParamRegistry<float>;
extern template class ParamRegistry<double>;
extern template class GradientSet<float>;
extern template class GradientSet<double>;

}  // namespace recot::numerics
