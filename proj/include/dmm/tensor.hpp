#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dmm {

using Shape = std::vector<std::size_t>;

// Thrown when an operation produces NaN/Inf or is fed invalid arguments.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

[[noreturn]] void fail(const std::string& msg);

inline void check(bool cond, const std::string& msg) {
  if (!cond) fail(msg);
}

std::size_t shape_numel(const Shape& shape);
std::string shape_str(const Shape& shape);
std::vector<std::size_t> row_major_strides(const Shape& shape);

// Dense row-major tensor of doubles. The autodiff tape runs at 64-bit
// precision; 32-bit storage exists in the serializer and the benchmark
// kernels, which are templated on the scalar type.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(Shape shape)
      : shape_(std::move(shape)), data_(shape_numel(shape_), 0.0) {}
  Tensor(Shape shape, std::vector<double> values);

  static Tensor zeros(Shape shape) { return Tensor(std::move(shape)); }
  static Tensor ones(Shape shape) { return full(std::move(shape), 1.0); }
  static Tensor full(Shape shape, double value);
  static Tensor scalar(double value) { return Tensor({1}, {value}); }

  const Shape& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  std::size_t numel() const { return data_.size(); }
  std::size_t extent(std::size_t axis) const;

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  std::vector<double>& values() { return data_; }
  const std::vector<double>& values() const { return data_; }

  double& operator[](std::size_t i) { return data_[i]; }
  double operator[](std::size_t i) const { return data_[i]; }

  std::size_t offset(std::initializer_list<std::size_t> idx) const;
  double& at(std::initializer_list<std::size_t> idx) { return data_[offset(idx)]; }
  double at(std::initializer_list<std::size_t> idx) const { return data_[offset(idx)]; }

  bool all_finite() const;

  // Gradient slot filled by Graph::backward for requires_grad leaves.
  bool requires_grad = false;
  std::optional<std::vector<double>> grad;

 private:
  Shape shape_;
  std::vector<double> data_;
};

bool same_shape(const Tensor& a, const Tensor& b);

// Every op calls this on its output; non-finite values are surfaced as
// errors instead of flowing downstream.
void ensure_finite(const Tensor& t, const char* op);

bool bitwise_equal(const Tensor& a, const Tensor& b);
double max_abs_diff(const Tensor& a, const Tensor& b);

}  // namespace dmm
