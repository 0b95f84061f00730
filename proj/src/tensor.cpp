#include "dmm/tensor.hpp"

#include <cmath>
#include <cstring>
#include <sstream>

namespace dmm {

void fail(const std::string& msg) { throw NumericError("dmm: " + msg); }

std::size_t shape_numel(const Shape& shape) {
  std::size_t n = 1;
  for (std::size_t e : shape) n *= e;
  return n;
}

std::string shape_str(const Shape& shape) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i) os << 'x';
    os << shape[i];
  }
  os << ']';
  return os.str();
}

std::vector<std::size_t> row_major_strides(const Shape& shape) {
  std::vector<std::size_t> strides(shape.size(), 1);
  for (std::size_t d = shape.size(); d-- > 1;)
    strides[d - 1] = strides[d] * shape[d];
  return strides;
}

Tensor::Tensor(Shape shape, std::vector<double> values)
    : shape_(std::move(shape)), data_(std::move(values)) {
  check(shape_numel(shape_) == data_.size(),
        "tensor: " + std::to_string(data_.size()) + " values do not fill shape " +
            shape_str(shape_));
}

Tensor Tensor::full(Shape shape, double value) {
  Tensor t(std::move(shape));
  for (double& v : t.data_) v = value;
  return t;
}

std::size_t Tensor::extent(std::size_t axis) const {
  check(axis < shape_.size(), "tensor: axis " + std::to_string(axis) +
                                  " out of range for " + shape_str(shape_));
  return shape_[axis];
}

std::size_t Tensor::offset(std::initializer_list<std::size_t> idx) const {
  check(idx.size() == shape_.size(), "tensor: index rank mismatch");
  std::size_t off = 0;
  std::size_t d = 0;
  for (std::size_t i : idx) {
    check(i < shape_[d], "tensor: index out of range");
    off = off * shape_[d] + i;
    ++d;
  }
  return off;
}

bool Tensor::all_finite() const {
  for (double v : data_)
    if (!std::isfinite(v)) return false;
  return true;
}

bool same_shape(const Tensor& a, const Tensor& b) { return a.shape() == b.shape(); }

void ensure_finite(const Tensor& t, const char* op) {
  if (!t.all_finite())
    fail(std::string(op) + ": non-finite value in result " + shape_str(t.shape()));
}

bool bitwise_equal(const Tensor& a, const Tensor& b) {
  if (a.shape() != b.shape()) return false;
  return std::memcmp(a.data(), b.data(), a.numel() * sizeof(double)) == 0;
}

double max_abs_diff(const Tensor& a, const Tensor& b) {
  check(same_shape(a, b), "max_abs_diff: shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.numel(); ++i)
    m = std::max(m, std::fabs(a[i] - b[i]));
  return m;
}

}  // namespace dmm
