#include "pb/tensor.hpp"

#include <cmath>
#include <sstream>

namespace pb {

std::size_t shape_numel(const std::vector<std::size_t>& shape) {
    std::size_t n = 1;
    for (std::size_t d : shape) {
        if (d == 0) throw std::invalid_argument("Tensor: zero extent in shape " + shape_str(shape));
        n *= d;
    }
    return n;
}

std::string shape_str(const std::vector<std::size_t>& shape) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < shape.size(); ++i) os << (i ? "," : "") << shape[i];
    os << ")";
    return os.str();
}

Tensor::Tensor(std::vector<std::size_t> shape_) : shape(std::move(shape_)) {
    data.assign(shape_numel(shape), 0.0);
}

Tensor::Tensor(std::vector<std::size_t> shape_, std::vector<double> data_)
    : shape(std::move(shape_)), data(std::move(data_)) {
    if (shape_numel(shape) != data.size())
        throw std::invalid_argument("Tensor: shape " + shape_str(shape) + " does not match data length " +
                                    std::to_string(data.size()));
}

bool Tensor::all_finite() const {
    for (double v : data)
        if (!std::isfinite(v)) return false;
    return true;
}

void Tensor::check_finite(const char* where) const {
    if (!all_finite()) throw std::invalid_argument(std::string(where) + ": non-finite tensor entry");
}

Tensor& Tensor::operator+=(const Tensor& o) {
    if (!same_shape(o)) throw std::invalid_argument("Tensor+=: shape mismatch");
    for (std::size_t i = 0; i < data.size(); ++i) data[i] += o.data[i];
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
    if (!same_shape(o)) throw std::invalid_argument("Tensor-=: shape mismatch");
    for (std::size_t i = 0; i < data.size(); ++i) data[i] -= o.data[i];
    return *this;
}

Tensor& Tensor::operator*=(double s) {
    for (double& v : data) v *= s;
    return *this;
}

double Tensor::max_abs() const {
    double m = 0.0;
    for (double v : data) m = std::max(m, std::fabs(v));
    return m;
}

double Tensor::norm1() const {
    double s = 0.0;
    for (double v : data) s += std::fabs(v);
    return s;
}

double Tensor::norm2() const {
    double s = 0.0;
    for (double v : data) s += v * v;
    return std::sqrt(s);
}

double Tensor::dot(const Tensor& o) const {
    if (!same_shape(o)) throw std::invalid_argument("Tensor::dot: shape mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) s += data[i] * o.data[i];
    return s;
}

double Tensor::sum() const {
    double s = 0.0;
    for (double v : data) s += v;
    return s;
}

void check_image_shape(const Tensor& x, const char* where) {
    if (x.rank() != 3 || x.shape[0] != 3)
        throw std::invalid_argument(std::string(where) + ": expected image shape (3,H,W), got " +
                                    shape_str(x.shape));
}

}  // namespace pb
