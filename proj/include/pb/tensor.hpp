#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace pb {

// Dense row-major tensor of 64-bit reals. Images are tensors of shape
// (channels=3, height, width) with pixel values in [0, 255]; attacks need
// fractional pixel values, so images are never stored as integers.
class Tensor {
public:
    std::vector<std::size_t> shape;
    std::vector<double> data;

    Tensor() = default;

    explicit Tensor(std::vector<std::size_t> shape_);
    Tensor(std::vector<std::size_t> shape_, std::vector<double> data_);

    static Tensor zeros_like(const Tensor& t) { return Tensor(t.shape); }

    std::size_t numel() const { return data.size(); }
    std::size_t rank() const { return shape.size(); }

    double& operator[](std::size_t i) { return data[i]; }
    double operator[](std::size_t i) const { return data[i]; }

    double& at2(std::size_t i, std::size_t j) { return data[i * shape[1] + j]; }
    double at2(std::size_t i, std::size_t j) const { return data[i * shape[1] + j]; }

    double& at3(std::size_t c, std::size_t i, std::size_t j) {
        return data[(c * shape[1] + i) * shape[2] + j];
    }
    double at3(std::size_t c, std::size_t i, std::size_t j) const {
        return data[(c * shape[1] + i) * shape[2] + j];
    }

    bool same_shape(const Tensor& o) const { return shape == o.shape; }

    bool all_finite() const;
    // Throws std::invalid_argument naming `where` if any entry is NaN/Inf.
    void check_finite(const char* where) const;

    Tensor& operator+=(const Tensor& o);
    Tensor& operator-=(const Tensor& o);
    Tensor& operator*=(double s);

    friend Tensor operator+(Tensor a, const Tensor& b) { a += b; return a; }
    friend Tensor operator-(Tensor a, const Tensor& b) { a -= b; return a; }
    friend Tensor operator*(Tensor a, double s) { a *= s; return a; }
    friend Tensor operator*(double s, Tensor a) { a *= s; return a; }

    double max_abs() const;
    double norm1() const;
    double norm2() const;
    double dot(const Tensor& o) const;
    double sum() const;
};

// Images are plain tensors; the (3, H, W) and [0, 255] contracts are checked
// where operations require them.
using Image = Tensor;

std::size_t shape_numel(const std::vector<std::size_t>& shape);
std::string shape_str(const std::vector<std::size_t>& shape);

// Requires rank 3 with 3 leading channels.
void check_image_shape(const Tensor& x, const char* where);

}  // namespace pb
