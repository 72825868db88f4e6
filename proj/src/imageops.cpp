#include "pb/imageops.hpp"

#include <algorithm>
#include <cmath>

namespace pb {

Tensor gaussian_kernel(int size, double sigma) {
    if (size <= 0 || size % 2 == 0)
        throw std::invalid_argument("gaussian_kernel: size must be odd and positive, got " +
                                    std::to_string(size));
    if (!(sigma > 0.0)) throw std::invalid_argument("gaussian_kernel: sigma must be positive");

    const int r = size / 2;
    Tensor k({static_cast<std::size_t>(size), static_cast<std::size_t>(size)});
    double sum = 0.0;
    for (int i = 0; i < size; ++i) {
        for (int j = 0; j < size; ++j) {
            const double di = i - r, dj = j - r;
            const double v = std::exp(-(di * di + dj * dj) / (2.0 * sigma * sigma));
            k.at2(i, j) = v;
            sum += v;
        }
    }
    for (double& v : k.data) v /= sum;
    return k;
}

static void check_kernel(const Tensor& kernel, std::size_t h, std::size_t w, const char* where) {
    if (kernel.rank() != 2 || kernel.shape[0] != kernel.shape[1])
        throw std::invalid_argument(std::string(where) + ": kernel must be square, got " +
                                    shape_str(kernel.shape));
    const std::size_t k = kernel.shape[0];
    if (k % 2 == 0) throw std::invalid_argument(std::string(where) + ": kernel size must be odd");
    if (k > 2 * std::min(h, w) + 1)
        throw std::invalid_argument(std::string(where) + ": kernel larger than 2*min(H,W)+1");
}

Tensor convolve2d_same(const Tensor& field, const Tensor& kernel) {
    if (field.rank() != 2) throw std::invalid_argument("convolve2d_same: field must be 2-D");
    const std::size_t h = field.shape[0], w = field.shape[1];
    check_kernel(kernel, h, w, "convolve2d_same");
    const int k = static_cast<int>(kernel.shape[0]);
    const int r = k / 2;

    Tensor out({h, w});
    for (int i = 0; i < static_cast<int>(h); ++i) {
        for (int j = 0; j < static_cast<int>(w); ++j) {
            double s = 0.0;
            const int a0 = std::max(0, r - i), a1 = std::min(k, static_cast<int>(h) + r - i);
            const int b0 = std::max(0, r - j), b1 = std::min(k, static_cast<int>(w) + r - j);
            for (int a = a0; a < a1; ++a) {
                const double* frow = &field.data[(i + a - r) * w];
                const double* krow = &kernel.data[a * k];
                for (int b = b0; b < b1; ++b) s += krow[b] * frow[j + b - r];
            }
            out.at2(i, j) = s;
        }
    }
    return out;
}

Tensor convolve2d_adjoint(const Tensor& field, const Tensor& kernel) {
    if (field.rank() != 2) throw std::invalid_argument("convolve2d_adjoint: field must be 2-D");
    const std::size_t h = field.shape[0], w = field.shape[1];
    check_kernel(kernel, h, w, "convolve2d_adjoint");
    const int k = static_cast<int>(kernel.shape[0]);

    // correlation with the point-reflected kernel
    Tensor flipped({static_cast<std::size_t>(k), static_cast<std::size_t>(k)});
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) flipped.at2(a, b) = kernel.at2(k - 1 - a, k - 1 - b);
    return convolve2d_same(field, flipped);
}

double bilinear_sample(const Image& img, double u, double v, std::size_t c) {
    check_image_shape(img, "bilinear_sample");
    const std::size_t h = img.shape[1], w = img.shape[2];
    const double uc = std::clamp(u, 0.0, static_cast<double>(h - 1));
    const double vc = std::clamp(v, 0.0, static_cast<double>(w - 1));
    const std::size_t u0 = static_cast<std::size_t>(uc);
    const std::size_t v0 = static_cast<std::size_t>(vc);
    const std::size_t u1 = std::min(u0 + 1, h - 1);
    const std::size_t v1 = std::min(v0 + 1, w - 1);
    const double au = uc - static_cast<double>(u0);
    const double av = vc - static_cast<double>(v0);
    const double top = (1.0 - av) * img.at3(c, u0, v0) + av * img.at3(c, u0, v1);
    const double bot = (1.0 - av) * img.at3(c, u1, v0) + av * img.at3(c, u1, v1);
    return (1.0 - au) * top + au * bot;
}

void bilinear_sample_grad(const Image& img, double u, double v, std::size_t c,
                          double& d_du, double& d_dv) {
    check_image_shape(img, "bilinear_sample_grad");
    const std::size_t h = img.shape[1], w = img.shape[2];
    const double uc = std::clamp(u, 0.0, static_cast<double>(h - 1));
    const double vc = std::clamp(v, 0.0, static_cast<double>(w - 1));
    const std::size_t u0 = static_cast<std::size_t>(uc);
    const std::size_t v0 = static_cast<std::size_t>(vc);
    const std::size_t u1 = std::min(u0 + 1, h - 1);
    const std::size_t v1 = std::min(v0 + 1, w - 1);
    const double au = uc - static_cast<double>(u0);
    const double av = vc - static_cast<double>(v0);

    const bool u_clamped = (u < 0.0) || (u > static_cast<double>(h - 1));
    const bool v_clamped = (v < 0.0) || (v > static_cast<double>(w - 1));

    d_du = u_clamped ? 0.0
                     : (1.0 - av) * (img.at3(c, u1, v0) - img.at3(c, u0, v0)) +
                           av * (img.at3(c, u1, v1) - img.at3(c, u0, v1));
    d_dv = v_clamped ? 0.0
                     : (1.0 - au) * (img.at3(c, u0, v1) - img.at3(c, u0, v0)) +
                           au * (img.at3(c, u1, v1) - img.at3(c, u1, v0));
}

namespace {

// orthonormal DCT-II basis: M(u,x) = alpha(u) cos((2x+1) u pi / 16)
struct DctBasis {
    double m[8][8];
    DctBasis() {
        for (int u = 0; u < 8; ++u) {
            const double alpha = (u == 0) ? std::sqrt(1.0 / 8.0) : std::sqrt(2.0 / 8.0);
            for (int x = 0; x < 8; ++x)
                m[u][x] = alpha * std::cos((2.0 * x + 1.0) * u * M_PI / 16.0);
        }
    }
};

const DctBasis& basis() {
    static const DctBasis b;
    return b;
}

void check_block(const Tensor& t, const char* where) {
    if (t.rank() != 2 || t.shape[0] != 8 || t.shape[1] != 8)
        throw std::invalid_argument(std::string(where) + ": expected 8x8 block, got " +
                                    shape_str(t.shape));
}

}  // namespace

Tensor dct2_block(const Tensor& block) {
    check_block(block, "dct2_block");
    const auto& M = basis().m;
    double tmp[8][8];
    // tmp = M * block
    for (int u = 0; u < 8; ++u)
        for (int y = 0; y < 8; ++y) {
            double s = 0.0;
            for (int x = 0; x < 8; ++x) s += M[u][x] * block.at2(x, y);
            tmp[u][y] = s;
        }
    Tensor out({8, 8});
    // out = tmp * M^T
    for (int u = 0; u < 8; ++u)
        for (int v = 0; v < 8; ++v) {
            double s = 0.0;
            for (int y = 0; y < 8; ++y) s += tmp[u][y] * M[v][y];
            out.at2(u, v) = s;
        }
    return out;
}

Tensor idct2_block(const Tensor& coeffs) {
    check_block(coeffs, "idct2_block");
    const auto& M = basis().m;
    double tmp[8][8];
    // tmp = M^T * coeffs
    for (int x = 0; x < 8; ++x)
        for (int v = 0; v < 8; ++v) {
            double s = 0.0;
            for (int u = 0; u < 8; ++u) s += M[u][x] * coeffs.at2(u, v);
            tmp[x][v] = s;
        }
    Tensor out({8, 8});
    // out = tmp * M
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            double s = 0.0;
            for (int v = 0; v < 8; ++v) s += tmp[x][v] * M[v][y];
            out.at2(x, y) = s;
        }
    return out;
}

}  // namespace pb
