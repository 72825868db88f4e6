#pragma once

#include "pb/tensor.hpp"

namespace pb {

// size x size kernel with entries proportional to exp(-(di^2+dj^2)/(2 sigma^2))
// about the center, normalized to sum 1. size must be odd, sigma > 0.
Tensor gaussian_kernel(int size, double sigma);

// Same-size correlation of a 2-D field with an odd k x k kernel, zero padding
// outside the grid. Linear in `field`. Requires k <= 2*min(H,W)+1.
Tensor convolve2d_same(const Tensor& field, const Tensor& kernel);

// Adjoint of convolve2d_same in its first argument (correlation with the
// point-reflected kernel, same zero padding):
//   <convolve2d_same(a,k), b> == <a, convolve2d_adjoint(b,k)>
Tensor convolve2d_adjoint(const Tensor& field, const Tensor& kernel);

// Bilinear interpolation of channel c at (row u, col v). Out-of-range
// coordinates are clamped to the image rectangle; integer in-range
// coordinates return the stored pixel exactly.
double bilinear_sample(const Image& img, double u, double v, std::size_t c);

// Partial derivatives of bilinear_sample with respect to u and v. Zero where
// the coordinate is clamped; right-sided at the interpolation kinks.
void bilinear_sample_grad(const Image& img, double u, double v, std::size_t c,
                          double& d_du, double& d_dv);

// Orthonormal 2-D DCT-II on an 8x8 block and its inverse. Energy preserving;
// idct2_block(dct2_block(b)) == b to machine precision.
Tensor dct2_block(const Tensor& block);
Tensor idct2_block(const Tensor& coeffs);

}  // namespace pb
