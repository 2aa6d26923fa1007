#pragma once

#include <torch/torch.h>

namespace scalemark {

/// Bilinear resize of a [..., H, W] tensor to (out_h, out_w).
///
/// Sampling is corner-aligned: output index i maps to input coordinate
/// i * (in - 1) / (out - 1), so the four corners of the grids coincide and
/// resizing to the same size is an exact identity. A singleton output axis
/// samples the center of the input axis, (in - 1) / 2.
///
/// This is the single interpolation used everywhere a map changes
/// resolution (pyramid up/downsampling, pairing, fusion, aggregation).
/// Differentiable w.r.t. the input.
torch::Tensor bilinear_resize(const torch::Tensor& x, int64_t out_h, int64_t out_w);

} // namespace scalemark
