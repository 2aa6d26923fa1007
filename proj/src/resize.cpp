#include "scalemark/resize.hpp"

#include <stdexcept>

namespace scalemark {

namespace {

// Source coordinates for one axis under the corner-aligned convention.
// Returned as (lo index, hi index, hi weight) of length `out`.
std::tuple<torch::Tensor, torch::Tensor, torch::Tensor>
axis_coords(int64_t in, int64_t out, const torch::TensorOptions& opts) {
  auto idx = torch::arange(out, opts);
  torch::Tensor coord;
  if (out == 1) {
    coord = torch::full({1}, static_cast<double>(in - 1) / 2.0, opts);
  } else {
    coord = idx * (static_cast<double>(in - 1) / static_cast<double>(out - 1));
  }
  auto lo = coord.floor().clamp(0, in - 1);
  auto hi = (lo + 1).clamp(0, in - 1);
  auto w_hi = coord - lo;
  return {lo.to(torch::kLong), hi.to(torch::kLong), w_hi};
}

// Linear interpolation along `dim`.
torch::Tensor interp_axis(const torch::Tensor& x, int64_t dim, int64_t out) {
  const int64_t in = x.size(dim);
  if (in == out) return x;
  auto opts = torch::TensorOptions().dtype(x.dtype()).device(x.device());
  auto [lo, hi, w_hi] = axis_coords(in, out, opts);

  auto x_lo = x.index_select(dim, lo);
  auto x_hi = x.index_select(dim, hi);

  // Broadcast the weight over every other axis.
  std::vector<int64_t> shape(x.dim(), 1);
  shape[dim < 0 ? dim + x.dim() : dim] = out;
  auto w = w_hi.reshape(shape);
  return x_lo + (x_hi - x_lo) * w;
}

} // namespace

torch::Tensor bilinear_resize(const torch::Tensor& x, int64_t out_h, int64_t out_w) {
  if (x.dim() < 2) throw std::invalid_argument("bilinear_resize: need at least 2 dims");
  if (out_h < 1 || out_w < 1) throw std::invalid_argument("bilinear_resize: target must be >= 1");
  if (x.size(-2) == out_h && x.size(-1) == out_w) return x;
  auto y = interp_axis(x, x.dim() - 2, out_h);
  return interp_axis(y, y.dim() - 1, out_w);
}

} // namespace scalemark
