#pragma once

#include <torch/torch.h>

#include <filesystem>
#include <string>

namespace scalemark {

/// Load an 8-bit image file as a float tensor [3, H, W] in [0, 1] (RGB).
/// Throws std::runtime_error when the file is missing or undecodable.
torch::Tensor load_image(const std::filesystem::path& path);

/// Write a [3, H, W] (or [1, H, W]) tensor in [0, 1] as an 8-bit PNG.
void save_image(const torch::Tensor& image, const std::filesystem::path& path);

/// Round-trip a [3, H, W] tensor through the baseline JPEG codec at the
/// given quality. Values are quantized to 8 bits on the way in.
torch::Tensor jpeg_roundtrip(const torch::Tensor& image, int quality);

} // namespace scalemark
