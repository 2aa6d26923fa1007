#include "scalemark/image_io.hpp"

#include <opencv2/imgcodecs.hpp>
#include <opencv2/imgproc.hpp>

#include <stdexcept>
#include <vector>

namespace scalemark {

namespace {

cv::Mat tensor_to_mat8(const torch::Tensor& image) {
  auto img = image.detach().to(torch::kFloat32).contiguous();
  if (img.dim() != 3 || (img.size(0) != 3 && img.size(0) != 1))
    throw std::invalid_argument("expected [3,H,W] or [1,H,W] tensor");
  if (img.size(0) == 1) img = img.repeat({3, 1, 1});
  const int h = static_cast<int>(img.size(1));
  const int w = static_cast<int>(img.size(2));
  auto hwc = img.permute({1, 2, 0}).mul(255.0).round().clamp(0, 255).to(torch::kUInt8).contiguous();
  cv::Mat rgb(h, w, CV_8UC3, hwc.data_ptr<uint8_t>());
  cv::Mat bgr;
  cv::cvtColor(rgb, bgr, cv::COLOR_RGB2BGR);
  return bgr;
}

torch::Tensor mat8_to_tensor(const cv::Mat& bgr) {
  cv::Mat rgb;
  cv::cvtColor(bgr, rgb, cv::COLOR_BGR2RGB);
  auto t = torch::from_blob(rgb.data, {rgb.rows, rgb.cols, 3}, torch::kUInt8).clone();
  return t.permute({2, 0, 1}).to(torch::kFloat32).div(255.0);
}

} // namespace

torch::Tensor load_image(const std::filesystem::path& path) {
  cv::Mat bgr = cv::imread(path.string(), cv::IMREAD_COLOR);
  if (bgr.empty())
    throw std::runtime_error("cannot read image: " + path.string());
  return mat8_to_tensor(bgr);
}

void save_image(const torch::Tensor& image, const std::filesystem::path& path) {
  auto bgr = tensor_to_mat8(image);
  if (!path.parent_path().empty())
    std::filesystem::create_directories(path.parent_path());
  if (!cv::imwrite(path.string(), bgr))
    throw std::runtime_error("cannot write image: " + path.string());
}

torch::Tensor jpeg_roundtrip(const torch::Tensor& image, int quality) {
  auto bgr = tensor_to_mat8(image);
  std::vector<uchar> buf;
  if (!cv::imencode(".jpg", bgr, buf, {cv::IMWRITE_JPEG_QUALITY, quality}))
    throw std::runtime_error("jpeg encode failed");
  cv::Mat decoded = cv::imdecode(buf, cv::IMREAD_COLOR);
  if (decoded.empty()) throw std::runtime_error("jpeg decode failed");
  return mat8_to_tensor(decoded);
}

} // namespace scalemark
