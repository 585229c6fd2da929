#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace emdstego {

/// 8-bit grayscale raster, row-major.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;

  GrayImage() = default;
  GrayImage(int w, int h, std::vector<std::uint8_t> px);

  static GrayImage filled(int w, int h, std::uint8_t value);

  std::size_t size() const noexcept { return pixels.size(); }
  friend bool operator==(const GrayImage&, const GrayImage&) = default;
};

/// Pixel values of one embedding unit, widened to int.
using PixelGroup = std::vector<int>;

struct Partition {
  std::vector<PixelGroup> groups;
  std::vector<int> tail;
};

GrayImage load_pgm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> save_pgm(const GrayImage& img);

GrayImage read_pgm_file(const std::filesystem::path& path);
void write_pgm_file(const std::filesystem::path& path, const GrayImage& img);

/// Consecutive row-major runs of n pixels; the remainder goes to the tail.
Partition partition_groups(const GrayImage& img, int n);

/// Maps every pixel into [z, 255 - z].
GrayImage clamp_for_scheme(const GrayImage& img, int z);

}  // namespace emdstego
