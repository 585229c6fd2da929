#include "emdstego/image.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <optional>
#include <string>

#include "emdstego/error.hpp"

namespace emdstego {

GrayImage::GrayImage(int w, int h, std::vector<std::uint8_t> px)
    : width(w), height(h), pixels(std::move(px)) {
  if (w <= 0 || h <= 0) {
    throw Error(Errc::InvalidParameter, "image dimensions must be positive");
  }
  if (pixels.size() != static_cast<std::size_t>(w) * static_cast<std::size_t>(h)) {
    throw Error(Errc::InvalidParameter, "pixel count does not match width x height");
  }
}

GrayImage GrayImage::filled(int w, int h, std::uint8_t value) {
  return GrayImage(w, h, std::vector<std::uint8_t>(static_cast<std::size_t>(w) * h, value));
}

namespace {

class HeaderReader {
 public:
  explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  // Skips whitespace and '#' comments, then reads one token.
  std::optional<std::string> token() {
    skip_space();
    std::string out;
    while (pos_ < bytes_.size() && !std::isspace(bytes_[pos_]) && bytes_[pos_] != '#') {
      out.push_back(static_cast<char>(bytes_[pos_++]));
    }
    if (out.empty()) return std::nullopt;
    return out;
  }

  std::size_t pos() const { return pos_; }
  void advance() { ++pos_; }
  bool at_space() const { return pos_ < bytes_.size() && std::isspace(bytes_[pos_]); }

 private:
  void skip_space() {
    while (pos_ < bytes_.size()) {
      if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

long parse_positive(const std::optional<std::string>& tok, const char* what) {
  if (!tok || tok->empty() ||
      !std::all_of(tok->begin(), tok->end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
      tok->size() > 9) {
    throw Error(Errc::MalformedHeader, std::string("missing or invalid ") + what);
  }
  long v = std::stol(*tok);
  if (v <= 0) throw Error(Errc::MalformedHeader, std::string(what) + " must be positive");
  return v;
}

}  // namespace

GrayImage load_pgm(std::span<const std::uint8_t> bytes) {
  HeaderReader reader(bytes);
  auto magic = reader.token();
  if (!magic || *magic != "P5") throw Error(Errc::MalformedHeader, "expected P5 magic");
  const long width = parse_positive(reader.token(), "width");
  const long height = parse_positive(reader.token(), "height");
  const long maxval = parse_positive(reader.token(), "maxval");
  if (maxval != 255) throw Error(Errc::UnsupportedMaxval, "maxval " + std::to_string(maxval));
  if (!reader.at_space()) throw Error(Errc::MalformedHeader, "no whitespace after maxval");
  reader.advance();

  const std::size_t need = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  const std::size_t have = bytes.size() - reader.pos();
  if (have < need) {
    throw Error(Errc::TruncatedPayload,
                "expected " + std::to_string(need) + " raster bytes, got " + std::to_string(have));
  }
  auto begin = bytes.begin() + static_cast<std::ptrdiff_t>(reader.pos());
  return GrayImage(static_cast<int>(width), static_cast<int>(height),
                   std::vector<std::uint8_t>(begin, begin + static_cast<std::ptrdiff_t>(need)));
}

std::vector<std::uint8_t> save_pgm(const GrayImage& img) {
  const std::string header =
      "P5\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), img.pixels.begin(), img.pixels.end());
  return out;
}

GrayImage read_pgm_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return load_pgm(bytes);
}

void write_pgm_file(const std::filesystem::path& path, const GrayImage& img) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  const auto bytes = save_pgm(img);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("short write to " + path.string());
}

Partition partition_groups(const GrayImage& img, int n) {
  if (n < 1) throw Error(Errc::InvalidParameter, "group size must be >= 1");
  Partition part;
  const std::size_t group_count = img.pixels.size() / static_cast<std::size_t>(n);
  part.groups.reserve(group_count);
  std::size_t i = 0;
  for (std::size_t g = 0; g < group_count; ++g) {
    part.groups.emplace_back(img.pixels.begin() + static_cast<std::ptrdiff_t>(i),
                             img.pixels.begin() + static_cast<std::ptrdiff_t>(i + n));
    i += static_cast<std::size_t>(n);
  }
  part.tail.assign(img.pixels.begin() + static_cast<std::ptrdiff_t>(i), img.pixels.end());
  return part;
}

GrayImage clamp_for_scheme(const GrayImage& img, int z) {
  if (z < 0 || z > 127) throw Error(Errc::InvalidParameter, "clamp margin must be in [0, 127]");
  GrayImage out = img;
  const auto lo = static_cast<std::uint8_t>(z);
  const auto hi = static_cast<std::uint8_t>(255 - z);
  for (auto& p : out.pixels) p = std::clamp(p, lo, hi);
  return out;
}

}  // namespace emdstego
