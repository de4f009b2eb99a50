#pragma once

// Grayscale image ingestion (Netpbm P2/P5) and amplitude encoding.

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qpie/error.hpp"
#include "qpie/real_state.hpp"

namespace qpie {

class GrayImage {
 public:
  /// `pixels` is row-major with rows * cols entries, each <= maxval.
  GrayImage(std::size_t rows, std::size_t cols, std::vector<std::uint32_t> pixels, std::uint32_t maxval = 65535)
      : rows_(rows), cols_(cols), maxval_(maxval), pixels_(std::move(pixels)) {
    if (rows_ == 0 || cols_ == 0) throw Error(ErrorCode::MalformedHeader, "image dimensions must be positive");
    if (maxval_ == 0 || maxval_ > 65535) {
      throw Error(ErrorCode::MaxvalOutOfRange, "maxval " + std::to_string(maxval_) + " not in [1, 65535]");
    }
    if (pixels_.size() != rows_ * cols_) {
      throw Error(ErrorCode::TruncatedData, "expected " + std::to_string(rows_ * cols_) + " pixels, got " +
                                                std::to_string(pixels_.size()));
    }
    for (std::uint32_t p : pixels_) {
      if (p > maxval_) {
        throw Error(ErrorCode::PixelExceedsMaxval,
                    "pixel " + std::to_string(p) + " exceeds maxval " + std::to_string(maxval_));
      }
    }
  }

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] std::uint32_t maxval() const noexcept { return maxval_; }
  [[nodiscard]] std::span<const std::uint32_t> pixels() const noexcept { return pixels_; }

  /// Zero-based (row, col).
  [[nodiscard]] std::uint32_t at(std::size_t row, std::size_t col) const { return pixels_[row * cols_ + col]; }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::uint32_t maxval_;
  std::vector<std::uint32_t> pixels_;
};

namespace detail {

class PgmReader {
 public:
  explicit PgmReader(std::string_view bytes) : bytes_(bytes) {}

  // Skips whitespace and '#' comments (comment runs to end of line).
  void skip_separators() {
    while (pos_ < bytes_.size()) {
      const char ch = bytes_[pos_];
      if (ch == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::uint64_t read_uint(ErrorCode on_missing, const char* what) {
    skip_separators();
    if (pos_ >= bytes_.size()) throw Error(ErrorCode::TruncatedData, std::string("missing ") + what);
    if (!std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
      throw Error(on_missing, std::string("expected decimal ") + what);
    }
    std::uint64_t value = 0;
    while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(bytes_[pos_] - '0');
      if (value > 0xFFFFFFFFull) throw Error(on_missing, std::string(what) + " is too large");
      ++pos_;
    }
    return value;
  }

  std::size_t& pos() noexcept { return pos_; }
  [[nodiscard]] std::string_view bytes() const noexcept { return bytes_; }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses an ASCII (P2) or binary (P5) PGM. 16-bit binary samples are big-endian.
[[nodiscard]] inline GrayImage load_pgm(std::string_view bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
    throw Error(ErrorCode::BadMagic, "not a P2/P5 grayscale Netpbm file");
  }
  const bool binary = bytes[1] == '5';
  detail::PgmReader in(bytes.substr(2));
  if (!in.bytes().empty() && !std::isspace(static_cast<unsigned char>(in.bytes()[0])) && in.bytes()[0] != '#') {
    throw Error(ErrorCode::BadMagic, "magic number not followed by whitespace");
  }

  const std::uint64_t width = in.read_uint(ErrorCode::MalformedHeader, "width");
  const std::uint64_t height = in.read_uint(ErrorCode::MalformedHeader, "height");
  const std::uint64_t maxval = in.read_uint(ErrorCode::MalformedHeader, "maxval");
  if (width == 0 || height == 0) throw Error(ErrorCode::MalformedHeader, "width and height must be positive");
  if (maxval == 0 || maxval > 65535) {
    throw Error(ErrorCode::MaxvalOutOfRange, "maxval " + std::to_string(maxval) + " not in [1, 65535]");
  }

  const std::size_t count = static_cast<std::size_t>(width * height);
  std::vector<std::uint32_t> pixels;
  pixels.reserve(count);

  if (binary) {
    // Exactly one whitespace byte separates maxval from the raster.
    std::size_t& pos = in.pos();
    if (pos >= in.bytes().size() || !std::isspace(static_cast<unsigned char>(in.bytes()[pos]))) {
      throw Error(ErrorCode::TruncatedData, "missing raster after header");
    }
    ++pos;
    const std::size_t sample_bytes = maxval < 256 ? 1 : 2;
    if (in.bytes().size() - pos < count * sample_bytes) {
      throw Error(ErrorCode::TruncatedData, "raster has " + std::to_string(in.bytes().size() - pos) +
                                                " bytes, need " + std::to_string(count * sample_bytes));
    }
    const auto* raw = reinterpret_cast<const unsigned char*>(in.bytes().data() + pos);
    for (std::size_t k = 0; k < count; ++k) {
      const std::uint32_t v = sample_bytes == 1 ? raw[k] : (std::uint32_t{raw[2 * k]} << 8) | raw[2 * k + 1];
      pixels.push_back(v);
    }
  } else {
    for (std::size_t k = 0; k < count; ++k) {
      const std::uint64_t v = in.read_uint(ErrorCode::TruncatedData, "pixel value");
      if (v > maxval) {
        throw Error(ErrorCode::PixelExceedsMaxval,
                    "pixel " + std::to_string(v) + " exceeds maxval " + std::to_string(maxval));
      }
      pixels.push_back(static_cast<std::uint32_t>(v));
    }
  }
  return GrayImage(static_cast<std::size_t>(height), static_cast<std::size_t>(width), std::move(pixels),
                   static_cast<std::uint32_t>(maxval));
}

/// Column-major flattening: f(1,1), f(2,1), ..., f(M,1), f(1,2), ..., f(M,L).
[[nodiscard]] inline std::vector<double> unfold(const GrayImage& image) {
  std::vector<double> v;
  v.reserve(image.rows() * image.cols());
  for (std::size_t j = 0; j < image.cols(); ++j) {
    for (std::size_t i = 0; i < image.rows(); ++i) v.push_back(static_cast<double>(image.at(i, j)));
  }
  return v;
}

/// Inverse of unfold for a rows x cols grid.
[[nodiscard]] inline GrayImage fold(std::span<const double> values, std::size_t rows, std::size_t cols,
                                    std::uint32_t maxval = 65535) {
  if (values.size() != rows * cols) throw Error(ErrorCode::DimensionMismatch, "value count does not match grid");
  std::vector<std::uint32_t> pixels(rows * cols);
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) pixels[i * cols + j] = static_cast<std::uint32_t>(values[j * rows + i]);
  }
  return GrayImage(rows, cols, std::move(pixels), maxval);
}

/// Appends zeros up to the next power of two, with a minimum length of 2.
[[nodiscard]] inline std::vector<double> pad_pow2(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorCode::EmptyInput, "cannot pad an empty sequence");
  const std::size_t target = std::max<std::size_t>(2, std::bit_ceil(values.size()));
  std::vector<double> out(values.begin(), values.end());
  out.resize(target, 0.0);
  return out;
}

[[nodiscard]] inline RealState encode(const GrayImage& image) {
  const std::vector<double> padded = pad_pow2(unfold(image));
  try {
    return normalize(padded);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::AllZeroInput) throw Error(ErrorCode::AllZeroImage, "every pixel is zero");
    throw;
  }
}

}  // namespace qpie
