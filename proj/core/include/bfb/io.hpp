#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "bfb/types.hpp"

namespace bfb::io {

// "BFB1" container: 4 magic bytes, u64 rows, u64 cols (little-endian), then
// rows*cols little-endian f64 entries in row-major order. Vectors are N x 1.
std::string encode_bfb1(const Matrix& m);
Matrix decode_bfb1(std::string_view bytes);

void write_bfb1(const std::filesystem::path& path, const Matrix& m);
void write_bfb1(const std::filesystem::path& path, const Vector& v);
Matrix read_bfb1(const std::filesystem::path& path);
// Reads an N x 1 (or 1 x N) container as a vector.
Vector read_bfb1_vector(const std::filesystem::path& path);

// Comma-separated rows, 17 significant digits; no header.
void write_csv(const std::filesystem::path& path, const Matrix& m);
Matrix read_csv(const std::filesystem::path& path);

// Fixed "%.12g" rendering used in every CSV the tools emit.
std::string format_real(double value);

}  // namespace bfb::io
