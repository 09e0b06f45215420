#include "bfb/io.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "bfb/errors.hpp"

namespace bfb::io {

namespace {

constexpr std::string_view kMagic = "BFB1";
constexpr std::size_t kHeaderBytes = 4 + 8 + 8;

void put_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFFu));
}

std::uint64_t get_u64(std::string_view bytes, std::size_t offset) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i)
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes[offset + static_cast<std::size_t>(i)])) << (8 * i);
  return v;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void dump(const std::filesystem::path& path, const std::string& bytes, std::ios::openmode mode) {
  std::ofstream out(path, mode);
  if (!out) throw InvalidArgument("cannot open '" + path.string() + "' for writing");
  out << bytes;
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

}  // namespace

std::string encode_bfb1(const Matrix& m) {
  std::string out;
  out.reserve(kHeaderBytes + static_cast<std::size_t>(m.size()) * 8);
  out.append(kMagic);
  put_u64(out, static_cast<std::uint64_t>(m.rows()));
  put_u64(out, static_cast<std::uint64_t>(m.cols()));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) put_u64(out, std::bit_cast<std::uint64_t>(m(i, j)));
  return out;
}

Matrix decode_bfb1(std::string_view bytes) {
  if (bytes.size() < kHeaderBytes || bytes.substr(0, 4) != kMagic)
    throw InvalidArgument("not a BFB1 container (bad magic or truncated header)");
  const std::uint64_t rows = get_u64(bytes, 4);
  const std::uint64_t cols = get_u64(bytes, 12);
  if (rows == 0 || cols == 0) throw InvalidArgument("BFB1 container has an empty dimension");
  if (rows > (bytes.size() / 8) || cols > (bytes.size() / 8) || rows * cols != (bytes.size() - kHeaderBytes) / 8 ||
      (bytes.size() - kHeaderBytes) % 8 != 0)
    throw InvalidArgument("BFB1 payload size does not match its header");
  Matrix m(static_cast<Index>(rows), static_cast<Index>(cols));
  std::size_t offset = kHeaderBytes;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j, offset += 8) m(i, j) = std::bit_cast<double>(get_u64(bytes, offset));
  return m;
}

void write_bfb1(const std::filesystem::path& path, const Matrix& m) {
  dump(path, encode_bfb1(m), std::ios::binary | std::ios::trunc);
}

void write_bfb1(const std::filesystem::path& path, const Vector& v) {
  write_bfb1(path, Matrix(v));
}

Matrix read_bfb1(const std::filesystem::path& path) { return decode_bfb1(slurp(path)); }

Vector read_bfb1_vector(const std::filesystem::path& path) {
  const Matrix m = read_bfb1(path);
  if (m.cols() == 1) return m.col(0);
  if (m.rows() == 1) return m.row(0).transpose();
  throw DimensionMismatch("BFB1 container '" + path.string() + "' is not a vector");
}

std::string format_real(double value) {
  std::array<char, 40> buf{};
  std::snprintf(buf.data(), buf.size(), "%.12g", value);
  return buf.data();
}

void write_csv(const std::filesystem::path& path, const Matrix& m) {
  std::string out;
  std::array<char, 40> buf{};
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) out.push_back(',');
      std::snprintf(buf.data(), buf.size(), "%.17g", m(i, j));
      out.append(buf.data());
    }
    out.push_back('\n');
  }
  dump(path, out, std::ios::trunc);
}

Matrix read_csv(const std::filesystem::path& path) {
  std::istringstream in(slurp(path));
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    std::vector<double> row;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      std::size_t used = 0;
      try {
        row.push_back(std::stod(cell, &used));
      } catch (const std::exception&) {
        throw InvalidArgument("non-numeric CSV cell '" + cell + "' in " + path.string());
      }
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw DimensionMismatch("ragged CSV rows in " + path.string());
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InvalidArgument("empty CSV file " + path.string());
  Matrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

}  // namespace bfb::io
