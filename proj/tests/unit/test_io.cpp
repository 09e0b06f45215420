#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "bfb/errors.hpp"
#include "bfb/io.hpp"
#include "bfb/oracle.hpp"
#include "test_util.hpp"

namespace bfb {
namespace {

namespace fs = std::filesystem;

TEST(Bfb1, HeaderLayout) {
  Matrix m(2, 3);
  m << 1, 2, 3, 4, 5, 6;
  const std::string bytes = io::encode_bfb1(m);
  ASSERT_EQ(bytes.size(), 4u + 16u + 6u * 8u);
  EXPECT_EQ(bytes.substr(0, 4), "BFB1");
  EXPECT_EQ(static_cast<unsigned char>(bytes[4]), 2);
  EXPECT_EQ(static_cast<unsigned char>(bytes[12]), 3);
  // 1.0 is 0x3FF0000000000000; little-endian puts 0xF0 0x3F last.
  EXPECT_EQ(static_cast<unsigned char>(bytes[20 + 6]), 0xF0);
  EXPECT_EQ(static_cast<unsigned char>(bytes[20 + 7]), 0x3F);
}

TEST(Bfb1, RoundTripIsBitExact) {
  const Matrix m = test::random_matrix(7, 5, 3);
  const Matrix back = io::decode_bfb1(io::encode_bfb1(m));
  ASSERT_EQ(back.rows(), 7);
  ASSERT_EQ(back.cols(), 5);
  EXPECT_TRUE((back.array() == m.array()).all());
}

TEST(Bfb1, RejectsBadMagicAndTruncation) {
  std::string bytes = io::encode_bfb1(Matrix::Ones(2, 2));
  EXPECT_THROW(io::decode_bfb1(bytes.substr(0, bytes.size() - 1)), InvalidArgument);
  bytes[0] = 'X';
  EXPECT_THROW(io::decode_bfb1(bytes), InvalidArgument);
}

TEST(Bfb1, FileRoundTripAndVectors) {
  const fs::path dir = fs::temp_directory_path() / "bfb_io_test";
  fs::create_directories(dir);
  const Vector v = test::random_vector(9, 4);
  io::write_bfb1(dir / "v.bfb1", v);
  const Vector back = io::read_bfb1_vector(dir / "v.bfb1");
  EXPECT_TRUE((back.array() == v.array()).all());
  fs::remove_all(dir);
}

TEST(Csv, RoundTripKeepsFullPrecision) {
  const fs::path path = fs::temp_directory_path() / "bfb_io_test.csv";
  const Matrix m = test::random_matrix(4, 3, 5);
  io::write_csv(path, m);
  const Matrix back = io::read_csv(path);
  EXPECT_TRUE((back.array() == m.array()).all());
  fs::remove(path);
}

TEST(FormatReal, TwelveSignificantDigits) {
  EXPECT_EQ(io::format_real(0.1), "0.1");
  EXPECT_EQ(io::format_real(1.0 / 3.0), "0.333333333333");
}

TEST(EntryOracle, CountsDistinctQueries) {
  int calls = 0;
  EntryOracle o(10, [&](Index i) {
    ++calls;
    return static_cast<double>(i * i);
  });
  EXPECT_EQ(o(3), 9.0);
  EXPECT_EQ(o(3), 9.0);
  EXPECT_EQ(o(4), 16.0);
  EXPECT_EQ(o.queries(), 2);
  EXPECT_EQ(calls, 2);
  const std::vector<Index> idx{1, 3, 1, 5};
  const Vector g = o.gather(idx);
  EXPECT_EQ(g(0), 1.0);
  EXPECT_EQ(g(3), 25.0);
  EXPECT_EQ(o.queries(), 4);
  EXPECT_FALSE(o.has_full());
  EXPECT_THROW(o.full(), FullVectorRequired);
  EXPECT_THROW(o(10), InvalidArgument);
  o.reset();
  EXPECT_EQ(o.queries(), 0);
}

TEST(EntryOracle, AttachedVectorMatchesAnswers) {
  const Vector v = test::random_vector(12, 8);
  EntryOracle o = EntryOracle::from_vector(v);
  EntryOracle moved = std::move(o);
  for (Index i = 0; i < 12; ++i) EXPECT_EQ(moved(i), v(i));
  EXPECT_TRUE(moved.has_full());
  EXPECT_TRUE((moved.full().array() == v.array()).all());
}

}  // namespace
}  // namespace bfb
