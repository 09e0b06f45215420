#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bfb {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller supplied arguments outside an operation's domain (bad sizes, ranges, kinds).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Numerical failures: rank loss, degenerate data, sampler breakdown.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class ZeroRankError : public NumericalError {
 public:
  ZeroRankError() : NumericalError("matrix has numerical rank zero") {}
};

// rank(SA) != rank(A); the sketch lost part of range(A).
class RankDropError : public NumericalError {
 public:
  RankDropError(std::size_t sketched_rank, std::size_t full_rank);

  std::size_t sketched_rank() const noexcept { return sketched_rank_; }
  std::size_t full_rank() const noexcept { return full_rank_; }

 private:
  std::size_t sketched_rank_;
  std::size_t full_rank_;
};

// Data vector lies (numerically) in range(A): residual-relative quantities are undefined.
class DegenerateDataError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// A dense sketch was applied to data only reachable through an entry oracle.
class FullVectorRequired : public InvalidArgument {
 public:
  FullVectorRequired()
      : InvalidArgument("dense sketch requires the full data vector; entry oracle has none attached") {}
};

class MemoryCapExceeded : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

}  // namespace bfb
