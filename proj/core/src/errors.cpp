#include "bfb/errors.hpp"

namespace bfb {

RankDropError::RankDropError(std::size_t sketched_rank, std::size_t full_rank)
    : NumericalError("sketch dropped rank: rank(SA) = " + std::to_string(sketched_rank) +
                     ", rank(A) = " + std::to_string(full_rank)),
      sketched_rank_(sketched_rank),
      full_rank_(full_rank) {}

}  // namespace bfb
