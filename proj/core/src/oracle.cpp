#include "bfb/oracle.hpp"

#include <cmath>
#include <string>

#include "bfb/errors.hpp"

namespace bfb {

EntryOracle::EntryOracle(Index n, Source source) : n_(n), source_(std::move(source)) {
  if (n_ < 1) throw InvalidArgument("entry oracle needs a positive length");
  if (!source_) throw InvalidArgument("entry oracle needs a source");
}

EntryOracle EntryOracle::from_vector(Vector full) {
  if (full.size() < 1) throw InvalidArgument("entry oracle needs a positive length");
  const Index n = full.size();
  auto data = std::make_shared<const Vector>(std::move(full));
  EntryOracle oracle(n, [data](Index i) { return (*data)(i); });
  oracle.full_ = std::move(data);
  return oracle;
}

double EntryOracle::operator()(Index i) {
  if (i < 0 || i >= n_) throw InvalidArgument("entry oracle index " + std::to_string(i) + " out of range");
  if (auto it = cache_.find(i); it != cache_.end()) return it->second;
  const double value = source_(i);
  if (!std::isfinite(value)) throw NumericalError("entry oracle returned a non-finite value");
  cache_.emplace(i, value);
  return value;
}

Vector EntryOracle::gather(std::span<const Index> indices) {
  Vector out(static_cast<Index>(indices.size()));
  for (std::size_t j = 0; j < indices.size(); ++j) out(static_cast<Index>(j)) = (*this)(indices[j]);
  return out;
}

const Vector& EntryOracle::full() const {
  if (!full_) throw FullVectorRequired();
  return *full_;
}

}  // namespace bfb
