#pragma once

#include <span>

#include "fgs/errors.hpp"

namespace fgs::detail {

inline void check_line(std::span<const double> f, std::span<const double> w,
                       std::size_t out_size) {
  if (f.empty()) throw DimensionError("1D signal must not be empty");
  if (w.size() != f.size() - 1)
    throw DimensionError("1D weights must have n-1 entries");
  if (out_size != f.size()) throw DimensionError("1D output size mismatch");
  for (double e : w)
    if (!(e >= 0.0)) throw ParameterError("1D weights must be non-negative");
}

}  // namespace fgs::detail
