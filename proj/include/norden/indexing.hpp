#pragma once

// External (user-facing) basis indices are 1-based: X_1 ... X_dim.
// Everything inside the library is 0-based. These two helpers are the only
// place the two conventions meet.

#include "norden/errors.hpp"

#include <cstddef>
#include <string>

namespace norden {

inline std::size_t from_external(long one_based, std::size_t dim) {
  if (one_based < 1 || static_cast<std::size_t>(one_based) > dim)
    throw IndexOutOfRange("basis index " + std::to_string(one_based) + " outside 1.." + std::to_string(dim));
  return static_cast<std::size_t>(one_based - 1);
}

inline long to_external(std::size_t zero_based) { return static_cast<long>(zero_based) + 1; }

} // namespace norden
