#pragma once

#include <cstddef>
#include <string_view>

#include "itergroup/text_format.hpp"

namespace fx {

inline itergroup::Permutation P(std::size_t t, std::string_view cycles) {
  return itergroup::parse_permutation(cycles, t);
}

}  // namespace fx
