#pragma once

// Textual permutation forms: disjoint-cycle notation "(1 2)(3 4)" (commas
// between points are accepted on input, "()" is the identity) and raw image
// lists "[2,1,4,3]".

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "itergroup/permutation.hpp"

namespace itergroup {

enum class PermFormat { Cycles, Images };

/// Cycle notation needs an explicit degree. An image list carries its own
/// degree; if `degree` is also given the two must agree.
Permutation parse_permutation(std::string_view text, std::optional<std::size_t> degree);

std::string format_cycles(const Permutation& p);
std::string format_images(const Permutation& p);
std::string format_permutation(const Permutation& p, PermFormat fmt);

PermFormat parse_perm_format(std::string_view name);

}  // namespace itergroup
