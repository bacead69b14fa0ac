#pragma once

// Exact arithmetic on S_t and A_t.
//
// Points are 1-based everywhere in the public interface. Products are applied
// left to right: (a * b)(i) == b(a(i)). Under this convention the commutator
// [a, g] = a g a^-1 g^-1 and the conjugate g^-1 a g satisfy the cycle
// rewriting identities used throughout the library verbatim.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "itergroup/error.hpp"

namespace itergroup {

using Point = std::uint32_t;
using Cycle = std::vector<Point>;

enum class Parity { Even, Odd };

inline Parity operator*(Parity a, Parity b) noexcept {
  return a == b ? Parity::Even : Parity::Odd;
}

std::string_view to_string(Parity p) noexcept;

class Permutation {
public:
  /// Identity on {1..degree}.
  explicit Permutation(std::size_t degree = 1);

  /// images[i-1] is the image of point i. Throws MalformedCycles unless the
  /// list is a bijection on {1..images.size()}.
  static Permutation from_images(std::span<const Point> images);
  static Permutation from_images(std::initializer_list<Point> images) {
    return from_images(std::span<const Point>(images.begin(), images.size()));
  }

  /// Product of the given disjoint cycles. Throws MalformedCycles on
  /// overlapping or out-of-range points.
  static Permutation from_cycles(std::size_t degree, const std::vector<Cycle>& cycles);

  std::size_t degree() const noexcept { return img_.size(); }

  /// Image of a 1-based point. Unchecked beyond a debug assert.
  Point operator()(Point p) const noexcept { return img_[p - 1] + 1; }

  std::vector<Point> images() const;
  bool is_identity() const noexcept;

  /// Left-to-right product: (*this * rhs)(i) == rhs((*this)(i)).
  Permutation operator*(const Permutation& rhs) const;
  Permutation& operator*=(const Permutation& rhs);
  Permutation inverse() const;

  /// Canonical embedding into a larger symmetric group; new points are fixed.
  Permutation extended(std::size_t degree) const;

  bool operator==(const Permutation&) const = default;
  std::strong_ordering operator<=>(const Permutation& rhs) const;

  /// Zero-based image table, for hot loops that index directly.
  std::span<const std::uint32_t> raw() const noexcept { return img_; }

private:
  explicit Permutation(std::vector<std::uint32_t> img) : img_(std::move(img)) {}

  std::vector<std::uint32_t> img_;
};

/// Disjoint cycle form with fixed points omitted. Canonical: every cycle is
/// rotated so its smallest point leads, and cycles are sorted by that point.
struct CycleDecomposition {
  std::size_t degree = 0;
  std::vector<Cycle> cycles;

  bool operator==(const CycleDecomposition&) const = default;
};

Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& a);

CycleDecomposition decompose(const Permutation& a);
Permutation recompose(const CycleDecomposition& c);

/// Sorted lengths of the non-trivial cycles.
std::vector<std::size_t> cycle_type(const Permutation& a);

/// Number of cycles counting fixed points.
std::size_t cycle_count(const Permutation& a);

Parity parity(const Permutation& a);
Parity parity_by_cycles(const Permutation& a);
Parity parity_by_inversions(const Permutation& a);
inline bool is_even(const Permutation& a) { return parity(a) == Parity::Even; }

/// [a, g] = a g a^-1 g^-1.
Permutation commutator(const Permutation& a, const Permutation& g);

/// g^-1 a g. Relabels every cycle (p1 .. pk) of a to (g(p1) .. g(pk)).
Permutation conjugate(const Permutation& a, const Permutation& g);

std::vector<Point> moved_points(const Permutation& a);
std::size_t moved_count(const Permutation& a);

bool is_double_transposition(const Permutation& a);

/// True iff every non-trivial cycle has length 2; count written to *pairs.
bool is_transposition_product(const Permutation& a, std::size_t* pairs = nullptr);

/// Some g with conjugate(a, g) == b, built by aligning cycles of equal length
/// position by position (fixed points matched in ascending order).
Permutation conjugator_in_S(const Permutation& a, const Permutation& b);

/// As conjugator_in_S but the witness is even. Throws NotConjugateInA when the
/// class of a splits in A_t and b lies in the other half.
Permutation conjugator_in_A(const Permutation& a, const Permutation& b);

/// An odd permutation commuting with a, if one exists among the two standard
/// candidates: an even-length cycle of a, or the block swap of two equal-length
/// cycles (fixed points included).
std::optional<Permutation> odd_centralizer_element(const Permutation& a);

using Rng = std::mt19937_64;

Permutation random_permutation(std::size_t t, Rng& rng);

/// Uniform on A_t: Fisher-Yates, then swap the images of points 1 and 2 when
/// the draw is odd.
Permutation random_even(std::size_t t, Rng& rng);

/// All elements of S_t or A_t in lexicographic order of image lists. Meant
/// for exhaustive checks at small degree.
std::vector<Permutation> all_permutations(std::size_t t);
std::vector<Permutation> all_even_permutations(std::size_t t);

/// Lehmer rank of the image list in [0, t!).
std::uint64_t lex_rank(const Permutation& a);

}  // namespace itergroup

template <>
struct std::hash<itergroup::Permutation> {
  std::size_t operator()(const itergroup::Permutation& p) const noexcept;
};
