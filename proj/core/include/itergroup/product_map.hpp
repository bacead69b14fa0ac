#pragma once

// Product vectors and 1-local maps between product classes.
//
// A conjugation step maps (x1, .., xm) to (g^-1 x1, x2, .., xm g) and a
// commutation step maps it to (x1, .., xm g, xm^-1, .., x1^-1 g^-1). The fold
// of the output is g^-1 (prod x) g or [prod x, g] respectively, so lifting a
// TransformScript step by step gives a vector map sending alpha-products to
// beta-products and identity products to identity products.

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "itergroup/cycle_transform.hpp"
#include "itergroup/permutation.hpp"
#include "itergroup/text_format.hpp"

namespace itergroup {

/// Which input an element of a vector depends on.
struct Provenance {
  enum class Kind { Source, Constant, Mixed };

  Kind kind = Kind::Constant;
  std::size_t index = 0;  // meaningful for Source only

  static Provenance source(std::size_t i) { return {Kind::Source, i}; }
  static Provenance constant() { return {Kind::Constant, 0}; }
  static Provenance mixed() { return {Kind::Mixed, 0}; }

  bool operator==(const Provenance&) const = default;
};

/// Provenance of a product of elements with the given tags.
Provenance merge(const Provenance& a, const Provenance& b);

class ProductVector {
public:
  ProductVector() = default;

  /// Element i is tagged Source(i).
  explicit ProductVector(std::vector<Permutation> elements);
  ProductVector(std::vector<Permutation> elements, std::vector<Provenance> provenance);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }

  const Permutation& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const std::vector<Provenance>& provenance() const noexcept { return provenance_; }

  /// Product x1 * x2 * .. * xm.
  Permutation fold() const;
  bool all_even() const;

  /// Elementwise embedding into a larger degree.
  ProductVector extended(std::size_t degree) const;

  bool operator==(const ProductVector& rhs) const { return elements_ == rhs.elements_; }

private:
  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<Provenance> provenance_;
};

ProductVector conj_step_vector(const ProductVector& v, const Permutation& g);
ProductVector comm_step_vector(const ProductVector& v, const Permutation& g);

/// Applies each script step with the vector-level operation above.
ProductVector apply_script_to_vector(const ProductVector& v, const TransformScript& s);

/// Multiplies adjacent elements down to `target_len` nearly equal groups, or
/// pads with identity elements when the vector is shorter. The fold is
/// unchanged; provenance becomes Mixed where different sources merge.
ProductVector compress(const ProductVector& v, std::size_t target_len);

/// Output element of a 1-local map: left * x[source]^(+-1) * right.
struct MapCell {
  Permutation left;
  std::size_t source = 0;
  bool inverted = false;
  Permutation right;
};

struct MapBlock {
  Permutation component;  // the cycle or even-cycle pair this block produces
  TransformScript script;
  std::vector<MapCell> cells;
};

/// Bound on output length: output_length <= kMapLengthFactor * t * m. A block
/// for a k-point component uses at most 2^(comm count) * m cells, which is
/// largest relative to k for 3-cycles (16 m cells for 3 points).
inline constexpr std::size_t kMapLengthFactor = 6;

class VectorMap {
public:
  VectorMap(std::size_t degree, std::size_t input_length, std::vector<MapBlock> blocks,
            bool identity_shortcut);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t input_length() const noexcept { return input_length_; }
  std::size_t output_length() const;
  const std::vector<MapBlock>& blocks() const noexcept { return blocks_; }
  bool is_identity_map() const noexcept { return identity_; }

  ProductVector apply(const ProductVector& x) const;

private:
  std::size_t degree_;
  std::size_t input_length_;
  std::vector<MapBlock> blocks_;
  bool identity_;
};

/// Symbolically lifts a script onto an m-element input.
std::vector<MapCell> lift_script(const TransformScript& s, std::size_t m);

/// Components of beta handled by separate blocks: each odd cycle on its own,
/// even cycles paired in canonical order, fixed points skipped.
std::vector<Permutation> map_components(const Permutation& beta);

VectorMap build_alpha_to_beta(const Permutation& alpha, const Permutation& beta, std::size_t m);
ProductVector apply_vector_map(const VectorMap& f, const ProductVector& x);

/// Vector file: "vector <t> <length>" then one permutation per line in cycle
/// notation. Lines starting with '#' are comments.
void write_vector(std::ostream& os, const ProductVector& v, PermFormat fmt = PermFormat::Cycles);
ProductVector read_vector(std::istream& is);

/// Map listing: header, then each block with its component and steps.
void write_map(std::ostream& os, const VectorMap& f);

}  // namespace itergroup
