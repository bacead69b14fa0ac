#pragma once

// Reduction chain from branching programs to product problems.
//
//   (B, x) --encode--> sigma in S_t'
//          --power_vectors--> t' vectors, product sigma^k
//          --gadget--> S_{t'+1}, product id iff sigma^k(1) == t'
//          --compress, embed_even--> vectors over A_{t'+3}
//
// B accepts x iff some output vector multiplies to the identity. A second
// stage turns an identity-product instance into (1 2)(3 4)-product instances
// through candidate tuples (g1, g2, g3): x -> Conj_g3(Comm_g2(Comm_g1(x))).
// If prod x == id every candidate keeps the identity; otherwise some
// candidate yields exactly (1 2)(3 4).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "itergroup/bp_encode.hpp"
#include "itergroup/permutation.hpp"
#include "itergroup/product_map.hpp"

namespace itergroup {

/// k-th vector (k = 1..t): k copies of sigma then t - k identities.
std::vector<ProductVector> power_vectors(const Permutation& sigma);

/// (z, (t t+1), z^-1, (1 t+1)) over S_{t+1}, where z^-1 is the reversed list
/// of inverses. Folds to id iff prod z maps 1 to t.
ProductVector maps_1_to_t_gadget(const ProductVector& z);

/// M(a) = a in degree t + 2, times (t+1 t+2) when a is odd.
Permutation embed_even(const Permutation& a);
ProductVector embed_even(const ProductVector& v);

struct IdInstanceSet {
  std::uint64_t program_hash = 0;
  std::string input;
  std::size_t encoded_degree = 0;  // t'
  std::vector<ProductVector> vectors;
};

IdInstanceSet bp_to_id_instances(const BranchingProgram& b, std::string_view x);

/// Manifest comment line, then each vector in the vector file format.
void write_instances(std::ostream& os, const IdInstanceSet& set, PermFormat fmt = PermFormat::Cycles);

/// (1 2)(3 4) in degree t.
Permutation target_alpha(std::size_t t);

struct GammaTuple {
  Permutation gamma1{1};
  Permutation gamma2{1};
  Permutation gamma3{1};
};

enum class PromiseTag { Alpha, Id, Unknown };

std::string_view to_string(PromiseTag tag) noexcept;

struct SingleElementInstance {
  ProductVector vector;
  PromiseTag promise = PromiseTag::Unknown;
};

/// Tag from the actual fold: Alpha for (1 2)(3 4), Id for the identity.
SingleElementInstance make_instance(ProductVector v);

/// True means "(1 2)(3 4)". Must be safe to call concurrently when
/// reductions run with more than one worker.
using Decider = std::function<bool(const SingleElementInstance&)>;

Decider exact_fold_decider();

/// All double transpositions and 3-cycles of S_t, ordered by sorted support
/// and then by image list. Pair index i encodes (elements[i / N], elements[i % N]).
class CandidateSpace {
public:
  explicit CandidateSpace(std::size_t t);

  std::size_t degree() const noexcept { return t_; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  std::size_t double_transposition_count() const noexcept { return double_transpositions_; }
  std::size_t three_cycle_count() const noexcept { return three_cycles_; }
  std::size_t pair_count() const noexcept { return elements_.size() * elements_.size(); }

  std::pair<const Permutation&, const Permutation&> pair(std::size_t index) const;

private:
  std::size_t t_;
  std::vector<Permutation> elements_;
  std::size_t double_transpositions_ = 0;
  std::size_t three_cycles_ = 0;
};

/// Even g with g^-1 alpha g == (1 2)(3 4), moving only points of
/// {1, 2, 3, 4} and the support of alpha. Throws BadShape unless alpha is a
/// double transposition.
Permutation small_conjugator_to_1234(const Permutation& alpha);

/// Comm g1, Comm g2, Conj g3, then compress back to the input length.
ProductVector apply_candidate(const ProductVector& x, const GammaTuple& g);

/// Completes (g1, g2) using alpha' = [[prod x, g1], g2]: g3 is the small
/// conjugator when alpha' is a double transposition and id otherwise.
GammaTuple derive_gamma3(const Permutation& product, const Permutation& g1, const Permutation& g2);

enum class CandidateMode {
  Constructive,    // direct witness from the element-level script, then Derived
  Derived,         // every (g1, g2) pair, g3 derived
  FullEnumeration  // every (g1, g2) pair times every g3 in A_8; t = 8 only
};

std::string_view to_string(CandidateMode mode) noexcept;
CandidateMode parse_candidate_mode(std::string_view name);

struct ReductionOptions {
  CandidateMode mode = CandidateMode::Constructive;
  std::size_t budget = 0;  // candidates from the stream to examine, 0 = all
  std::size_t workers = 1;
};

struct ReductionResult {
  bool decided_alpha = false;
  std::optional<GammaTuple> witness;
  std::optional<std::size_t> witness_index;  // stream position, none for the direct witness
  bool direct_witness = false;
  std::size_t examined = 0;   // stream prefix length covered
  std::size_t stream_size = 0;
  bool exhausted = false;     // the whole stream was covered
};

/// ORs the decider over candidate instances with a short-circuit. The
/// witness reported is always the first one in stream order, independent of
/// the worker count. Requires x of degree t >= 8 and length t.
ReductionResult reduce_id_to_single(const ProductVector& x, const Decider& decide,
                                    const ReductionOptions& opts = {});

}  // namespace itergroup
