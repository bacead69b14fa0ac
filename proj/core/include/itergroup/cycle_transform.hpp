#pragma once

// Element-level rewriting of cycle structure by conjugation and commutation.
//
// A TransformScript is an ordered list of steps, each either
//   Conj(g): a -> g^-1 a g      or      Comm(g): a -> [a, g] = a g a^-1 g^-1
// with g even. Both kinds fix the identity, which is what lets scripts lift to
// product vectors (see product_map.hpp).
//
// The constructions follow a three stage pipeline:
//   1. two commutations reduce any non-identity element to a double
//      transposition (to_double_transposition);
//   2. commutations with doubling/maintain gadgets grow the number of disjoint
//      transpositions (grow_transpositions);
//   3. one or two commutations plus a conjugation assemble the transpositions
//      into an odd cycle or a pair of even cycles (build_odd_cycle,
//      build_even_cycle_pair).
// convert() chains them, with a detour through a 5-cycle for 3-cycle targets.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "itergroup/permutation.hpp"

namespace itergroup {

enum class StepKind { Conj, Comm };

class TransformStep {
public:
  /// Throws OddGamma when gamma is odd.
  TransformStep(StepKind kind, Permutation gamma, std::string tag = {});

  StepKind kind() const noexcept { return kind_; }
  const Permutation& gamma() const noexcept { return gamma_; }
  const std::string& tag() const noexcept { return tag_; }

  Permutation apply(const Permutation& a) const;

  bool operator==(const TransformStep& rhs) const {
    return kind_ == rhs.kind_ && gamma_ == rhs.gamma_;
  }

private:
  StepKind kind_;
  Permutation gamma_;
  std::string tag_;
};

struct TransformScript {
  std::size_t degree = 0;
  Permutation source{1};
  Permutation target{1};
  std::vector<TransformStep> steps;

  std::size_t comm_count() const;
  std::size_t conj_count() const;
};

/// Additive slack in comm_count <= ceil(log2 t) + kScriptCommSlack. The worst
/// case of the pipeline is 2 + ceil(log2(n/2)) + 2 commutations with n <= t/2
/// transpositions; exhaustive t = 6 and randomized t = 10, 14 runs peak at 1.
inline constexpr std::size_t kScriptCommSlack = 2;

std::size_t ceil_log2(std::size_t n);

/// Folds the steps left to right starting from `a`.
Permutation apply_steps(const Permutation& a, const std::vector<TransformStep>& steps);
Permutation apply_script(const Permutation& a, const TransformScript& s);

/// Two commutations taking a != id to a double transposition.
TransformScript to_double_transposition(const Permutation& a);

/// Commutations taking a product of j >= 2 disjoint transpositions to a product
/// of exactly k. Greedy schedule: each step doubles min(j', k - j') of the
/// current transpositions and maintains the rest.
TransformScript grow_transpositions(const Permutation& a, std::size_t k);

/// Number of transpositions build_odd_cycle expects for an odd k-cycle target.
std::size_t odd_cycle_source_pairs(std::size_t k);

/// Number of transpositions build_even_cycle_pair expects for k = k1 + k2.
std::size_t even_pair_source_pairs(std::size_t k);

/// [Conj, Comm] or [Conj, Comm, Comm] producing the odd cycle `beta`
/// (5 <= length <= t - 1, t even) from the matching transposition product.
TransformScript build_odd_cycle(const Permutation& a, const Permutation& beta);

/// [Comm, Conj] producing the product of two even cycles `beta`
/// (t == 2 mod 4), or a lone Conj when both cycles are transpositions.
TransformScript build_even_cycle_pair(const Permutation& a, const Permutation& beta);

/// Full pipeline for a single odd cycle, a pair of even cycles, or a 3-cycle.
TransformScript convert(const Permutation& a, const Permutation& beta);

/// Smallest t' >= t with t' == 2 mod 4.
std::size_t degree_two_mod_four(std::size_t t);

/// Line format:
///   script <t>
///   source <cycles>
///   target <cycles>
///   conj|comm <cycles> [# tag]
void write_script(std::ostream& os, const TransformScript& s);
TransformScript read_script(std::istream& is);

}  // namespace itergroup
