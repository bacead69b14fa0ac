#pragma once

// Deterministic branching programs and their encoding as a single permutation
// whose cycle structure records acceptance.
//
// Fixing the input x leaves every internal node with one outgoing edge, so the
// undirected projected graph is a forest in which each tree holds exactly one
// sink. The encoding permutes the darts (oriented edge sides) of that forest:
// an incoming dart at node v goes to the outgoing dart along the next edge in
// v's rotation (incident edges sorted by neighbour id). Its cycles are the
// Euler tours of the trees. Two pendant edges mark the start and accept nodes;
// their incoming darts become points 1 and t', which share a cycle exactly
// when start and accept share a tree, i.e. when the program accepts x.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "itergroup/permutation.hpp"

namespace itergroup {

struct BpNode {
  enum class Kind { Internal, Sink };

  Kind kind = Kind::Sink;
  std::size_t var = 0;  // 1-based variable index, Internal only
  std::size_t succ0 = 0;
  std::size_t succ1 = 0;
  bool accept = false;  // Sink only

  static BpNode internal(std::size_t var, std::size_t succ0, std::size_t succ1) {
    return {Kind::Internal, var, succ0, succ1, false};
  }
  static BpNode sink(bool accept) { return {Kind::Sink, 0, 0, 0, accept}; }

  bool operator==(const BpNode&) const = default;
};

class BranchingProgram {
public:
  /// Validates ids, variable range, acyclicity, and that `accept` is the only
  /// accepting sink. Throws MalformedProgram otherwise.
  BranchingProgram(std::size_t variables, std::size_t start, std::size_t accept,
                   std::vector<BpNode> nodes);

  std::size_t size() const noexcept { return nodes_.size(); }
  std::size_t variables() const noexcept { return variables_; }
  std::size_t start() const noexcept { return start_; }
  std::size_t accept() const noexcept { return accept_; }
  const std::vector<BpNode>& nodes() const noexcept { return nodes_; }
  const BpNode& node(std::size_t id) const { return nodes_.at(id); }

  /// Successor of an internal node under input x.
  std::size_t next(std::size_t id, std::string_view x) const;

private:
  std::size_t variables_;
  std::size_t start_;
  std::size_t accept_;
  std::vector<BpNode> nodes_;
};

enum class Verdict { Accept, Reject };

std::string_view to_string(Verdict v) noexcept;

/// x is a string of '0'/'1' of length variables().
Verdict eval_bp(const BranchingProgram& b, std::string_view x);

struct Dart {
  std::size_t tail = 0;
  std::size_t head = 0;
};

struct EncodedInstance {
  Permutation sigma{1};
  Point start_point = 1;
  Point accept_point = 1;
  /// darts[p - 1] is the oriented edge behind point p. Node ids size() and
  /// size() + 1 are the pendant nodes at start and accept.
  std::vector<Dart> darts;
};

EncodedInstance encode(const BranchingProgram& b, std::string_view x);

/// Throws PointOutOfRange unless both points lie in [1, degree].
bool same_cycle(const Permutation& p, Point a, Point b);

/// Random program with nodes in [2, max_nodes]: ids are shuffled, node 0 of
/// the hidden topological order is the start, and at least one sink rejects.
BranchingProgram random_program(Rng& rng, std::size_t max_nodes, std::size_t variables);

/// Text form:
///   bp <s> <n> <start> <accept>
///   <id> <var> <succ0> <succ1>
///   <id> sink accept|reject
void write_program(std::ostream& os, const BranchingProgram& b);
BranchingProgram read_program(std::istream& is);

/// FNV-1a over the canonical text form.
std::uint64_t program_hash(const BranchingProgram& b);

}  // namespace itergroup
