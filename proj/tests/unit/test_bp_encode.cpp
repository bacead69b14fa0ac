#include <doctest.h>

#include <sstream>

#include "itergroup/bp_encode.hpp"
#include "oracles.hpp"
#include "parse.hpp"

using namespace itergroup;
using fx::P;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an itergroup::Error");
  return ErrorCode::InvalidArgument;
}

// x1 ? accept : reject
BranchingProgram one_node() {
  return BranchingProgram(1, 0, 2, {BpNode::internal(1, 1, 2), BpNode::sink(false), BpNode::sink(true)});
}

std::string bits(unsigned v, std::size_t n) {
  std::string s(n, '0');
  for (std::size_t i = 0; i < n; ++i) s[i] = (v >> i) & 1U ? '1' : '0';
  return s;
}

}  // namespace

TEST_SUITE("bp_encode") {

TEST_CASE("eval on the one-node program") {
  const auto b = one_node();
  CHECK(eval_bp(b, "1") == Verdict::Accept);
  CHECK(eval_bp(b, "0") == Verdict::Reject);
  CHECK(to_string(Verdict::Accept) == "ACCEPT");
  CHECK(code_of([&] { eval_bp(b, "10"); }) == ErrorCode::LengthMismatch);
}

TEST_CASE("encode on the one-node program") {
  const auto b = one_node();
  const auto acc = encode(b, "1");
  CHECK(acc.start_point == 1);
  CHECK(acc.accept_point == acc.sigma.degree());
  CHECK(same_cycle(acc.sigma, acc.start_point, acc.accept_point));
  const auto rej = encode(b, "0");
  CHECK_FALSE(same_cycle(rej.sigma, rej.start_point, rej.accept_point));
  CHECK(acc.sigma.degree() <= 2 * (b.size() + 2));
}

TEST_CASE("darts describe the pendant edges and sigma follows the rotation") {
  gen::Gen g(51);
  for (int i = 0; i < 50; ++i) {
    const auto b = random_program(g.rng, 12, 4);
    const auto x = bits(static_cast<unsigned>(g.uniform(0, 15)), 4);
    const auto e = encode(b, x);
    const std::size_t s = b.size();
    REQUIRE(e.darts.size() == e.sigma.degree());
    CHECK(e.darts[0].tail == s);
    CHECK(e.darts[0].head == b.start());
    CHECK(e.darts.back().tail == s + 1);
    CHECK(e.darts.back().head == b.accept());
    for (Point p = 1; p <= e.sigma.degree(); ++p) {
      // sigma(p) leaves the head of p.
      CHECK(e.darts[e.sigma(p) - 1].tail == e.darts[p - 1].head);
    }
  }
}

TEST_CASE("same_cycle") {
  CHECK(same_cycle(P(3, "(1 2 3)"), 1, 3));
  CHECK_FALSE(same_cycle(P(4, "(1 2)(3 4)"), 1, 3));
  CHECK(same_cycle(P(4, "(1 2)(3 4)"), 4, 4));
  CHECK(code_of([] { same_cycle(P(4, "(1 2)"), 1, 5); }) == ErrorCode::PointOutOfRange);
  CHECK(code_of([] { same_cycle(P(4, "(1 2)"), 0, 1); }) == ErrorCode::PointOutOfRange);
}

TEST_CASE("encoding agrees with evaluation on random programs") {
  gen::Gen g(52);
  for (int i = 0; i < 500; ++i) {
    const auto b = random_program(g.rng, 30, 8);
    for (unsigned v = 0; v < 256; ++v) {
      const auto x = bits(v, 8);
      const bool accepts = oracle::bp_accepts(b, x);
      REQUIRE((eval_bp(b, x) == Verdict::Accept) == accepts);
      REQUIRE(oracle::projected_connected(b, x, b.start(), b.accept()) == accepts);
      const auto e = encode(b, x);
      REQUIRE(e.sigma.degree() <= 2 * (b.size() + 2));
      REQUIRE(oracle::same_cycle(oracle::images(e.sigma), e.start_point, e.accept_point) ==
              accepts);
    }
  }
}

TEST_CASE("malformed programs are rejected") {
  using N = BpNode;
  SUBCASE("cycle") {
    CHECK(code_of([] {
            BranchingProgram(1, 0, 2, {N::internal(1, 1, 2), N::internal(1, 0, 2), N::sink(true)});
          }) == ErrorCode::MalformedProgram);
  }
  SUBCASE("second accepting sink") {
    CHECK(code_of([] {
            BranchingProgram(1, 0, 2, {N::internal(1, 1, 2), N::sink(true), N::sink(true)});
          }) == ErrorCode::MalformedProgram);
  }
  SUBCASE("accept is not a sink") {
    CHECK(code_of([] {
            BranchingProgram(1, 0, 0, {N::internal(1, 1, 2), N::sink(false), N::sink(true)});
          }) == ErrorCode::MalformedProgram);
  }
  SUBCASE("variable out of range") {
    CHECK(code_of([] {
            BranchingProgram(1, 0, 2, {N::internal(2, 1, 2), N::sink(false), N::sink(true)});
          }) == ErrorCode::MalformedProgram);
  }
  SUBCASE("successor out of range") {
    CHECK(code_of([] {
            BranchingProgram(1, 0, 2, {N::internal(1, 1, 7), N::sink(false), N::sink(true)});
          }) == ErrorCode::MalformedProgram);
  }
}

TEST_CASE("unreachable nodes are kept") {
  using N = BpNode;
  const BranchingProgram b(2, 0, 2,
                           {N::internal(1, 1, 2), N::sink(false), N::sink(true), N::internal(2, 1, 4),
                            N::sink(false)});
  for (const char* x : {"00", "01", "10", "11"}) {
    const auto e = encode(b, x);
    CHECK(same_cycle(e.sigma, e.start_point, e.accept_point) == (eval_bp(b, x) == Verdict::Accept));
  }
}

TEST_CASE("program text round trip") {
  gen::Gen g(53);
  const auto b = random_program(g.rng, 15, 5);
  std::stringstream ss;
  write_program(ss, b);
  const auto back = read_program(ss);
  CHECK(back.nodes() == b.nodes());
  CHECK(back.start() == b.start());
  CHECK(back.accept() == b.accept());
  CHECK(program_hash(back) == program_hash(b));

  std::istringstream text("# tiny\nbp 3 1 0 2\n0 1 1 2\n1 sink reject\n2 sink accept\n");
  const auto p = read_program(text);
  CHECK(eval_bp(p, "1") == Verdict::Accept);
  std::istringstream bad("bp 3 1 0 2\n0 1 1 2\n1 sink maybe\n2 sink accept\n");
  CHECK_THROWS_AS(read_program(bad), Error);
}

}  // TEST_SUITE
