#include <doctest.h>

#include <sstream>

#include "itergroup/product_map.hpp"
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

}  // namespace

TEST_SUITE("product_map") {

TEST_CASE("conj_step_vector") {
  const auto v = ProductVector({P(4, "(1 2)(3 4)")});
  const auto out = conj_step_vector(v, P(4, "(1 3)(2 4)"));
  CHECK(out.fold() == P(4, "(1 2)(3 4)"));

  gen::Gen g(31);
  const auto id = oracle::to_vector(g.vector_with_product(oracle::identity(6), 5));
  CHECK(conj_step_vector(id, oracle::perm(g.even(6))).fold().is_identity());
}

TEST_CASE("comm_step_vector") {
  const auto x = P(4, "(1 2)(3 4)");
  const auto g3 = P(4, "(1 2 3)");
  const auto out = comm_step_vector(ProductVector({x}), g3);
  REQUIRE(out.size() == 2);
  CHECK(out[0] == x * g3);
  CHECK(out[1] == x.inverse() * g3.inverse());
  CHECK(out.fold() == P(4, "(1 4)(2 3)"));

  gen::Gen g(32);
  const auto v3 = oracle::to_vector(g.vector(6, 3));
  CHECK(comm_step_vector(v3, oracle::perm(g.even(6))).size() == 6);
  const auto id = oracle::to_vector(g.vector_with_product(oracle::identity(6), 4));
  CHECK(comm_step_vector(id, oracle::perm(g.even(6))).fold().is_identity());
}

TEST_CASE("steps are homomorphisms of the fold") {
  gen::Gen g(33);
  for (std::size_t t : {6, 10}) {
    for (int i = 0; i < 1000; ++i) {
      const auto xs = g.vector(t, g.uniform(1, 6));
      const auto h = g.even(t);
      const auto v = oracle::to_vector(xs);
      const auto pi = oracle::fold(xs);
      CHECK(oracle::fold(conj_step_vector(v, oracle::perm(h))) == oracle::conjugate(pi, h));
      CHECK(oracle::fold(comm_step_vector(v, oracle::perm(h))) == oracle::commutator(pi, h));
    }
  }
}

TEST_CASE("compress") {
  gen::Gen g(34);
  const auto v6 = oracle::to_vector(g.vector(6, 6));
  const auto c3 = compress(v6, 3);
  REQUIRE(c3.size() == 3);
  CHECK(c3[0] == v6[0] * v6[1]);
  CHECK(c3[1] == v6[2] * v6[3]);
  CHECK(c3[2] == v6[4] * v6[5]);

  const auto v2 = oracle::to_vector(g.vector(6, 2));
  const auto c4 = compress(v2, 4);
  REQUIRE(c4.size() == 4);
  CHECK(c4[0] == v2[0]);
  CHECK(c4[1] == v2[1]);
  CHECK(c4[2].is_identity());
  CHECK(c4[3].is_identity());

  for (int i = 0; i < 100; ++i) {
    const auto xs = g.vector(10, 22);
    const auto c = compress(oracle::to_vector(xs), 10);
    CHECK(c.size() == 10);
    CHECK(oracle::fold(c) == oracle::fold(xs));
  }
}

TEST_CASE("compress marks merged sources as mixed") {
  gen::Gen g(35);
  const auto c = compress(oracle::to_vector(g.vector(6, 4)), 2);
  CHECK(c.provenance()[0] == Provenance::mixed());
  const auto same = compress(oracle::to_vector(g.vector(6, 3)), 3);
  CHECK(same.provenance()[2] == Provenance::source(2));
}

TEST_CASE("build_alpha_to_beta small example") {
  const auto f = build_alpha_to_beta(P(6, "(1 2 3)"), P(6, "(1 2 3 4 5)"), 1);
  CHECK(f.apply(ProductVector({P(6, "(1 2 3)")})).fold() == P(6, "(1 2 3 4 5)"));
  CHECK(f.apply(ProductVector({Permutation(6)})).fold().is_identity());
}

TEST_CASE("build_alpha_to_beta block structure") {
  const auto alpha = P(10, "(1 5 9)(2 4)(3 8)");
  CHECK(build_alpha_to_beta(alpha, P(10, "(1 2)(3 4 5 6)"), 3).blocks().size() == 1);

  const auto beta = P(10, "(1 2 3)(4 5)(6 7)");
  const auto comps = map_components(beta);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == P(10, "(1 2 3)"));
  CHECK(comps[1] == P(10, "(4 5)(6 7)"));
  const auto f = build_alpha_to_beta(alpha, beta, 4);
  CHECK(f.blocks().size() == 2);
  gen::Gen g(36);
  for (int i = 0; i < 200; ++i) {
    const auto x = oracle::to_vector(g.vector_with_product(oracle::images(alpha), 4));
    CHECK(oracle::fold(f.apply(x)) == oracle::images(beta));
  }
}

TEST_CASE("maps send alpha to beta and id to id") {
  gen::Gen g(37);
  for (std::size_t t : {6, 10}) {
    for (int pair = 0; pair < 25; ++pair) {
      const auto alpha = g.nonidentity_even(t);
      const auto beta = g.nonidentity_even(t);
      const std::size_t m = t;
      const auto f = build_alpha_to_beta(oracle::perm(alpha), oracle::perm(beta), m);
      CHECK(f.output_length() <= kMapLengthFactor * t * m);
      for (int i = 0; i < 5; ++i) {
        const auto xa = oracle::to_vector(g.vector_with_product(alpha, m));
        const auto xi = oracle::to_vector(g.vector_with_product(oracle::identity(t), m));
        const auto ya = f.apply(xa);
        const auto yi = apply_vector_map(f, xi);
        CHECK(oracle::fold(ya) == beta);
        CHECK(oracle::fold(yi) == oracle::identity(t));
        CHECK(ya.size() == f.output_length());
        CHECK(yi.size() == f.output_length());
        CHECK(ya.all_even());
      }
      // Unpromised input still maps without error.
      const auto xo = oracle::to_vector(g.vector(t, m));
      CHECK(f.apply(xo).size() == f.output_length());
    }
  }
}

TEST_CASE("maps are 1-local") {
  gen::Gen g(38);
  const std::size_t t = 10;
  const std::size_t m = 6;
  const auto f = build_alpha_to_beta(oracle::perm(g.nonidentity_even(t)),
                                     oracle::perm(g.nonidentity_even(t)), m);
  for (int i = 0; i < 20; ++i) {
    auto xs = g.vector(t, m);
    const auto before = f.apply(oracle::to_vector(xs));
    const std::size_t j = g.uniform(0, m - 1);
    xs[j] = g.even(t);
    const auto after = f.apply(oracle::to_vector(xs));
    REQUIRE(before.size() == after.size());
    for (std::size_t k = 0; k < before.size(); ++k) {
      const auto& pv = before.provenance()[k];
      if (before[k] != after[k]) {
        CHECK(pv == Provenance::source(j));
      }
      CHECK(pv.kind != Provenance::Kind::Mixed);
    }
  }
}

TEST_CASE("map cells follow the lifted formula") {
  gen::Gen g(39);
  const std::size_t t = 6;
  const auto f = build_alpha_to_beta(oracle::perm(g.nonidentity_even(t)),
                                     oracle::perm(g.nonidentity_even(t)), 3);
  const auto xs = g.vector(t, 3);
  const auto y = f.apply(oracle::to_vector(xs));
  std::size_t k = 0;
  for (const auto& b : f.blocks()) {
    for (const auto& c : b.cells) {
      auto xi = xs[c.source];
      if (c.inverted) xi = oracle::inverse(xi);
      CHECK(oracle::images(y[k++]) ==
            oracle::compose(oracle::compose(oracle::images(c.left), xi), oracle::images(c.right)));
    }
  }
  CHECK(k == y.size());
}

TEST_CASE("output length depends only on the shapes") {
  gen::Gen g(40);
  const auto alpha = oracle::perm(g.nonidentity_even(10));
  const auto beta = oracle::perm(g.nonidentity_even(10));
  const auto f1 = build_alpha_to_beta(alpha, beta, 5);
  const auto f2 = build_alpha_to_beta(alpha, beta, 5);
  CHECK(f1.output_length() == f2.output_length());
  CHECK(f1.apply(oracle::to_vector(g.vector(10, 5))).size() ==
        f1.apply(oracle::to_vector(g.vector(10, 5))).size());
}

TEST_CASE("build_alpha_to_beta errors") {
  CHECK(code_of([] { build_alpha_to_beta(Permutation(6), P(6, "(1 2 3)"), 2); }) ==
        ErrorCode::IdentityElement);
  CHECK(code_of([] { build_alpha_to_beta(P(6, "(1 2 3)"), Permutation(6), 2); }) ==
        ErrorCode::IdentityElement);
  CHECK(code_of([] { build_alpha_to_beta(P(8, "(1 2 3)"), P(8, "(1 2 3)"), 2); }) ==
        ErrorCode::DegreeNotTwoModFour);
  const auto f = build_alpha_to_beta(P(6, "(1 2 3)"), P(6, "(1 2 3)"), 2);
  CHECK(code_of([&] { f.apply(ProductVector({P(6, "(1 2 3)")})); }) ==
        ErrorCode::LengthMismatch);
}

TEST_CASE("vector text round trip") {
  gen::Gen g(41);
  const auto v = oracle::to_vector(g.vector(7, 5));
  for (auto fmt : {PermFormat::Cycles, PermFormat::Images}) {
    std::stringstream ss;
    write_vector(ss, v, fmt);
    CHECK(read_vector(ss) == v);
  }
  std::istringstream bad("vector 4 2\n(1 2 3)\n");
  CHECK_THROWS_AS(read_vector(bad), Error);
}

}  // TEST_SUITE
