#include <doctest.h>

#include <boost/math/distributions/chi_squared.hpp>
#include <map>
#include <sstream>

#include "itergroup/permutation.hpp"
#include "itergroup/text_format.hpp"
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

double chi_square_critical(double df, double level) {
  return boost::math::quantile(boost::math::chi_squared(df), level);
}

}  // namespace

TEST_SUITE("perm_core") {

TEST_CASE("construction rejects non-bijections") {
  CHECK(code_of([] { Permutation::from_images({1, 1, 3}); }) == ErrorCode::MalformedCycles);
  CHECK(code_of([] { Permutation::from_images({0, 1}); }) == ErrorCode::MalformedCycles);
  CHECK(code_of([] { Permutation::from_images({1, 4, 2}); }) == ErrorCode::MalformedCycles);
  CHECK(code_of([] { Permutation::from_cycles(4, {{1, 2}, {2, 3}}); }) ==
        ErrorCode::MalformedCycles);
  CHECK(code_of([] { Permutation::from_cycles(3, {{1, 5}}); }) == ErrorCode::MalformedCycles);
  CHECK(code_of([] { P(4, "(1 2"); }) == ErrorCode::ParseError);
}

TEST_CASE("compose applies left factor first") {
  CHECK(compose(P(3, "(1 2)"), P(3, "(2 3)")) == P(3, "(1 3 2)"));
  const auto s = P(5, "(1 4 2)(3 5)");
  CHECK(compose(Permutation(5), s) == s);
  CHECK(compose(s, inverse(s)).is_identity());
  CHECK(s * s.inverse() == Permutation(5));
}

TEST_CASE("compose and inverse agree with the pointwise oracle") {
  gen::Gen g(11);
  for (int i = 0; i < 300; ++i) {
    const auto a = g.perm(9);
    const auto b = g.perm(9);
    CHECK(oracle::images(compose(oracle::perm(a), oracle::perm(b))) == oracle::compose(a, b));
    CHECK(oracle::images(inverse(oracle::perm(a))) == oracle::inverse(a));
  }
}

TEST_CASE("inverse examples") {
  CHECK(inverse(P(3, "(1 2 3)")) == P(3, "(1 3 2)"));
  CHECK(inverse(Permutation(4)).is_identity());
  CHECK(inverse(P(4, "(1 2)(3 4)")) == P(4, "(1 2)(3 4)"));
}

TEST_CASE("decompose and recompose") {
  const auto d = decompose(Permutation::from_images({2, 1, 4, 3}));
  REQUIRE(d.cycles.size() == 2);
  CHECK(d.cycles[0] == Cycle{1, 2});
  CHECK(d.cycles[1] == Cycle{3, 4});
  CHECK(decompose(Permutation(6)).cycles.empty());
  CHECK(recompose({5, {{1, 3, 4, 2, 5}}}).images() == std::vector<Point>{3, 5, 4, 2, 1});

  gen::Gen g(12);
  for (int i = 0; i < 200; ++i) {
    const auto a = oracle::perm(g.perm(10));
    const auto c = decompose(a);
    CHECK(recompose(c) == a);
    for (const auto& cyc : c.cycles) {
      CHECK(cyc.front() == *std::min_element(cyc.begin(), cyc.end()));
    }
    for (std::size_t k = 1; k < c.cycles.size(); ++k) {
      CHECK(c.cycles[k - 1].front() < c.cycles[k].front());
    }
    CHECK(c.cycles.size() == oracle::cycles(oracle::images(a)).size());
  }
}

TEST_CASE("parity examples") {
  CHECK(parity(P(2, "(1 2)")) == Parity::Odd);
  CHECK(parity(P(4, "(1 2 3 4)")) == Parity::Odd);
  CHECK(parity(P(4, "(1 2)(3 4)")) == Parity::Even);
  CHECK(parity(Permutation(3)) == Parity::Even);
}

TEST_CASE("both parity algorithms agree on S_5") {
  const auto all = all_permutations(5);
  REQUIRE(all.size() == 120);
  std::size_t even = 0;
  for (const auto& p : all) {
    CHECK(parity_by_cycles(p) == parity_by_inversions(p));
    CHECK(is_even(p) == oracle::is_even(oracle::images(p)));
    even += is_even(p) ? 1 : 0;
  }
  CHECK(even == 60);
  CHECK(all_even_permutations(5).size() == 60);
}

TEST_CASE("parity of a product multiplies") {
  gen::Gen g(13);
  for (int i = 0; i < 300; ++i) {
    const auto a = oracle::perm(g.perm(7));
    const auto b = oracle::perm(g.perm(7));
    CHECK(parity(a * b) == parity(a) * parity(b));
  }
}

TEST_CASE("commutator examples") {
  CHECK(commutator(P(4, "(1 2)(3 4)"), P(4, "(1 2 3)")) == P(4, "(1 4)(2 3)"));
  const auto s = P(6, "(1 5 3)(2 4)");
  CHECK(commutator(s, Permutation(6)).is_identity());
  CHECK(commutator(Permutation(6), s).is_identity());
  CHECK(commutator(P(8, "(1 2)(3 4)"), P(8, "(1 5)(2 6)(3 7)(4 8)")) ==
        P(8, "(1 2)(3 4)(5 6)(7 8)"));
}

TEST_CASE("commutator and conjugate match the oracle") {
  gen::Gen g(14);
  for (int i = 0; i < 300; ++i) {
    const auto a = g.perm(8);
    const auto h = g.perm(8);
    CHECK(oracle::images(commutator(oracle::perm(a), oracle::perm(h))) ==
          oracle::commutator(a, h));
    CHECK(oracle::images(conjugate(oracle::perm(a), oracle::perm(h))) == oracle::conjugate(a, h));
  }
}

TEST_CASE("conjugate examples") {
  CHECK(conjugate(P(4, "(1 2 3)"), P(4, "(1 4)")) == P(4, "(4 2 3)"));
  const auto s = P(5, "(1 2 5)");
  CHECK(conjugate(s, Permutation(5)) == s);
  CHECK(conjugate(P(4, "(1 2)(3 4)"), P(4, "(1 3)(2 4)")) == P(4, "(1 2)(3 4)"));
}

TEST_CASE("conjugation relabels cycles") {
  gen::Gen g(15);
  for (int i = 0; i < 1000; ++i) {
    const auto a = oracle::perm(g.perm(10));
    const auto h = oracle::perm(g.perm(10));
    CycleDecomposition relabeled = decompose(a);
    for (auto& c : relabeled.cycles) {
      for (auto& p : c) p = h(p);
    }
    CHECK(conjugate(a, h) == recompose(relabeled));
  }
}

TEST_CASE("moved points") {
  CHECK(moved_count(P(5, "(1 2 3)")) == 3);
  CHECK(moved_count(Permutation(5)) == 0);
  Cycle full;
  for (Point p = 1; p <= 9; ++p) full.push_back(p);
  CHECK(moved_count(Permutation::from_cycles(9, {full})) == 9);
  CHECK(moved_points(P(6, "(2 5)(3 6 4)")) == std::vector<Point>{2, 3, 4, 5, 6});
}

TEST_CASE("commutators move at most twice as many points") {
  const auto a5 = all_even_permutations(5);
  for (const auto& a : a5) {
    for (const auto& h : a5) {
      CHECK(moved_count(commutator(a, h)) <= 2 * moved_count(a));
    }
  }
  gen::Gen g(16);
  for (int i = 0; i < 1000; ++i) {
    const auto a = oracle::perm(g.even(12));
    const auto h = oracle::perm(g.even(12));
    CHECK(moved_count(commutator(a, h)) <= 2 * moved_count(a));
  }
}

TEST_CASE("conjugator_in_S") {
  const auto a = P(4, "(1 2 3)");
  const auto b = P(4, "(2 3 4)");
  CHECK(conjugate(a, conjugator_in_S(a, b)) == b);
  CHECK(conjugator_in_S(P(3, "(1 2)"), P(3, "(1 2)")).is_identity());
  CHECK(code_of([] { conjugator_in_S(P(3, "(1 2)"), P(3, "(1 2 3)")); }) ==
        ErrorCode::NotConjugate);
  CHECK(code_of([] { conjugator_in_S(P(3, "(1 2)"), P(4, "(1 2)")); }) ==
        ErrorCode::DegreeMismatch);
}

TEST_CASE("conjugator_in_A") {
  CHECK(code_of([] { conjugator_in_A(P(5, "(1 2 3 4 5)"), P(5, "(1 2 3 5 4)")); }) ==
        ErrorCode::NotConjugateInA);
  CHECK(conjugator_in_A(P(5, "(1 2 3)"), P(5, "(1 2 3)")).is_identity());

  const auto a = P(4, "(1 2)(3 4)");
  const auto b = P(4, "(1 3)(2 4)");
  const auto w = conjugator_in_A(a, b);
  CHECK(is_even(w));
  CHECK(conjugate(a, w) == b);
  bool exists = false;
  for (const auto& g : oracle::all_even(4)) exists |= oracle::conjugate(oracle::images(a), g) == oracle::images(b);
  CHECK(exists);
}

TEST_CASE("A_5 splits the 5-cycle class") {
  const auto a = oracle::images(P(5, "(1 2 3 4 5)"));
  const auto b = oracle::images(P(5, "(1 2 3 5 4)"));
  bool even_witness = false;
  bool odd_witness = false;
  for (const auto& g : oracle::all(5)) {
    if (oracle::conjugate(a, g) != b) continue;
    (oracle::is_even(g) ? even_witness : odd_witness) = true;
  }
  CHECK_FALSE(even_witness);
  CHECK(odd_witness);
}

TEST_CASE("conjugator witnesses are exact on random conjugate pairs") {
  gen::Gen g(17);
  for (int i = 0; i < 500; ++i) {
    const std::size_t t = g.uniform(3, 9);
    const auto a = oracle::perm(g.even(t));
    const auto b = conjugate(a, oracle::perm(g.perm(t)));
    CHECK(conjugate(a, conjugator_in_S(a, b)) == b);
    // Decide A-conjugacy by brute force for small t only.
    if (t > 7) continue;
    bool in_a = false;
    for (const auto& h : oracle::all_even(t)) {
      if (oracle::conjugate(oracle::images(a), h) == oracle::images(b)) {
        in_a = true;
        break;
      }
    }
    if (in_a) {
      const auto w = conjugator_in_A(a, b);
      CHECK(is_even(w));
      CHECK(conjugate(a, w) == b);
    } else {
      CHECK(code_of([&] { conjugator_in_A(a, b); }) == ErrorCode::NotConjugateInA);
    }
  }
}

TEST_CASE("odd centralizer element commutes and is odd") {
  gen::Gen g(18);
  for (int i = 0; i < 300; ++i) {
    const auto a = oracle::perm(g.perm(8));
    if (auto c = odd_centralizer_element(a)) {
      CHECK(parity(*c) == Parity::Odd);
      CHECK(a * *c == *c * a);
    }
  }
}

TEST_CASE("random_even is uniform on A_3 and reproducible") {
  Rng rng(2024);
  std::map<std::vector<Point>, int> counts;
  const int n = 30000;
  for (int i = 0; i < n; ++i) {
    const auto p = random_even(3, rng);
    REQUIRE(is_even(p));
    ++counts[p.images()];
  }
  REQUIRE(counts.size() == 3);
  double chi = 0;
  for (auto& [k, c] : counts) {
    const double e = n / 3.0;
    chi += (c - e) * (c - e) / e;
  }
  CHECK(chi < chi_square_critical(2, 0.99));

  Rng r1(99);
  Rng r2(99);
  CHECK(random_even(12, r1) == random_even(12, r2));
}

TEST_CASE("lex_rank is a bijection onto [0, t!)") {
  std::set<std::uint64_t> ranks;
  for (const auto& p : all_permutations(5)) ranks.insert(lex_rank(p));
  CHECK(ranks.size() == 120);
  CHECK(*ranks.rbegin() == 119);
  CHECK(lex_rank(Permutation(5)) == 0);
}

TEST_CASE("text formats round trip") {
  const auto p = P(6, "(1, 4)(2 6 3)");
  CHECK(format_cycles(p) == "(1 4)(2 6 3)");
  CHECK(format_images(p) == "[4,6,2,1,5,3]");
  CHECK(parse_permutation("[4,6,2,1,5,3]", std::nullopt) == p);
  CHECK(format_cycles(Permutation(3)) == "()");
  CHECK(P(3, "()").is_identity());
  CHECK(code_of([] { parse_permutation("[2,1]", 3); }) == ErrorCode::DegreeMismatch);
}

}  // TEST_SUITE
