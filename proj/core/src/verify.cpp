#include "itergroup/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <boost/math/distributions/chi_squared.hpp>

#include "itergroup/bp_encode.hpp"
#include "itergroup/cycle_transform.hpp"
#include "itergroup/leakage_lab.hpp"
#include "itergroup/product_map.hpp"
#include "itergroup/reductions.hpp"
#include "itergroup/text_format.hpp"

namespace itergroup {

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail.str("");
      detail << "FAILED: " << what;
    }
  }
};

Rng criterion_rng(std::uint64_t seed, int id) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(id)};
  return Rng(seq);
}

Permutation P(std::size_t t, const std::vector<Cycle>& cycles) { return Permutation::from_cycles(t, cycles); }

/// Distinct random labels from [t].
std::vector<Point> labels(std::size_t t, Rng& rng) {
  std::vector<Point> pts(t);
  std::iota(pts.begin(), pts.end(), Point{1});
  std::shuffle(pts.begin(), pts.end(), rng);
  return pts;
}

/// Random permutation of the points in `free`, fixing everything else.
Permutation random_on(std::size_t t, const std::vector<Point>& free, Rng& rng) {
  std::vector<Point> img(t);
  std::iota(img.begin(), img.end(), Point{1});
  std::vector<Point> shuffled = free;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  for (std::size_t i = 0; i < free.size(); ++i) img[free[i] - 1] = shuffled[i];
  return Permutation::from_images(img);
}

Permutation random_nonidentity_even(std::size_t t, Rng& rng) {
  for (;;) {
    Permutation p = random_even(t, rng);
    if (!p.is_identity()) return p;
  }
}

std::string cyc(const Permutation& p) { return format_cycles(p); }

// 1. Commutator identities, each over random relabelings and with disjoint
// extra cycles where the identity speaks of "contains".
void identities(Check& c, Rng& rng) {
  const std::size_t t = 14;
  std::size_t checked = 0;
  for (int rep = 0; rep < 200; ++rep) {
    const auto L = labels(t, rng);
    const Point a = L[0], b = L[1], cc = L[2], d = L[3], e = L[4], f = L[5], g = L[6], h = L[7];
    const std::vector<Point> rest6(L.begin() + 6, L.end());
    const std::vector<Point> rest4(L.begin() + 4, L.end());
    const Permutation x6 = random_on(t, rest6, rng);
    const Permutation x4 = random_on(t, rest4, rng);

    c.require(commutator(P(t, {{a, b}, {cc, d}}) * x4, P(t, {{a, b, cc}})) == P(t, {{a, d}, {b, cc}}),
              "[(a b)(c d).., (a b c)] = (a d)(b c)");
    c.require(commutator(P(t, {{a, b, cc}}), P(t, {{a, b}, {cc, d}})) == P(t, {{a, d}, {b, cc}}),
              "[(a b c), (a b)(c d)] = (a d)(b c)");
    c.require(commutator(P(t, {{a, b, cc}, {d, e, f}}) * x6, P(t, {{a, d}, {cc, f}})) ==
                  P(t, {{a, d}, {b, e}}),
              "[(a b c)(d e f).., (a d)(c f)] = (a d)(b e)");
    c.require(commutator(P(t, {{a, b, cc, d}}) * x4, P(t, {{a, b}, {cc, d}})) == P(t, {{a, cc}, {b, d}}),
              "[(a b c d).., (a b)(c d)] = (a c)(b d)");
    for (std::size_t k = 5; k <= t; ++k) {
      Cycle big(L.begin(), L.begin() + static_cast<std::ptrdiff_t>(k));
      const std::vector<Point> rest(L.begin() + static_cast<std::ptrdiff_t>(k), L.end());
      c.require(commutator(P(t, {big}) * random_on(t, rest, rng), P(t, {{big[1], big[2], big[3]}})) ==
                    P(t, {{big[0], big[3], big[2]}}),
                "[(a1 .. ak).., (a2 a3 a4)] = (a1 a4 a3), k = " + std::to_string(k));
    }
    c.require(commutator(P(t, {{a, b}, {cc, d}}), P(t, {{a, e}, {b, f}, {cc, g}, {d, h}})) ==
                  P(t, {{a, b}, {cc, d}, {e, f}, {g, h}}),
              "doubling identity");
    for (std::size_t k = 1; 2 * k + 1 <= t; ++k) {
      std::vector<Cycle> pairs;
      Cycle gamma;
      Cycle expect;
      for (std::size_t i = 0; i < k; ++i) {
        pairs.push_back({L[2 * i], L[2 * i + 1]});
        gamma.push_back(L[2 * i]);
        gamma.push_back(L[2 * i + 1]);
      }
      const Point last = L[2 * k];
      gamma.push_back(last);
      for (std::size_t i = 0; i < k; ++i) expect.push_back(L[2 * i]);
      for (std::size_t i = k; i-- > 0;) expect.push_back(L[2 * i + 1]);
      expect.push_back(last);
      c.require(commutator(P(t, pairs), P(t, {gamma})) == P(t, {expect}),
                "odd-cycle formula, k' = " + std::to_string(k));
    }
    c.require(P(t, {{a, b}, {cc, d}}) * P(t, {{cc, e}, {d, f}}) == P(t, {{a, b}, {cc, f, d, e}}),
              "alpha pi = (a b)(c f d e)");
    ++checked;
  }
  if (c.ok) c.detail << checked << " relabelings, all identities exact";
}

// 2. Every non-identity element of A_6.
void double_transposition_cases(Check& c) {
  std::size_t n = 0;
  for (const auto& a : all_even_permutations(6)) {
    if (a.is_identity()) continue;
    ++n;
    const auto s = to_double_transposition(a);
    c.require(s.comm_count() == 2 && s.steps.size() == 2, cyc(a) + ": expected exactly 2 Comm steps");
    c.require(apply_script(a, s) == s.target && is_double_transposition(s.target),
              cyc(a) + ": result is not a double transposition");
    if (!c.ok) return;
  }
  c.require(n == 359, "expected 359 elements, saw " + std::to_string(n));
  if (c.ok) c.detail << n << "/359 elements reach a double transposition in 2 Comm steps";
}

Permutation random_convert_target(std::size_t t, Rng& rng) {
  std::vector<std::vector<std::size_t>> shapes;
  for (std::size_t k = 3; k < t; k += 2) shapes.push_back({k});
  for (std::size_t k1 = 2; k1 <= t; k1 += 2) {
    for (std::size_t k2 = k1; k1 + k2 <= t; k2 += 2) shapes.push_back({k1, k2});
  }
  const auto& shape = shapes[std::uniform_int_distribution<std::size_t>(0, shapes.size() - 1)(rng)];
  const auto L = labels(t, rng);
  std::vector<Cycle> cycles;
  std::size_t pos = 0;
  for (std::size_t k : shape) {
    cycles.emplace_back(L.begin() + static_cast<std::ptrdiff_t>(pos),
                        L.begin() + static_cast<std::ptrdiff_t>(pos + k));
    pos += k;
  }
  return P(t, cycles);
}

// 3. convert() on random valid pairs.
void convert_contract(Check& c, Rng& rng) {
  std::ostringstream peaks;
  for (std::size_t t : {6, 10}) {
    std::size_t peak = 0;
    const std::size_t bound = ceil_log2(t) + kScriptCommSlack;
    for (int i = 0; i < 500; ++i) {
      const Permutation a = random_nonidentity_even(t, rng);
      const Permutation b = random_convert_target(t, rng);
      const auto s = convert(a, b);
      c.require(apply_script(a, s) == b, "apply_script(" + cyc(a) + ") != " + cyc(b));
      c.require(s.comm_count() <= bound, cyc(a) + " -> " + cyc(b) + " uses " +
                                             std::to_string(s.comm_count()) + " commutations");
      if (!c.ok) return;
      peak = std::max(peak, s.comm_count());
    }
    peaks << " t=" << t << " peak comm " << peak << " (bound " << bound << ")";
  }
  c.detail << "1000 scripts exact;" << peaks.str();
}

// 4. Vector maps alpha -> beta.
void local_map_contract(Check& c, Rng& rng) {
  std::size_t max_ratio_num = 0;
  for (std::size_t t : {6, 10}) {
    const std::size_t m = t;
    for (int pair = 0; pair < 100; ++pair) {
      const Permutation a = random_nonidentity_even(t, rng);
      const Permutation b = random_nonidentity_even(t, rng);
      const VectorMap f = build_alpha_to_beta(a, b, m);
      c.require(f.output_length() <= kMapLengthFactor * t * m,
                "output length " + std::to_string(f.output_length()) + " exceeds bound");
      max_ratio_num = std::max(max_ratio_num, f.output_length() / m);
      for (int v = 0; v < 20 && c.ok; ++v) {
        const ProductVector xa = sample_class(a, m, rng);
        const ProductVector xi = sample_class(Permutation(t), m, rng);
        // sample_class draws length = degree, and m == t here.
        const ProductVector ya = f.apply(xa);
        c.require(ya.fold() == b, cyc(a) + " -> " + cyc(b) + ": alpha-product not mapped to beta");
        c.require(f.apply(xi).fold().is_identity(), cyc(a) + " -> " + cyc(b) + ": id not preserved");
        if (v == 0 && !f.is_identity_map()) {
          // Locality witness: every output cell is L x_src^(+-1) R, and
          // perturbing one input changes only the cells reading it.
          std::size_t j = 0;
          for (const auto& blk : f.blocks()) {
            for (const auto& cell : blk.cells) {
              const Permutation& x = xa[cell.source];
              const Permutation expect = cell.left * (cell.inverted ? x.inverse() : x) * cell.right;
              c.require(ya[j] == expect, "cell formula broken");
              c.require(ya.provenance()[j] == Provenance::source(cell.source), "provenance broken");
              ++j;
            }
          }
          const std::size_t victim = std::uniform_int_distribution<std::size_t>(0, m - 1)(rng);
          std::vector<Permutation> changed = xa.elements();
          changed[victim] = changed[victim] * P(t, {{1, 2, 3}});
          const ProductVector yc = f.apply(ProductVector(changed));
          j = 0;
          for (const auto& blk : f.blocks()) {
            for (const auto& cell : blk.cells) {
              if (cell.source != victim) c.require(yc[j] == ya[j], "output depends on a foreign input");
              ++j;
            }
          }
        }
      }
      if (!c.ok) return;
    }
  }
  c.detail << "200 maps x 40 vectors exact; max output/m = " << max_ratio_num
           << " (bound " << kMapLengthFactor << "t)";
}

// 5. M([a, g]) <= 2 M(a) on A_5 x A_5.
void moved_points_bound(Check& c) {
  const auto group = all_even_permutations(5);
  std::size_t pairs = 0;
  for (const auto& a : group) {
    for (const auto& g : group) {
      ++pairs;
      c.require(moved_count(commutator(a, g)) <= 2 * moved_count(a),
                "[" + cyc(a) + ", " + cyc(g) + "] moves too many points");
    }
  }
  c.require(pairs == 3600, "expected 3600 pairs");
  if (c.ok) c.detail << pairs << " pairs satisfy the bound";
}

std::string bits_of(std::size_t v, std::size_t n) {
  std::string x(n, '0');
  for (std::size_t i = 0; i < n; ++i) x[i] = ((v >> i) & 1U) ? '1' : '0';
  return x;
}

// 6. Encoded cycles agree with direct evaluation.
void encode_equivalence(Check& c, Rng& rng) {
  std::size_t accepts = 0;
  std::size_t total = 0;
  for (int p = 0; p < 500; ++p) {
    const BranchingProgram b = random_program(rng, 30, 8);
    for (std::size_t v = 0; v < 256; ++v) {
      const std::string x = bits_of(v, 8);
      const EncodedInstance enc = encode(b, x);
      const bool acc = eval_bp(b, x) == Verdict::Accept;
      c.require(same_cycle(enc.sigma, enc.start_point, enc.accept_point) == acc,
                "program " + std::to_string(p) + " input " + x + ": cycle test disagrees");
      c.require(enc.sigma.degree() <= 2 * (b.size() + 2), "degree bound violated");
      accepts += acc ? 1 : 0;
      ++total;
    }
    if (!c.ok) return;
  }
  c.detail << total << " (program, input) pairs agree, " << accepts << " accepting";
}

// 7. Program to id-product chain, gadget, embedding.
void id_chain(Check& c, Rng& rng) {
  std::size_t accepting = 0;
  for (int i = 0; i < 200; ++i) {
    const BranchingProgram b = random_program(rng, 30, 8);
    const std::string x = bits_of(std::uniform_int_distribution<std::size_t>(0, 255)(rng), 8);
    const auto set = bp_to_id_instances(b, x);
    bool some_id = false;
    for (const auto& v : set.vectors) {
      c.require(v.all_even(), "odd element in an instance vector");
      c.require(v.degree() == set.encoded_degree + 3 && v.size() == set.encoded_degree + 1,
                "instance shape");
      some_id = some_id || v.fold().is_identity();
    }
    const bool acc = eval_bp(b, x) == Verdict::Accept;
    c.require(some_id == acc, "chain disagrees with evaluation on instance " + std::to_string(i));
    accepting += acc ? 1 : 0;
    if (!c.ok) return;
  }
  const std::size_t t = 6;
  std::size_t hits = 0;
  for (int i = 0; i < 1000; ++i) {
    std::vector<Permutation> z;
    for (std::size_t j = 0; j < t; ++j) z.push_back(random_permutation(t, rng));
    const ProductVector zv(z);
    const bool maps = zv.fold()(1) == t;
    hits += maps ? 1 : 0;
    c.require(maps_1_to_t_gadget(zv).fold().is_identity() == maps, "gadget equivalence");
  }
  const auto s4 = all_permutations(4);
  for (const auto& a : s4) {
    c.require(is_even(embed_even(a)), "M(" + cyc(a) + ") is odd");
    for (const auto& g : s4) c.require(embed_even(a) * embed_even(g) == embed_even(a * g), "M not a homomorphism");
  }
  if (c.ok) {
    c.detail << "200 chains exact (" << accepting << " accepting); gadget 1000/1000 (" << hits
             << " with 1 -> t); M homomorphic on 576 pairs";
  }
}

Permutation random_small_gamma3(std::size_t t, Rng& rng) {
  auto L = labels(t, rng);
  L.resize(8);
  Permutation g = random_on(t, L, rng);
  if (!is_even(g)) g = P(t, {{L[0], L[1]}}) * g;
  return g;
}

// 8. id -> (1 2)(3 4) reduction with the exact fold decider.
void single_reduction(Check& c, Rng& rng, std::size_t workers) {
  const Decider decide = exact_fold_decider();
  std::size_t enumerated = 0;
  for (std::size_t t : {8, 10}) {
    const Permutation target = target_alpha(t);
    for (int i = 0; i < 100; ++i) {
      std::vector<Permutation> xs;
      for (std::size_t j = 0; j < t; ++j) xs.push_back(random_even(t, rng));
      ProductVector x(xs);
      if (x.fold().is_identity()) {
        xs[0] = xs[0] * P(t, {{1, 2, 3}});
        x = ProductVector(xs);
      }
      const auto r = reduce_id_to_single(x, decide, {CandidateMode::Constructive, 0, workers});
      c.require(r.decided_alpha && r.witness.has_value(), "non-identity product not detected");
      if (!c.ok) return;
      c.require(apply_candidate(x, *r.witness).fold() == target, "reported witness does not verify");
    }
    for (int i = 0; i < 100; ++i) {
      const ProductVector x = sample_class(Permutation(t), t, rng);
      const auto r = reduce_id_to_single(x, decide, {CandidateMode::Constructive, 1024, workers});
      c.require(!r.decided_alpha, "identity product reported as (1 2)(3 4)");
      enumerated += r.examined;
    }
    const CandidateSpace space(t);
    const ProductVector zero(std::vector<Permutation>(t, Permutation(t)));
    for (int i = 0; i < 100; ++i) {
      const std::size_t n = space.elements().size();
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      const GammaTuple g{space.elements()[pick(rng)], space.elements()[pick(rng)],
                         random_small_gamma3(t, rng)};
      const ProductVector xi = sample_class(Permutation(t), t, rng);
      c.require(apply_candidate(xi, g).fold().is_identity(), "apply_candidate broke identity");
    }
    if (!c.ok) return;
  }
  // Some identity instances scanned over the whole derived stream.
  std::size_t full_streams = 0;
  std::size_t full_candidates = 0;
  for (std::size_t t : {8, 8, 8, 8, 8, 10}) {
    const ProductVector x = sample_class(Permutation(t), t, rng);
    const auto full = reduce_id_to_single(x, decide, {CandidateMode::Derived, 0, workers});
    c.require(!full.decided_alpha && full.exhausted, "full derived scan misbehaved");
    ++full_streams;
    full_candidates += full.examined;
  }
  if (c.ok) {
    c.detail << "400 instances exact; id instances scanned " << enumerated
             << " candidates (budget 1024 each) plus " << full_streams << " full streams ("
             << full_candidates << " candidates)";
  }
}

// 9. Rerandomizer bijection and sampler uniformity.
void sampler(Check& c, Rng& rng) {
  const auto a3 = all_even_permutations(3);
  std::size_t vectors = 0;
  for (const auto& x1 : a3) {
    for (const auto& x2 : a3) {
      for (const auto& x3 : a3) {
        const ProductVector x({x1, x2, x3});
        std::set<std::vector<Permutation>> seen;
        for (const auto& r1 : a3) {
          for (const auto& r2 : a3) {
            const std::vector<Permutation> rs{r1, r2};
            const ProductVector z = rerandomize_with(x, rs);
            c.require(z.fold() == x.fold(), "rerandomize changed the product");
            seen.insert(z.elements());
          }
        }
        c.require(seen.size() == 9, "rerandomize is not a bijection onto the class");
        ++vectors;
      }
    }
  }
  const std::size_t t = 4;
  const auto a4 = all_even_permutations(t);
  std::map<Permutation, std::size_t> index;
  for (std::size_t i = 0; i < a4.size(); ++i) index[a4[i]] = i;
  const std::size_t cells = a4.size() * a4.size() * a4.size();
  const std::size_t draws = 100000;
  const boost::math::chi_squared dist(static_cast<double>(cells - 1));
  const double critical = boost::math::quantile(dist, 0.99);
  std::ostringstream stats;
  for (const Permutation& alpha : {Permutation(t), target_alpha(t)}) {
    std::vector<std::size_t> counts(cells, 0);
    for (std::size_t i = 0; i < draws; ++i) {
      const ProductVector z = sample_class(alpha, t, rng);
      c.require(z.fold() == alpha, "sample has the wrong product");
      const std::size_t cell = (index.at(z[0]) * a4.size() + index.at(z[1])) * a4.size() + index.at(z[2]);
      ++counts[cell];
    }
    const double expected = static_cast<double>(draws) / static_cast<double>(cells);
    double chi2 = 0;
    for (std::size_t k : counts) chi2 += (static_cast<double>(k) - expected) * (static_cast<double>(k) - expected) / expected;
    c.require(chi2 < critical, "chi-square " + std::to_string(chi2) + " >= " + std::to_string(critical));
    stats << ' ' << cyc(alpha) << ": chi2=" << static_cast<long>(chi2);
  }
  if (c.ok) {
    c.detail << vectors << " vectors x 9 rerandomizers bijective; chi2 critical "
             << static_cast<long>(critical) << " (df " << cells - 1 << ");" << stats.str();
  }
}

// 10. Exact and Monte Carlo distance.
void tvd_harness(Check& c, std::uint64_t seed, std::size_t workers) {
  const std::size_t t = 4;
  const Permutation alpha = target_alpha(t);
  const auto& reg = default_leakage_registry();
  const auto coord = reg.make("coord:1", t, alpha);
  const auto fold = reg.make("foldeq", t, alpha);
  const Rational zero = tvd_exact(coord, alpha, t);
  const Rational one = tvd_exact(fold, alpha, t);
  c.require(zero == Rational{0, 1}, "exact coordinate distance " + zero.str());
  c.require(one == Rational{1, 1}, "exact fold-indicator distance " + one.str());
  const auto mc0 = tvd_monte_carlo(coord, alpha, t, 100000, seed, workers);
  const auto mc1 = tvd_monte_carlo(fold, alpha, t, 100000, seed + 1, workers);
  c.require(mc0.estimate <= mc0.radius, "coordinate estimate outside radius");
  c.require(mc1.estimate >= 1.0 - mc1.radius, "fold estimate outside radius");
  if (c.ok) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "exact %s and %s; n=1e5: %.4f +- %.4f, %.4f +- %.4f",
                  zero.str().c_str(), one.str().c_str(), mc0.estimate, mc0.radius, mc1.estimate,
                  mc1.radius);
    c.detail << buf;
  }
}

// 11. Amplifier error against a planted distinguisher of gap 0.3.
void amplifier(Check& c, Rng& rng) {
  const std::size_t t = 6;
  const Permutation alpha = target_alpha(t);
  const Permutation id(t);
  const auto planted = default_leakage_registry().make("planted:0.65:0.35", t, alpha);
  const double eps = calibrate_eps_alpha(planted, alpha, t, 20000, rng);
  std::vector<double> errors;
  for (std::size_t m : {10, 100, 1000}) {
    const AmplifierParams p{t, 1, m, eps};
    std::size_t wrong = 0;
    const std::size_t trials = 1000;
    for (std::size_t i = 0; i < trials; ++i) {
      const bool is_alpha = i % 2 == 0;
      const ProductVector x = sample_class(is_alpha ? alpha : id, t, rng);
      const auto out = amplifier_decide(x, planted, p, rng);
      wrong += (out.decision == Decision::Alpha) != is_alpha ? 1 : 0;
    }
    errors.push_back(static_cast<double>(wrong) / static_cast<double>(trials));
  }
  c.require(errors[2] < 0.01, "error at m = 1000 is " + std::to_string(errors[2]));
  c.require(errors[0] > errors[1] && errors[1] > errors[2], "error not strictly decreasing in m");
  char buf[160];
  std::snprintf(buf, sizeof buf, "eps_alpha~%.4f; error m=10: %.3f, m=100: %.3f, m=1000: %.3f", eps,
                errors[0], errors[1], errors[2]);
  if (c.ok) {
    c.detail << buf;
  } else {
    c.detail << " (" << buf << ")";
  }
}

struct CriterionInfo {
  const char* name;
  double limit;
};

constexpr CriterionInfo kCriteria[kCriterionCount] = {
    {"commutator identities", 1},
    {"double-transposition cases on A_6", 5},
    {"convert contract", 60},
    {"local vector maps", 120},
    {"moved-points bound on A_5", 1},
    {"encoding oracle equivalence", 60},
    {"id-product chain", 60},
    {"single-element reduction", 120},
    {"sampler", 30},
    {"distance harness", 60},
    {"amplifier", 120},
};

}  // namespace

CriterionResult run_criterion(int id, const VerifyOptions& opts) {
  if (id < 1 || id > kCriterionCount) throw Error(ErrorCode::InvalidArgument, "no criterion " + std::to_string(id));
  CriterionResult r;
  r.id = id;
  r.name = kCriteria[id - 1].name;
  r.limit_seconds = kCriteria[id - 1].limit;
  Rng rng = criterion_rng(opts.seed, id);
  Check c;
  const auto started = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: identities(c, rng); break;
      case 2: double_transposition_cases(c); break;
      case 3: convert_contract(c, rng); break;
      case 4: local_map_contract(c, rng); break;
      case 5: moved_points_bound(c); break;
      case 6: encode_equivalence(c, rng); break;
      case 7: id_chain(c, rng); break;
      case 8: single_reduction(c, rng, opts.workers); break;
      case 9: sampler(c, rng); break;
      case 10: tvd_harness(c, opts.seed + 10, opts.workers); break;
      case 11: amplifier(c, rng); break;
    }
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail.str("");
    c.detail << "exception: " << e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  r.passed = c.ok && r.seconds < r.limit_seconds;
  r.detail = c.detail.str();
  if (c.ok && !r.passed) r.detail += " [over time limit]";
  return r;
}

std::vector<CriterionResult> run_acceptance(const VerifyOptions& opts,
                                            const std::function<void(const CriterionResult&)>& progress) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), id) == opts.only.end()) continue;
    out.push_back(run_criterion(id, opts));
    if (progress) progress(out.back());
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  char head[128];
  std::snprintf(head, sizeof head, "%s %2d %s (%.2f s / %g s): ", r.passed ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds, r.limit_seconds);
  return head + r.detail;
}

}  // namespace itergroup
