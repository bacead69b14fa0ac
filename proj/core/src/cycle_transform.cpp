#include "itergroup/cycle_transform.hpp"

#include <algorithm>
#include <cassert>
#include <istream>
#include <ostream>
#include <sstream>

#include "itergroup/text_format.hpp"

namespace itergroup {

TransformStep::TransformStep(StepKind kind, Permutation gamma, std::string tag)
    : kind_(kind), gamma_(std::move(gamma)), tag_(std::move(tag)) {
  if (!is_even(gamma_)) {
    throw Error(ErrorCode::OddGamma, "step permutation " + format_cycles(gamma_) + " is odd");
  }
}

Permutation TransformStep::apply(const Permutation& a) const {
  return kind_ == StepKind::Conj ? conjugate(a, gamma_) : commutator(a, gamma_);
}

std::size_t TransformScript::comm_count() const {
  return static_cast<std::size_t>(std::count_if(
      steps.begin(), steps.end(), [](const TransformStep& s) { return s.kind() == StepKind::Comm; }));
}

std::size_t TransformScript::conj_count() const { return steps.size() - comm_count(); }

std::size_t ceil_log2(std::size_t n) {
  std::size_t r = 0;
  while ((std::size_t{1} << r) < n) ++r;
  return r;
}

Permutation apply_steps(const Permutation& a, const std::vector<TransformStep>& steps) {
  Permutation cur = a;
  for (const auto& s : steps) {
    if (s.gamma().degree() != cur.degree()) {
      throw Error(ErrorCode::DegreeMismatch, "script step degree differs from input");
    }
    cur = s.apply(cur);
  }
  return cur;
}

Permutation apply_script(const Permutation& a, const TransformScript& s) {
  if (a.degree() != s.degree) {
    throw Error(ErrorCode::DegreeMismatch, "script has degree " + std::to_string(s.degree) +
                                               ", input has " + std::to_string(a.degree()));
  }
  return apply_steps(a, s.steps);
}

namespace {

// Hands out the smallest points not yet in use.
class FreshPoints {
public:
  explicit FreshPoints(const Permutation& support_of) : used_(support_of.degree(), false) {
    for (Point p : moved_points(support_of)) used_[p - 1] = true;
  }

  void reserve(Point p) { used_[p - 1] = true; }

  Point take() {
    for (std::size_t i = 0; i < used_.size(); ++i) {
      if (!used_[i]) {
        used_[i] = true;
        return static_cast<Point>(i + 1);
      }
    }
    throw Error(ErrorCode::NoFreshPoints, "no unused point left in degree " +
                                              std::to_string(used_.size()));
  }

private:
  std::vector<bool> used_;
};

Permutation cycles_perm(std::size_t t, std::vector<Cycle> cycles) {
  return Permutation::from_cycles(t, cycles);
}

TransformScript make_script(const Permutation& source, std::vector<TransformStep> steps) {
  TransformScript s;
  s.degree = source.degree();
  s.source = source;
  s.steps = std::move(steps);
  s.target = apply_steps(source, s.steps);
  return s;
}

void append(std::vector<TransformStep>& out, const TransformScript& s) {
  out.insert(out.end(), s.steps.begin(), s.steps.end());
}

// One commutation that either lands on a double transposition or, for the
// long-cycle case, on a 3-cycle.
Permutation first_gamma(const Permutation& a, std::string& tag) {
  const std::size_t t = a.degree();
  const auto cycles = decompose(a).cycles;
  std::vector<const Cycle*> twos, threes;
  const Cycle* four = nullptr;
  const Cycle* longer = nullptr;
  for (const auto& c : cycles) {
    if (c.size() == 2) twos.push_back(&c);
    else if (c.size() == 3) threes.push_back(&c);
    else if (c.size() == 4 && !four) four = &c;
    else if (c.size() >= 5 && !longer) longer = &c;
  }

  if (twos.size() >= 2) {
    // [(a b)(c d), (a b c)] = (a d)(b c)
    tag = "two transpositions";
    const Cycle& x = *twos[0];
    const Cycle& y = *twos[1];
    return cycles_perm(t, {{x[0], x[1], y[0]}});
  }
  if (cycles.size() == 1 && threes.size() == 1) {
    // [(a b c), (a b)(c d)] = (a d)(b c)
    tag = "3-cycle";
    const Cycle& x = *threes[0];
    FreshPoints fresh(a);
    const Point d = fresh.take();
    return cycles_perm(t, {{x[0], x[1]}, {x[2], d}});
  }
  if (threes.size() >= 2) {
    // [(a b c)(d e f), (a d)(c f)] = (a d)(b e)
    tag = "two 3-cycles";
    const Cycle& x = *threes[0];
    const Cycle& y = *threes[1];
    return cycles_perm(t, {{x[0], y[0]}, {x[2], y[2]}});
  }
  if (four) {
    // [(a b c d), (a b)(c d)] = (a c)(b d)
    tag = "4-cycle";
    const Cycle& x = *four;
    return cycles_perm(t, {{x[0], x[1]}, {x[2], x[3]}});
  }
  if (longer) {
    // [(a1 .. ak), (a2 a3 a4)] = (a1 a4 a3)
    tag = "long cycle";
    const Cycle& x = *longer;
    return cycles_perm(t, {{x[1], x[2], x[3]}});
  }
  // Every even non-identity permutation falls in one of the cases above.
  throw Error(ErrorCode::BadSourceShape, "unreachable cycle structure " + format_cycles(a));
}

}  // namespace

TransformScript to_double_transposition(const Permutation& a) {
  if (a.degree() < 4) throw Error(ErrorCode::DegreeTooSmall, "need t >= 4");
  if (a.is_identity()) throw Error(ErrorCode::IdentityInput, "input is the identity");
  if (!is_even(a)) throw Error(ErrorCode::OddInput, "input " + format_cycles(a) + " is odd");

  std::vector<TransformStep> steps;
  std::string tag;
  Permutation g1 = first_gamma(a, tag);
  steps.emplace_back(StepKind::Comm, g1, "double-transposition: " + tag);
  const Permutation mid = commutator(a, g1);

  if (is_double_transposition(mid)) {
    // Second commutation keeps the shape: [(a b)(c d), (a b c)] = (a d)(b c).
    const auto c = decompose(mid).cycles;
    steps.emplace_back(StepKind::Comm, cycles_perm(a.degree(), {{c[0][0], c[0][1], c[1][0]}}),
                       "double-transposition: maintain");
  } else {
    // Long-cycle case left a 3-cycle.
    std::string tag2;
    Permutation g2 = first_gamma(mid, tag2);
    steps.emplace_back(StepKind::Comm, g2, "double-transposition: " + tag2);
  }
  auto s = make_script(a, std::move(steps));
  assert(is_double_transposition(s.target));
  return s;
}

TransformScript grow_transpositions(const Permutation& a, std::size_t k) {
  const std::size_t t = a.degree();
  std::size_t j = 0;
  if (!is_transposition_product(a, &j) || j < 2 || j % 2 != 0) {
    throw Error(ErrorCode::NotTranspositionProduct,
                format_cycles(a) + " is not a product of an even number >= 2 of transpositions");
  }
  if (k % 2 != 0) throw Error(ErrorCode::InvalidArgument, "target count must be even");
  if (2 * k > t) {
    throw Error(ErrorCode::TargetTooLarge,
                std::to_string(k) + " transpositions do not fit in degree " + std::to_string(t));
  }
  if (k < j) {
    throw Error(ErrorCode::TargetTooSmall, "cannot reduce " + std::to_string(j) +
                                               " transpositions to " + std::to_string(k));
  }

  std::vector<TransformStep> steps;
  Permutation cur = a;
  while (j < k) {
    const std::size_t doubled = std::min(j, k - j);
    const auto pairs = decompose(cur).cycles;
    FreshPoints fresh(cur);
    std::vector<Cycle> gamma;
    for (std::size_t p = 0; p + 1 < pairs.size(); p += 2) {
      const Cycle& x = pairs[p];
      const Cycle& y = pairs[p + 1];
      if (p < doubled) {
        // (a b)(c d) with (a e)(b f)(c g)(d h) -> (a b)(c d)(e f)(g h)
        for (Point q : {x[0], x[1], y[0], y[1]}) gamma.push_back({q, fresh.take()});
      } else {
        gamma.push_back({x[0], x[1], y[0]});
      }
    }
    Permutation g = cycles_perm(t, gamma);
    steps.emplace_back(StepKind::Comm, g,
                       "grow: " + std::to_string(j) + " -> " + std::to_string(j + doubled));
    cur = commutator(cur, g);
    j += doubled;
  }
  return make_script(a, std::move(steps));
}

std::size_t odd_cycle_source_pairs(std::size_t k) {
  return ((k - 1) / 2) % 2 == 0 ? (k - 1) / 2 : (k - 3) / 2;
}

std::size_t even_pair_source_pairs(std::size_t k) {
  return (k / 2) % 2 == 0 ? k / 2 : k / 2 - 1;
}

TransformScript build_odd_cycle(const Permutation& a, const Permutation& beta) {
  const std::size_t t = a.degree();
  if (beta.degree() != t) throw Error(ErrorCode::DegreeMismatch, "beta degree differs");
  const auto bd = decompose(beta);
  if (t % 2 != 0) throw Error(ErrorCode::BadTargetShape, "degree must be even");
  if (bd.cycles.size() != 1 || bd.cycles[0].size() % 2 == 0 || bd.cycles[0].size() < 5 ||
      bd.cycles[0].size() > t - 1) {
    throw Error(ErrorCode::BadTargetShape,
                format_cycles(beta) + " is not a single odd cycle of length in [5, t-1]");
  }
  const std::size_t k = bd.cycles[0].size();
  const std::size_t n = odd_cycle_source_pairs(k);
  std::size_t pairs = 0;
  if (!is_transposition_product(a, &pairs) || pairs != n) {
    throw Error(ErrorCode::BadSourceShape,
                "expected a product of " + std::to_string(n) + " disjoint transpositions, got " +
                    format_cycles(a));
  }

  // Build on the standard labels a_i = 2i-1, b_i = 2i, c = 2n+1 first.
  std::vector<Cycle> std_pairs;
  Cycle gamma_cycle;
  for (Point i = 1; i <= n; ++i) {
    std_pairs.push_back({2 * i - 1, 2 * i});
    gamma_cycle.push_back(2 * i - 1);
    gamma_cycle.push_back(2 * i);
  }
  const Permutation alpha0 = cycles_perm(t, std_pairs);
  FreshPoints fresh(alpha0);
  gamma_cycle.push_back(fresh.take());
  // [(a1 b1)..(an bn), (a1 b1 .. an bn c)] = (a1 .. an bn .. b1 c)
  const Permutation g2 = cycles_perm(t, {gamma_cycle});
  const Permutation mu = commutator(alpha0, g2);

  std::vector<Permutation> comm_gammas{g2};
  Permutation built = mu;
  if (n != (k - 1) / 2) {
    // mu is a (k-2)-cycle (m1 .. m_{k-2}); pi = (m1 c1 c2 c3 m3 m4 .. m_{k-5} m2)
    // is another (k-2)-cycle with mu * pi a k-cycle. Commutating with g such
    // that g mu^-1 g^-1 == pi produces mu * pi.
    Cycle m{1};
    for (Point q = mu(1); q != 1; q = mu(q)) m.push_back(q);
    assert(m.size() == k - 2);
    FreshPoints extra(mu);
    Cycle pi_cycle{m[0]};
    for (int i = 0; i < 3; ++i) pi_cycle.push_back(extra.take());
    for (std::size_t i = 2; i + 5 <= k - 1; ++i) pi_cycle.push_back(m[i]);  // m3 .. m_{k-5}
    pi_cycle.push_back(m[1]);
    const Permutation pi = cycles_perm(t, {pi_cycle});
    const Permutation g3 = conjugator_in_A(mu.inverse(), pi).inverse();
    comm_gammas.push_back(g3);
    built = commutator(mu, g3);
  }
  assert(cycle_type(built) == std::vector<std::size_t>{k});

  // Relabel the whole construction so it lands on beta; a conjugation first
  // moves the given source onto the relabeled standard source.
  const Permutation rho = conjugator_in_S(built, beta);
  const Permutation alpha1 = conjugate(alpha0, rho);
  std::vector<TransformStep> steps;
  steps.emplace_back(StepKind::Conj, conjugator_in_A(a, alpha1), "odd-cycle: relabel source");
  for (std::size_t i = 0; i < comm_gammas.size(); ++i) {
    steps.emplace_back(StepKind::Comm, conjugate(comm_gammas[i], rho),
                       i == 0 ? "odd-cycle: transpositions to cycle"
                              : "odd-cycle: extend (k-2)-cycle");
  }
  auto s = make_script(a, std::move(steps));
  assert(s.target == beta);
  return s;
}

TransformScript build_even_cycle_pair(const Permutation& a, const Permutation& beta) {
  const std::size_t t = a.degree();
  if (beta.degree() != t) throw Error(ErrorCode::DegreeMismatch, "beta degree differs");
  if (t % 4 != 2) throw Error(ErrorCode::DegreeNotTwoModFour, "t = " + std::to_string(t));
  auto bd = decompose(beta).cycles;
  if (bd.size() != 2 || bd[0].size() % 2 != 0 || bd[1].size() % 2 != 0) {
    throw Error(ErrorCode::BadTargetShape,
                format_cycles(beta) + " is not a product of two even-length cycles");
  }
  const std::size_t k1 = std::min(bd[0].size(), bd[1].size());
  const std::size_t k2 = std::max(bd[0].size(), bd[1].size());
  const std::size_t k = k1 + k2;
  const std::size_t n = even_pair_source_pairs(k);
  std::size_t pairs = 0;
  if (!is_transposition_product(a, &pairs) || pairs != n) {
    throw Error(ErrorCode::BadSourceShape,
                "expected a product of " + std::to_string(n) + " disjoint transpositions, got " +
                    format_cycles(a));
  }

  std::vector<TransformStep> steps;
  if (k1 == 2 && k2 == 2) {
    steps.emplace_back(StepKind::Conj, conjugator_in_A(a, beta), "even-cycles: conjugate");
    return make_script(a, std::move(steps));
  }

  const auto tr = decompose(a).cycles;
  FreshPoints fresh(a);
  const Point e1 = fresh.take();
  const Point e2 = fresh.take();
  std::vector<Cycle> pi_cycles;
  if (k1 == 2 && k2 == 4) {
    // (a b)(c d) * (c e)(d f) = (a b)(c f d e)
    pi_cycles = {{tr[1][0], e1}, {tr[1][1], e2}};
  } else {
    // Label the transpositions (a_i b_i), i <= k1/2, then (c_i d_i). The
    // shorter cycle takes the a-block; the formulas need the c-block to have
    // at least two pairs (three in the k/2 - 1 case), which holds once the
    // (2,2) and (2,4) shapes are excluded.
    const std::size_t k1p = k1 / 2;
    const std::size_t k2p = k2 / 2;
    auto A = [&](std::size_t i) { return tr[i - 1][0]; };
    auto B = [&](std::size_t i) { return tr[i - 1][1]; };
    auto C = [&](std::size_t i) { return tr[k1p + i - 1][0]; };
    auto D = [&](std::size_t i) { return tr[k1p + i - 1][1]; };
    for (std::size_t i = 1; i + 1 <= k1p; ++i) pi_cycles.push_back({A(i + 1), B(i)});
    if (n == k / 2) {
      for (std::size_t i = 1; i + 2 <= k2p; ++i) pi_cycles.push_back({C(i + 1), D(i)});
      pi_cycles.push_back({D(k2p - 1), e1});
      pi_cycles.push_back({C(k2p), D(k2p)});
      pi_cycles.push_back({C(1), e2});
    } else {
      for (std::size_t i = 1; i + 3 <= k2p; ++i) pi_cycles.push_back({C(i + 1), D(i)});
      pi_cycles.push_back({C(1), C(k2p - 1)});
      pi_cycles.push_back({D(k2p - 2), e1});
      pi_cycles.push_back({D(k2p - 1), e2});
    }
  }
  const Permutation pi = cycles_perm(t, pi_cycles);
  // a is an involution, so g a^-1 g^-1 == pi for g = conjugator(a, pi)^-1.
  const Permutation g1 = conjugator_in_A(a, pi).inverse();
  const Permutation mid = commutator(a, g1);
  assert((cycle_type(mid) == std::vector<std::size_t>{k1, k2}));
  steps.emplace_back(StepKind::Comm, g1, "even-cycles: transpositions to cycle pair");
  steps.emplace_back(StepKind::Conj, conjugator_in_A(mid, beta), "even-cycles: relabel");
  auto s = make_script(a, std::move(steps));
  assert(s.target == beta);
  return s;
}

TransformScript convert(const Permutation& a, const Permutation& beta) {
  const std::size_t t = a.degree();
  if (beta.degree() != t) throw Error(ErrorCode::DegreeMismatch, "beta degree differs");
  if (t % 4 != 2) throw Error(ErrorCode::DegreeNotTwoModFour, "t = " + std::to_string(t));
  if (a.is_identity()) throw Error(ErrorCode::IdentityInput, "input is the identity");
  if (!is_even(a)) throw Error(ErrorCode::OddInput, "input " + format_cycles(a) + " is odd");

  const auto bd = decompose(beta).cycles;
  enum class Shape { OddCycle, ThreeCycle, EvenPair } shape;
  std::size_t n = 0;
  if (bd.size() == 1 && bd[0].size() % 2 == 1 && bd[0].size() >= 5) {
    shape = Shape::OddCycle;
    n = odd_cycle_source_pairs(bd[0].size());
  } else if (bd.size() == 1 && bd[0].size() == 3) {
    shape = Shape::ThreeCycle;
    n = odd_cycle_source_pairs(5);
  } else if (bd.size() == 2 && bd[0].size() % 2 == 0 && bd[1].size() % 2 == 0) {
    shape = Shape::EvenPair;
    n = even_pair_source_pairs(bd[0].size() + bd[1].size());
  } else {
    throw Error(ErrorCode::UnsupportedTarget,
                format_cycles(beta) +
                    " is neither an odd cycle nor a product of two even-length cycles");
  }

  std::vector<TransformStep> steps;
  const auto s1 = to_double_transposition(a);
  append(steps, s1);
  const auto s2 = grow_transpositions(s1.target, n);
  append(steps, s2);

  if (shape == Shape::OddCycle) {
    append(steps, build_odd_cycle(s2.target, beta));
  } else if (shape == Shape::EvenPair) {
    append(steps, build_even_cycle_pair(s2.target, beta));
  } else {
    // Detour through a 5-cycle (a1 .. a5) chosen so that commutating with
    // (a2 a3 a4) gives (a1 a4 a3) == beta directly.
    const Cycle& b = bd[0];
    FreshPoints fresh(beta);
    const Point a2 = fresh.take();
    const Point a5 = fresh.take();
    const Permutation five = cycles_perm(t, {{b[0], a2, b[2], b[1], a5}});
    const auto s3 = build_odd_cycle(s2.target, five);
    append(steps, s3);
    const Permutation g = cycles_perm(t, {{a2, b[2], b[1]}});
    steps.emplace_back(StepKind::Comm, g, "3-cycle: shrink 5-cycle");
    const Permutation three = commutator(five, g);
    steps.emplace_back(StepKind::Conj, conjugator_in_A(three, beta), "3-cycle: relabel");
  }

  auto s = make_script(a, std::move(steps));
  if (s.target != beta) {
    throw Error(ErrorCode::UnsupportedTarget, "internal: script does not reach target");
  }
  return s;
}

std::size_t degree_two_mod_four(std::size_t t) { return t + (6 - t % 4) % 4; }

void write_script(std::ostream& os, const TransformScript& s) {
  os << "script " << s.degree << '\n';
  os << "source " << format_cycles(s.source) << '\n';
  os << "target " << format_cycles(s.target) << '\n';
  for (const auto& step : s.steps) {
    os << (step.kind() == StepKind::Conj ? "conj " : "comm ") << format_cycles(step.gamma());
    if (!step.tag().empty()) os << "  # " << step.tag();
    os << '\n';
  }
}

TransformScript read_script(std::istream& is) {
  TransformScript s;
  std::string line;
  bool have_header = false;
  bool have_source = false;
  bool have_target = false;
  while (std::getline(is, line)) {
    std::string tag;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      tag = line.substr(hash + 1);
      tag.erase(0, tag.find_first_not_of(' '));
      line.erase(hash);
    }
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    std::string rest;
    std::getline(ls, rest);
    if (key == "script") {
      s.degree = std::stoul(rest);
      have_header = true;
      continue;
    }
    if (!have_header) throw Error(ErrorCode::ParseError, "script header missing");
    const Permutation p = parse_permutation(rest, s.degree);
    if (key == "source") {
      s.source = p;
      have_source = true;
    } else if (key == "target") {
      s.target = p;
      have_target = true;
    } else if (key == "conj" || key == "comm") {
      s.steps.emplace_back(key == "conj" ? StepKind::Conj : StepKind::Comm, p, tag);
    } else {
      throw Error(ErrorCode::ParseError, "unknown script line '" + key + "'");
    }
  }
  if (!have_header || !have_source || !have_target) {
    throw Error(ErrorCode::ParseError, "script needs header, source and target lines");
  }
  return s;
}

}  // namespace itergroup
