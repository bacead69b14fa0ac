#include "itergroup/reductions.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <limits>
#include <ostream>
#include <thread>

#include "itergroup/cycle_transform.hpp"
#include "itergroup/text_format.hpp"

namespace itergroup {

std::vector<ProductVector> power_vectors(const Permutation& sigma) {
  const std::size_t t = sigma.degree();
  const Permutation id(t);
  std::vector<ProductVector> out;
  out.reserve(t);
  for (std::size_t k = 1; k <= t; ++k) {
    std::vector<Permutation> elems(t, id);
    std::fill(elems.begin(), elems.begin() + static_cast<std::ptrdiff_t>(k), sigma);
    out.emplace_back(std::move(elems));
  }
  return out;
}

ProductVector maps_1_to_t_gadget(const ProductVector& z) {
  const std::size_t t = z.degree();
  const auto tp = static_cast<Point>(t);
  std::vector<Permutation> out;
  out.reserve(2 * z.size() + 2);
  for (const auto& e : z.elements()) out.push_back(e.extended(t + 1));
  out.push_back(Permutation::from_cycles(t + 1, {{tp, tp + 1}}));
  for (std::size_t i = z.size(); i-- > 0;) out.push_back(z[i].inverse().extended(t + 1));
  out.push_back(Permutation::from_cycles(t + 1, {{1, tp + 1}}));
  return ProductVector(std::move(out));
}

Permutation embed_even(const Permutation& a) {
  const std::size_t t = a.degree();
  Permutation m = a.extended(t + 2);
  if (!is_even(a)) {
    const auto p = static_cast<Point>(t + 1);
    m *= Permutation::from_cycles(t + 2, {{p, p + 1}});
  }
  return m;
}

ProductVector embed_even(const ProductVector& v) {
  std::vector<Permutation> out;
  out.reserve(v.size());
  for (const auto& e : v.elements()) out.push_back(embed_even(e));
  return ProductVector(std::move(out), v.provenance());
}

IdInstanceSet bp_to_id_instances(const BranchingProgram& b, std::string_view x) {
  const EncodedInstance enc = encode(b, x);
  const std::size_t t = enc.sigma.degree();
  IdInstanceSet set;
  set.program_hash = program_hash(b);
  set.input = std::string(x);
  set.encoded_degree = t;
  for (const auto& v : power_vectors(enc.sigma)) {
    set.vectors.push_back(embed_even(compress(maps_1_to_t_gadget(v), t + 1)));
  }
  return set;
}

void write_instances(std::ostream& os, const IdInstanceSet& set, PermFormat fmt) {
  const std::size_t degree = set.vectors.empty() ? 0 : set.vectors.front().degree();
  os << "# manifest bp=" << std::hex << std::setw(16) << std::setfill('0') << set.program_hash
     << std::dec << std::setfill(' ') << " x=" << set.input << " stage=id-instances t'="
     << set.encoded_degree << " degree=" << degree << " count=" << set.vectors.size() << '\n';
  for (const auto& v : set.vectors) write_vector(os, v, fmt);
}

Permutation target_alpha(std::size_t t) {
  if (t < 4) throw Error(ErrorCode::DegreeTooSmall, "(1 2)(3 4) needs t >= 4");
  return Permutation::from_cycles(t, {{1, 2}, {3, 4}});
}

std::string_view to_string(PromiseTag tag) noexcept {
  switch (tag) {
    case PromiseTag::Alpha: return "alpha";
    case PromiseTag::Id: return "id";
    case PromiseTag::Unknown: break;
  }
  return "unknown";
}

SingleElementInstance make_instance(ProductVector v) {
  const Permutation f = v.fold();
  PromiseTag tag = PromiseTag::Unknown;
  if (f.is_identity()) {
    tag = PromiseTag::Id;
  } else if (f.degree() >= 4 && f == target_alpha(f.degree())) {
    tag = PromiseTag::Alpha;
  }
  return {std::move(v), tag};
}

Decider exact_fold_decider() {
  return [](const SingleElementInstance& inst) {
    const std::size_t t = inst.vector.degree();
    return t >= 4 && inst.vector.fold() == target_alpha(t);
  };
}

CandidateSpace::CandidateSpace(std::size_t t) : t_(t) {
  if (t < 4) throw Error(ErrorCode::DegreeTooSmall, "candidate space needs t >= 4");
  struct Keyed {
    std::vector<Point> support;
    Permutation p;
  };
  std::vector<Keyed> all;
  const auto tp = static_cast<Point>(t);
  for (Point a = 1; a <= tp; ++a) {
    for (Point b = a + 1; b <= tp; ++b) {
      for (Point c = b + 1; c <= tp; ++c) {
        all.push_back({{a, b, c}, Permutation::from_cycles(t, {{a, b, c}})});
        all.push_back({{a, b, c}, Permutation::from_cycles(t, {{a, c, b}})});
        three_cycles_ += 2;
        for (Point d = c + 1; d <= tp; ++d) {
          all.push_back({{a, b, c, d}, Permutation::from_cycles(t, {{a, b}, {c, d}})});
          all.push_back({{a, b, c, d}, Permutation::from_cycles(t, {{a, c}, {b, d}})});
          all.push_back({{a, b, c, d}, Permutation::from_cycles(t, {{a, d}, {b, c}})});
          double_transpositions_ += 3;
        }
      }
    }
  }
  std::sort(all.begin(), all.end(), [](const Keyed& l, const Keyed& r) {
    if (l.support != r.support) return l.support < r.support;
    return l.p < r.p;
  });
  elements_.reserve(all.size());
  for (auto& k : all) elements_.push_back(std::move(k.p));
}

std::pair<const Permutation&, const Permutation&> CandidateSpace::pair(std::size_t index) const {
  const std::size_t n = elements_.size();
  if (index >= n * n) throw Error(ErrorCode::InvalidArgument, "candidate index out of range");
  return {elements_[index / n], elements_[index % n]};
}

Permutation small_conjugator_to_1234(const Permutation& alpha) {
  if (!is_double_transposition(alpha)) {
    throw Error(ErrorCode::BadShape, format_cycles(alpha) + " is not a double transposition");
  }
  const std::size_t t = alpha.degree();
  const auto cycles = decompose(alpha).cycles;
  const std::vector<Point> from = {cycles[0][0], cycles[0][1], cycles[1][0], cycles[1][1]};

  // g sends a, b, c, d to 1, 2, 3, 4; the rest of the window pairs up in
  // sorted order so that g is a bijection moving only window points.
  std::vector<Point> img(t);
  for (std::size_t i = 0; i < t; ++i) img[i] = static_cast<Point>(i + 1);
  std::vector<Point> sources;
  std::vector<Point> dests;
  for (Point p = 1; p <= 4; ++p) {
    if (std::find(from.begin(), from.end(), p) == from.end()) sources.push_back(p);
  }
  for (Point p : from) {
    if (p > 4) dests.push_back(p);
  }
  std::sort(dests.begin(), dests.end());
  for (std::size_t i = 0; i < 4; ++i) img[from[i] - 1] = static_cast<Point>(i + 1);
  for (std::size_t i = 0; i < sources.size(); ++i) img[sources[i] - 1] = dests[i];
  Permutation g = Permutation::from_images(img);
  if (!is_even(g)) {
    // (a b) commutes with alpha, so it fixes the conjugation and flips parity.
    g = Permutation::from_cycles(t, {{from[0], from[1]}}) * g;
  }
  return g;
}

ProductVector apply_candidate(const ProductVector& x, const GammaTuple& g) {
  ProductVector v = comm_step_vector(x, g.gamma1);
  v = comm_step_vector(v, g.gamma2);
  v = conj_step_vector(v, g.gamma3);
  return compress(v, x.size());
}

GammaTuple derive_gamma3(const Permutation& product, const Permutation& g1, const Permutation& g2) {
  const Permutation a = commutator(commutator(product, g1), g2);
  Permutation g3 = is_double_transposition(a) ? small_conjugator_to_1234(a) : Permutation(a.degree());
  return {g1, g2, std::move(g3)};
}

std::string_view to_string(CandidateMode mode) noexcept {
  switch (mode) {
    case CandidateMode::Constructive: return "constructive";
    case CandidateMode::Derived: return "derived";
    case CandidateMode::FullEnumeration: return "full";
  }
  return "constructive";
}

CandidateMode parse_candidate_mode(std::string_view name) {
  if (name == "constructive") return CandidateMode::Constructive;
  if (name == "derived") return CandidateMode::Derived;
  if (name == "full") return CandidateMode::FullEnumeration;
  throw Error(ErrorCode::InvalidArgument, "unknown candidate mode '" + std::string(name) + "'");
}

namespace {

constexpr std::size_t kBlock = 64;
constexpr std::size_t kWindow = 8;

/// Returns the smallest index in [0, limit) where hit(index) holds, or limit.
template <typename Hit>
std::size_t first_hit(std::size_t limit, std::size_t workers, const Hit& hit) {
  std::atomic<std::size_t> next_block{0};
  std::atomic<std::size_t> best{limit};
  auto work = [&] {
    for (;;) {
      const std::size_t start = next_block.fetch_add(1) * kBlock;
      if (start >= limit || start >= best.load()) return;
      const std::size_t end = std::min(limit, start + kBlock);
      for (std::size_t i = start; i < end && i < best.load(); ++i) {
        if (!hit(i)) continue;
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
        return;
      }
    }
  };
  workers = std::max<std::size_t>(1, workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return best.load();
}

}  // namespace

ReductionResult reduce_id_to_single(const ProductVector& x, const Decider& decide,
                                    const ReductionOptions& opts) {
  const std::size_t t = x.degree();
  if (t < kWindow) throw Error(ErrorCode::DegreeTooSmall, "reduction needs t >= 8");
  if (x.size() != t) {
    throw Error(ErrorCode::LengthMismatch, "vector length " + std::to_string(x.size()) +
                                               " differs from degree " + std::to_string(t));
  }
  if (!x.all_even()) throw Error(ErrorCode::OddInput, "vector elements must be even");

  const Permutation product = x.fold();
  auto accepts = [&](const GammaTuple& g) { return decide(make_instance(apply_candidate(x, g))); };

  ReductionResult res;
  if (opts.mode == CandidateMode::Constructive && !product.is_identity()) {
    const TransformScript s = to_double_transposition(product);
    GammaTuple g{s.steps.at(0).gamma(), s.steps.at(1).gamma(), small_conjugator_to_1234(s.target)};
    if (accepts(g)) {
      res.decided_alpha = true;
      res.direct_witness = true;
      res.witness = std::move(g);
      return res;
    }
  }

  const CandidateSpace space(t);
  std::vector<Permutation> window;
  if (opts.mode == CandidateMode::FullEnumeration) {
    if (t != kWindow) {
      throw Error(ErrorCode::InvalidArgument, "full enumeration covers every g3 only at t = 8");
    }
    for (const auto& w : all_even_permutations(kWindow)) window.push_back(w.extended(t));
  }
  const std::size_t per_pair = window.empty() ? 1 : window.size();
  res.stream_size = space.pair_count() * per_pair;
  const std::size_t limit = opts.budget == 0 ? res.stream_size : std::min(opts.budget, res.stream_size);

  auto tuple_at = [&](std::size_t i) {
    auto [g1, g2] = space.pair(i / per_pair);
    if (window.empty()) return derive_gamma3(product, g1, g2);
    return GammaTuple{g1, g2, window[i % per_pair]};
  };
  const std::size_t hit = first_hit(limit, opts.workers, [&](std::size_t i) { return accepts(tuple_at(i)); });
  if (hit < limit) {
    res.decided_alpha = true;
    res.witness = tuple_at(hit);
    res.witness_index = hit;
    res.examined = hit + 1;
  } else {
    res.examined = limit;
    res.exhausted = limit == res.stream_size;
  }
  return res;
}

}  // namespace itergroup
