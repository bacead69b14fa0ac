#include "itergroup/product_map.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "itergroup/text_format.hpp"

namespace itergroup {

Provenance merge(const Provenance& a, const Provenance& b) {
  using K = Provenance::Kind;
  if (a.kind == K::Constant) return b;
  if (b.kind == K::Constant) return a;
  if (a.kind == K::Source && b.kind == K::Source && a.index == b.index) return a;
  return Provenance::mixed();
}

ProductVector::ProductVector(std::vector<Permutation> elements)
    : ProductVector(std::move(elements), {}) {
  provenance_.clear();
  for (std::size_t i = 0; i < elements_.size(); ++i) provenance_.push_back(Provenance::source(i));
}

ProductVector::ProductVector(std::vector<Permutation> elements, std::vector<Provenance> provenance)
    : elements_(std::move(elements)), provenance_(std::move(provenance)) {
  if (elements_.empty()) throw Error(ErrorCode::InvalidArgument, "empty product vector");
  degree_ = elements_.front().degree();
  for (const auto& e : elements_) {
    if (e.degree() != degree_) throw Error(ErrorCode::DegreeMismatch, "mixed degrees in vector");
  }
  if (provenance_.empty()) provenance_.assign(elements_.size(), Provenance::constant());
  if (provenance_.size() != elements_.size()) {
    throw Error(ErrorCode::LengthMismatch, "provenance length differs from element count");
  }
}

Permutation ProductVector::fold() const {
  Permutation acc(degree_);
  for (const auto& e : elements_) acc *= e;
  return acc;
}

bool ProductVector::all_even() const {
  for (const auto& e : elements_) {
    if (!is_even(e)) return false;
  }
  return true;
}

ProductVector ProductVector::extended(std::size_t degree) const {
  std::vector<Permutation> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) out.push_back(e.extended(degree));
  return ProductVector(std::move(out), provenance_);
}

namespace {

void require_even_gamma(const Permutation& g, std::size_t degree) {
  if (g.degree() != degree) throw Error(ErrorCode::DegreeMismatch, "step degree differs");
  if (!is_even(g)) throw Error(ErrorCode::OddGamma, format_cycles(g) + " is odd");
}

}  // namespace

ProductVector conj_step_vector(const ProductVector& v, const Permutation& g) {
  require_even_gamma(g, v.degree());
  std::vector<Permutation> out = v.elements();
  out.front() = g.inverse() * out.front();
  out.back() = out.back() * g;
  return ProductVector(std::move(out), v.provenance());
}

ProductVector comm_step_vector(const ProductVector& v, const Permutation& g) {
  require_even_gamma(g, v.degree());
  const std::size_t m = v.size();
  std::vector<Permutation> out = v.elements();
  std::vector<Provenance> prov = v.provenance();
  out.reserve(2 * m);
  prov.reserve(2 * m);
  out.back() = out.back() * g;
  for (std::size_t i = m; i-- > 0;) {
    out.push_back(v[i].inverse());
    prov.push_back(v.provenance()[i]);
  }
  out.back() = out.back() * g.inverse();
  return ProductVector(std::move(out), std::move(prov));
}

ProductVector apply_script_to_vector(const ProductVector& v, const TransformScript& s) {
  ProductVector cur = v;
  for (const auto& step : s.steps) {
    cur = step.kind() == StepKind::Conj ? conj_step_vector(cur, step.gamma())
                                        : comm_step_vector(cur, step.gamma());
  }
  return cur;
}

ProductVector compress(const ProductVector& v, std::size_t target_len) {
  if (target_len == 0) throw Error(ErrorCode::InvalidArgument, "target length must be >= 1");
  std::vector<Permutation> out;
  std::vector<Provenance> prov;
  if (v.size() <= target_len) {
    out = v.elements();
    prov = v.provenance();
    out.resize(target_len, Permutation(v.degree()));
    prov.resize(target_len, Provenance::constant());
    return ProductVector(std::move(out), std::move(prov));
  }
  const std::size_t base = v.size() / target_len;
  const std::size_t extra = v.size() % target_len;
  std::size_t pos = 0;
  for (std::size_t g = 0; g < target_len; ++g) {
    const std::size_t len = base + (g < extra ? 1 : 0);
    Permutation acc = v[pos];
    Provenance p = v.provenance()[pos];
    for (std::size_t i = 1; i < len; ++i) {
      acc *= v[pos + i];
      p = merge(p, v.provenance()[pos + i]);
    }
    out.push_back(std::move(acc));
    prov.push_back(p);
    pos += len;
  }
  return ProductVector(std::move(out), std::move(prov));
}

std::vector<MapCell> lift_script(const TransformScript& s, std::size_t m) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "input length must be >= 1");
  const Permutation id(s.degree);
  std::vector<MapCell> cells;
  for (std::size_t i = 0; i < m; ++i) cells.push_back({id, i, false, id});
  for (const auto& step : s.steps) {
    const Permutation& g = step.gamma();
    if (step.kind() == StepKind::Conj) {
      cells.front().left = g.inverse() * cells.front().left;
      cells.back().right = cells.back().right * g;
      continue;
    }
    const std::size_t n = cells.size();
    std::vector<MapCell> next = cells;
    next.reserve(2 * n);
    next.back().right = next.back().right * g;
    // (L x^s R)^-1 == R^-1 x^-s L^-1
    for (std::size_t i = n; i-- > 0;) {
      const MapCell& c = cells[i];
      next.push_back({c.right.inverse(), c.source, !c.inverted, c.left.inverse()});
    }
    next.back().right = next.back().right * g.inverse();
    cells = std::move(next);
  }
  return cells;
}

std::vector<Permutation> map_components(const Permutation& beta) {
  const std::size_t t = beta.degree();
  std::vector<Permutation> out;
  std::vector<Cycle> pending_even;
  for (const auto& c : decompose(beta).cycles) {
    if (c.size() % 2 == 1) {
      out.push_back(Permutation::from_cycles(t, {c}));
      continue;
    }
    pending_even.push_back(c);
    if (pending_even.size() == 2) {
      out.push_back(Permutation::from_cycles(t, pending_even));
      pending_even.clear();
    }
  }
  if (!pending_even.empty()) {
    throw Error(ErrorCode::OddInput, format_cycles(beta) + " has an odd number of even cycles");
  }
  return out;
}

VectorMap::VectorMap(std::size_t degree, std::size_t input_length, std::vector<MapBlock> blocks,
                     bool identity_shortcut)
    : degree_(degree),
      input_length_(input_length),
      blocks_(std::move(blocks)),
      identity_(identity_shortcut) {}

std::size_t VectorMap::output_length() const {
  if (identity_) return input_length_;
  std::size_t n = 0;
  for (const auto& b : blocks_) n += b.cells.size();
  return n;
}

ProductVector VectorMap::apply(const ProductVector& x) const {
  if (x.size() != input_length_) {
    throw Error(ErrorCode::LengthMismatch, "map expects " + std::to_string(input_length_) +
                                               " elements, got " + std::to_string(x.size()));
  }
  if (x.degree() != degree_) throw Error(ErrorCode::DegreeMismatch, "vector degree differs");
  if (identity_) {
    std::vector<Provenance> prov;
    for (std::size_t i = 0; i < x.size(); ++i) prov.push_back(Provenance::source(i));
    return ProductVector(x.elements(), std::move(prov));
  }
  std::vector<Permutation> out;
  std::vector<Provenance> prov;
  out.reserve(output_length());
  prov.reserve(output_length());
  std::vector<Permutation> inverses(x.size(), Permutation(degree_));
  for (std::size_t i = 0; i < x.size(); ++i) inverses[i] = x[i].inverse();
  for (const auto& b : blocks_) {
    for (const auto& c : b.cells) {
      out.push_back(c.left * (c.inverted ? inverses[c.source] : x[c.source]) * c.right);
      prov.push_back(Provenance::source(c.source));
    }
  }
  return ProductVector(std::move(out), std::move(prov));
}

VectorMap build_alpha_to_beta(const Permutation& alpha, const Permutation& beta, std::size_t m) {
  const std::size_t t = alpha.degree();
  if (beta.degree() != t) throw Error(ErrorCode::DegreeMismatch, "alpha and beta degrees differ");
  if (t % 4 != 2) throw Error(ErrorCode::DegreeNotTwoModFour, "t = " + std::to_string(t));
  if (alpha.is_identity() || beta.is_identity()) {
    throw Error(ErrorCode::IdentityElement, "alpha and beta must differ from the identity");
  }
  if (!is_even(alpha) || !is_even(beta)) {
    throw Error(ErrorCode::OddInput, "alpha and beta must be even");
  }
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "input length must be >= 1");
  if (alpha == beta) return VectorMap(t, m, {}, true);

  std::vector<MapBlock> blocks;
  for (auto& comp : map_components(beta)) {
    MapBlock b{comp, convert(alpha, comp), {}};
    b.cells = lift_script(b.script, m);
    blocks.push_back(std::move(b));
  }
  return VectorMap(t, m, std::move(blocks), false);
}

ProductVector apply_vector_map(const VectorMap& f, const ProductVector& x) { return f.apply(x); }

void write_vector(std::ostream& os, const ProductVector& v, PermFormat fmt) {
  os << "vector " << v.degree() << ' ' << v.size() << '\n';
  for (const auto& e : v.elements()) os << format_permutation(e, fmt) << '\n';
}

ProductVector read_vector(std::istream& is) {
  std::string line;
  std::size_t t = 0;
  std::size_t len = 0;
  bool have_header = false;
  std::vector<Permutation> elems;
  while (std::getline(is, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') {
      if (have_header && elems.size() == len) break;
      continue;
    }
    if (!have_header) {
      std::istringstream hs(line);
      std::string key;
      if (!(hs >> key >> t >> len) || key != "vector" || t == 0 || len == 0) {
        throw Error(ErrorCode::ParseError, "bad vector header '" + line + "'");
      }
      have_header = true;
      continue;
    }
    elems.push_back(parse_permutation(line, t));
    if (elems.size() == len) break;
  }
  if (!have_header) throw Error(ErrorCode::ParseError, "missing vector header");
  if (elems.size() != len) {
    throw Error(ErrorCode::LengthMismatch, "vector header announces " + std::to_string(len) +
                                               " elements, found " + std::to_string(elems.size()));
  }
  return ProductVector(std::move(elems));
}

void write_map(std::ostream& os, const VectorMap& f) {
  os << "map " << f.degree() << " inputs " << f.input_length() << " outputs "
     << f.output_length() << " blocks " << f.blocks().size() << '\n';
  if (f.is_identity_map()) {
    os << "identity\n";
    return;
  }
  for (std::size_t i = 0; i < f.blocks().size(); ++i) {
    const auto& b = f.blocks()[i];
    os << "block " << i << " component " << format_cycles(b.component) << " steps "
       << b.script.steps.size() << " cells " << b.cells.size() << '\n';
    for (const auto& step : b.script.steps) {
      os << "  " << (step.kind() == StepKind::Conj ? "conj " : "comm ")
         << format_cycles(step.gamma()) << '\n';
    }
  }
}

}  // namespace itergroup
