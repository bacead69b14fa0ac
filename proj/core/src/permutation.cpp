#include "itergroup/permutation.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace itergroup {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::MalformedCycles: return "MalformedCycles";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotConjugate: return "NotConjugate";
    case ErrorCode::NotConjugateInA: return "NotConjugateInA";
    case ErrorCode::OddInput: return "OddInput";
    case ErrorCode::OddGamma: return "OddGamma";
    case ErrorCode::IdentityInput: return "IdentityInput";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::NotTranspositionProduct: return "NotTranspositionProduct";
    case ErrorCode::TargetTooLarge: return "TargetTooLarge";
    case ErrorCode::TargetTooSmall: return "TargetTooSmall";
    case ErrorCode::BadTargetShape: return "BadTargetShape";
    case ErrorCode::BadSourceShape: return "BadSourceShape";
    case ErrorCode::NoFreshPoints: return "NoFreshPoints";
    case ErrorCode::DegreeNotTwoModFour: return "DegreeNotTwoModFour";
    case ErrorCode::UnsupportedTarget: return "UnsupportedTarget";
    case ErrorCode::IdentityElement: return "IdentityElement";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::MalformedProgram: return "MalformedProgram";
    case ErrorCode::PointOutOfRange: return "PointOutOfRange";
    case ErrorCode::BadShape: return "BadShape";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::OutputTooWide: return "OutputTooWide";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string_view to_string(Parity p) noexcept {
  return p == Parity::Even ? "even" : "odd";
}

namespace {

void require_same_degree(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "degrees " + std::to_string(a.degree()) +
                                               " and " + std::to_string(b.degree()));
  }
}

}  // namespace

Permutation::Permutation(std::size_t degree) : img_(degree) {
  if (degree == 0) throw Error(ErrorCode::InvalidArgument, "degree must be positive");
  std::iota(img_.begin(), img_.end(), 0u);
}

Permutation Permutation::from_images(std::span<const Point> images) {
  const std::size_t t = images.size();
  if (t == 0) throw Error(ErrorCode::MalformedCycles, "empty image list");
  std::vector<std::uint32_t> img(t);
  std::vector<bool> seen(t, false);
  for (std::size_t i = 0; i < t; ++i) {
    const Point p = images[i];
    if (p < 1 || p > t || seen[p - 1]) {
      throw Error(ErrorCode::MalformedCycles,
                  "image list is not a bijection (bad value " + std::to_string(p) + ")");
    }
    seen[p - 1] = true;
    img[i] = p - 1;
  }
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<Cycle>& cycles) {
  Permutation out(degree);
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (Point p : c) {
      if (p < 1 || p > degree) {
        throw Error(ErrorCode::MalformedCycles, "point " + std::to_string(p) +
                                                    " outside [1, " + std::to_string(degree) + "]");
      }
      if (used[p - 1]) {
        throw Error(ErrorCode::MalformedCycles, "point " + std::to_string(p) + " repeated");
      }
      used[p - 1] = true;
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
      out.img_[c[i] - 1] = c[(i + 1) % c.size()] - 1;
    }
  }
  return out;
}

std::vector<Point> Permutation::images() const {
  std::vector<Point> out(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) out[i] = img_[i] + 1;
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (img_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  require_same_degree(*this, rhs);
  std::vector<std::uint32_t> out(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) out[i] = rhs.img_[img_[i]];
  return Permutation(std::move(out));
}

Permutation& Permutation::operator*=(const Permutation& rhs) {
  require_same_degree(*this, rhs);
  for (auto& v : img_) v = rhs.img_[v];
  return *this;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> out(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) out[img_[i]] = static_cast<std::uint32_t>(i);
  return Permutation(std::move(out));
}

Permutation Permutation::extended(std::size_t degree) const {
  if (degree < img_.size()) {
    throw Error(ErrorCode::DegreeMismatch, "cannot embed into a smaller degree");
  }
  std::vector<std::uint32_t> out(degree);
  std::iota(out.begin(), out.end(), 0u);
  std::copy(img_.begin(), img_.end(), out.begin());
  return Permutation(std::move(out));
}

std::strong_ordering Permutation::operator<=>(const Permutation& rhs) const {
  if (auto c = img_.size() <=> rhs.img_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(img_.begin(), img_.end(), rhs.img_.begin(),
                                                rhs.img_.end());
}

Permutation compose(const Permutation& a, const Permutation& b) { return a * b; }
Permutation inverse(const Permutation& a) { return a.inverse(); }

CycleDecomposition decompose(const Permutation& a) {
  // Scanning points in ascending order yields the canonical form directly:
  // each cycle starts at its smallest point and cycles come out sorted.
  CycleDecomposition out{a.degree(), {}};
  std::vector<bool> seen(a.degree(), false);
  for (Point p = 1; p <= a.degree(); ++p) {
    if (seen[p - 1] || a(p) == p) continue;
    Cycle c;
    for (Point q = p; !seen[q - 1]; q = a(q)) {
      seen[q - 1] = true;
      c.push_back(q);
    }
    out.cycles.push_back(std::move(c));
  }
  return out;
}

Permutation recompose(const CycleDecomposition& c) {
  for (const auto& cyc : c.cycles) {
    if (cyc.size() < 2) throw Error(ErrorCode::MalformedCycles, "cycle of length < 2");
  }
  return Permutation::from_cycles(c.degree, c.cycles);
}

std::vector<std::size_t> cycle_type(const Permutation& a) {
  std::vector<std::size_t> out;
  for (const auto& c : decompose(a).cycles) out.push_back(c.size());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t cycle_count(const Permutation& a) {
  std::size_t count = 0;
  std::vector<bool> seen(a.degree(), false);
  const auto raw = a.raw();
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (seen[i]) continue;
    ++count;
    for (std::size_t j = i; !seen[j]; j = raw[j]) seen[j] = true;
  }
  return count;
}

Parity parity_by_cycles(const Permutation& a) {
  return (a.degree() - cycle_count(a)) % 2 == 0 ? Parity::Even : Parity::Odd;
}

Parity parity_by_inversions(const Permutation& a) {
  const auto raw = a.raw();
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    for (std::size_t j = i + 1; j < raw.size(); ++j) {
      if (raw[i] > raw[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? Parity::Even : Parity::Odd;
}

Parity parity(const Permutation& a) { return parity_by_cycles(a); }

Permutation commutator(const Permutation& a, const Permutation& g) {
  require_same_degree(a, g);
  return a * g * a.inverse() * g.inverse();
}

Permutation conjugate(const Permutation& a, const Permutation& g) {
  require_same_degree(a, g);
  return g.inverse() * a * g;
}

std::vector<Point> moved_points(const Permutation& a) {
  std::vector<Point> out;
  for (Point p = 1; p <= a.degree(); ++p) {
    if (a(p) != p) out.push_back(p);
  }
  return out;
}

std::size_t moved_count(const Permutation& a) {
  std::size_t n = 0;
  const auto raw = a.raw();
  for (std::size_t i = 0; i < raw.size(); ++i) n += raw[i] != i;
  return n;
}

bool is_transposition_product(const Permutation& a, std::size_t* pairs) {
  std::size_t n = 0;
  for (Point p = 1; p <= a.degree(); ++p) {
    const Point q = a(p);
    if (q == p) continue;
    if (a(q) != p) return false;
    ++n;
  }
  if (pairs != nullptr) *pairs = n / 2;
  return true;
}

bool is_double_transposition(const Permutation& a) {
  std::size_t pairs = 0;
  return is_transposition_product(a, &pairs) && pairs == 2;
}

namespace {

// Cycles including fixed points, stably sorted by length. Fixed points come
// first in ascending order, then the canonical cycles of each length.
std::vector<Cycle> cycles_by_length(const Permutation& a) {
  std::vector<Cycle> all;
  for (Point p = 1; p <= a.degree(); ++p) {
    if (a(p) == p) all.push_back({p});
  }
  for (auto& c : decompose(a).cycles) all.push_back(std::move(c));
  std::stable_sort(all.begin(), all.end(),
                   [](const Cycle& x, const Cycle& y) { return x.size() < y.size(); });
  return all;
}

}  // namespace

Permutation conjugator_in_S(const Permutation& a, const Permutation& b) {
  require_same_degree(a, b);
  const auto ca = cycles_by_length(a);
  const auto cb = cycles_by_length(b);
  bool same_type = ca.size() == cb.size();
  for (std::size_t i = 0; same_type && i < ca.size(); ++i) {
    same_type = ca[i].size() == cb[i].size();
  }
  if (!same_type) throw Error(ErrorCode::NotConjugate, "cycle types differ");

  std::vector<Point> img(a.degree());
  for (std::size_t i = 0; i < ca.size(); ++i) {
    for (std::size_t j = 0; j < ca[i].size(); ++j) img[ca[i][j] - 1] = cb[i][j];
  }
  return Permutation::from_images(img);
}

std::optional<Permutation> odd_centralizer_element(const Permutation& a) {
  const auto cycles = cycles_by_length(a);
  for (const auto& c : cycles) {
    if (c.size() % 2 == 0) return Permutation::from_cycles(a.degree(), {c});
  }
  // All lengths are odd here, so swapping two equal-length blocks is a product
  // of an odd number of transpositions.
  for (std::size_t i = 0; i + 1 < cycles.size(); ++i) {
    if (cycles[i].size() != cycles[i + 1].size()) continue;
    std::vector<Cycle> swaps;
    for (std::size_t j = 0; j < cycles[i].size(); ++j) {
      swaps.push_back({cycles[i][j], cycles[i + 1][j]});
    }
    auto c = Permutation::from_cycles(a.degree(), swaps);
    assert(parity(c) == Parity::Odd);
    return c;
  }
  return std::nullopt;
}

Permutation conjugator_in_A(const Permutation& a, const Permutation& b) {
  if (!is_even(a) || !is_even(b)) {
    throw Error(ErrorCode::OddInput, "conjugator_in_A needs even permutations");
  }
  auto g = conjugator_in_S(a, b);
  if (is_even(g)) return g;
  auto c = odd_centralizer_element(a);
  if (!c) {
    throw Error(ErrorCode::NotConjugateInA,
                "cycle type has distinct odd lengths and the S_t witness is odd");
  }
  // c commutes with a, so (c g)^-1 a (c g) == g^-1 a g.
  return *c * g;
}

Permutation random_permutation(std::size_t t, Rng& rng) {
  std::vector<Point> img(t);
  std::iota(img.begin(), img.end(), Point{1});
  for (std::size_t i = t; i > 1; --i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    std::swap(img[i - 1], img[pick(rng)]);
  }
  return Permutation::from_images(img);
}

Permutation random_even(std::size_t t, Rng& rng) {
  if (t < 3) throw Error(ErrorCode::DegreeTooSmall, "random_even needs t >= 3");
  auto p = random_permutation(t, rng);
  if (is_even(p)) return p;
  auto img = p.images();
  std::swap(img[0], img[1]);
  return Permutation::from_images(img);
}

std::vector<Permutation> all_permutations(std::size_t t) {
  std::vector<Point> img(t);
  std::iota(img.begin(), img.end(), Point{1});
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::vector<Permutation> all_even_permutations(std::size_t t) {
  auto all = all_permutations(t);
  std::erase_if(all, [](const Permutation& p) { return !is_even(p); });
  return all;
}

std::uint64_t lex_rank(const Permutation& a) {
  const auto raw = a.raw();
  const std::size_t t = raw.size();
  std::uint64_t rank = 0;
  std::vector<bool> used(t, false);
  for (std::size_t i = 0; i < t; ++i) {
    std::uint64_t smaller = 0;
    for (std::uint32_t v = 0; v < raw[i]; ++v) smaller += !used[v];
    used[raw[i]] = true;
    rank = rank * (t - i) + smaller;
  }
  return rank;
}

}  // namespace itergroup

std::size_t std::hash<itergroup::Permutation>::operator()(
    const itergroup::Permutation& p) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto v : p.raw()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}
