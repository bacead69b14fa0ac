#include "itergroup/leakage_lab.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "itergroup/cycle_transform.hpp"
#include "itergroup/text_format.hpp"
#include "itergroup/version.hpp"

namespace itergroup {

namespace {

void require_even(const Permutation& alpha, std::size_t t) {
  if (alpha.degree() != t) {
    throw Error(ErrorCode::DegreeMismatch, "alpha has degree " + std::to_string(alpha.degree()) +
                                               ", expected " + std::to_string(t));
  }
  if (!is_even(alpha)) throw Error(ErrorCode::OddInput, format_cycles(alpha) + " is odd");
}

std::size_t parse_count(std::string_view text, std::string_view what) {
  std::size_t pos = 0;
  std::size_t v = 0;
  try {
    v = std::stoul(std::string(text), &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != text.size()) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " expects an integer, got '" +
                                                std::string(text) + "'");
  }
  return v;
}

double parse_probability(std::string_view text) {
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(std::string(text), &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != text.size() || !(v >= 0.0 && v <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "probability expected in [0, 1], got '" +
                                                std::string(text) + "'");
  }
  return v;
}

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic pseudo-uniform value in [0, 1) from the vector's contents.
double vector_unit_hash(const ProductVector& v) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const auto& e : v.elements()) {
    for (std::uint32_t x : e.raw()) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    h = splitmix64(h);
  }
  return static_cast<double>(splitmix64(h) >> 11) * 0x1.0p-53;
}

std::size_t factorial_bits(std::size_t t) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= t; ++i) f *= i;
  return std::max<std::size_t>(1, ceil_log2(f));
}

}  // namespace

ProductVector rerandomize_with(const ProductVector& x, std::span<const Permutation> rs) {
  if (rs.size() + 1 != x.size()) {
    throw Error(ErrorCode::LengthMismatch, "need " + std::to_string(x.size() - 1) + " rerandomizers");
  }
  std::vector<Permutation> out = x.elements();
  for (std::size_t i = 0; i < rs.size(); ++i) {
    out[i] *= rs[i];
    out[i + 1] = rs[i].inverse() * out[i + 1];
  }
  return ProductVector(std::move(out));
}

ProductVector rerandomize(const ProductVector& x, Rng& rng) {
  if (x.size() < 2) return x;
  std::vector<Permutation> rs;
  rs.reserve(x.size() - 1);
  for (std::size_t i = 0; i + 1 < x.size(); ++i) rs.push_back(random_even(x.degree(), rng));
  return rerandomize_with(x, rs);
}

ProductVector sample_class(const Permutation& alpha, std::size_t t, Rng& rng) {
  require_even(alpha, t);
  std::vector<Permutation> elems(t, Permutation(t));
  elems.front() = alpha;
  return rerandomize(ProductVector(std::move(elems)), rng);
}

std::uint64_t LeakageFunction::operator()(const ProductVector& v) const {
  const std::uint64_t out = eval(v);
  return bits >= 64 ? out : out & ((std::uint64_t{1} << bits) - 1);
}

LeakageRegistry::LeakageRegistry() {
  add("coord", [](std::string_view arg, std::size_t t, const Permutation&) {
    const std::size_t i = parse_count(arg, "coord");
    if (i < 1 || i > t) throw Error(ErrorCode::InvalidArgument, "coordinate out of range");
    return LeakageFunction{"coord:" + std::to_string(i), factorial_bits(t),
                           [i](const ProductVector& v) { return lex_rank(v[i - 1]); }};
  });
  add("foldeq", [](std::string_view arg, std::size_t t, const Permutation& alpha) {
    const Permutation target = arg.empty() ? alpha : parse_permutation(arg, t);
    return LeakageFunction{"foldeq:" + format_cycles(target), 1,
                           [target](const ProductVector& v) -> std::uint64_t {
                             return v.fold() == target ? 1 : 0;
                           }};
  });
  add("point", [](std::string_view arg, std::size_t t, const Permutation&) {
    const std::size_t p = parse_count(arg, "point");
    if (p < 1 || p > t) throw Error(ErrorCode::InvalidArgument, "point out of range");
    return LeakageFunction{"point:" + std::to_string(p), std::max<std::size_t>(1, ceil_log2(t)),
                           [p](const ProductVector& v) -> std::uint64_t {
                             return v.fold()(static_cast<Point>(p)) - 1;
                           }};
  });
  add("firstbits", [](std::string_view arg, std::size_t t, const Permutation&) {
    const std::size_t b = parse_count(arg, "firstbits");
    if (b < 1 || b > t || b > 64) throw Error(ErrorCode::InvalidArgument, "firstbits out of range");
    return LeakageFunction{"firstbits:" + std::to_string(b), b,
                           [b](const ProductVector& v) {
                             std::uint64_t out = 0;
                             for (std::size_t j = 0; j < b && j < v.size(); ++j) {
                               out |= std::uint64_t{(v[j](1) - 1) & 1U} << j;
                             }
                             return out;
                           }};
  });
  add("planted", [](std::string_view arg, std::size_t, const Permutation& alpha) {
    const auto colon = arg.find(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorCode::InvalidArgument, "planted expects 'planted:p_alpha:p_id'");
    }
    const double pa = parse_probability(arg.substr(0, colon));
    const double pid = parse_probability(arg.substr(colon + 1));
    return LeakageFunction{"planted:" + std::string(arg), 1,
                           [alpha, pa, pid](const ProductVector& v) -> std::uint64_t {
                             const double p = v.fold() == alpha ? pa : pid;
                             return vector_unit_hash(v) < p ? 1 : 0;
                           }};
  });
}

void LeakageRegistry::add(std::string name, Factory f) { factories_[std::move(name)] = std::move(f); }

bool LeakageRegistry::contains(std::string_view name) const { return factories_.contains(name); }

std::vector<std::string> LeakageRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, f] : factories_) out.push_back(name);
  return out;
}

LeakageFunction LeakageRegistry::make(std::string_view spec, std::size_t t,
                                      const Permutation& alpha) const {
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  const std::string_view arg = colon == std::string_view::npos ? "" : spec.substr(colon + 1);
  const auto it = factories_.find(name);
  if (it == factories_.end()) {
    throw Error(ErrorCode::InvalidArgument, "unknown leakage function '" + std::string(name) + "'");
  }
  return it->second(arg, t, alpha);
}

const LeakageRegistry& default_leakage_registry() {
  static const LeakageRegistry registry;
  return registry;
}

Rational Rational::make(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  const std::uint64_t g = std::gcd(num, den);
  return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational tvd_exact(const LeakageFunction& l, const Permutation& alpha, std::size_t t) {
  if (t > kExactTvdMaxDegree) {
    throw Error(ErrorCode::BudgetExceeded, "exact enumeration limited to t <= 4");
  }
  if (t < 3) throw Error(ErrorCode::DegreeTooSmall, "need t >= 3");
  require_even(alpha, t);
  const auto group = all_even_permutations(t);
  std::vector<Permutation> base_alpha(t, Permutation(t));
  base_alpha.front() = alpha;
  const ProductVector xa(base_alpha);
  const ProductVector xid(std::vector<Permutation>(t, Permutation(t)));

  std::unordered_map<std::uint64_t, std::int64_t> diff;
  std::vector<std::size_t> digit(t - 1, 0);
  std::vector<Permutation> rs(t - 1, group.front());
  std::uint64_t total = 0;
  for (;;) {
    for (std::size_t i = 0; i + 1 < t; ++i) rs[i] = group[digit[i]];
    ++diff[l(rerandomize_with(xa, rs))];
    --diff[l(rerandomize_with(xid, rs))];
    ++total;
    std::size_t i = 0;
    while (i < digit.size() && ++digit[i] == group.size()) digit[i++] = 0;
    if (i == digit.size()) break;
  }
  std::uint64_t l1 = 0;
  for (const auto& [out, d] : diff) l1 += static_cast<std::uint64_t>(d < 0 ? -d : d);
  return Rational::make(l1, 2 * total);
}

TvdEstimate tvd_monte_carlo(const LeakageFunction& l, const Permutation& alpha, std::size_t t,
                            std::size_t n, std::uint64_t seed, std::size_t workers) {
  if (l.bits > kMaxHistogramBits) {
    throw Error(ErrorCode::OutputTooWide, l.name + " emits " + std::to_string(l.bits) +
                                              " bits, histograms allow at most 20");
  }
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "need n >= 1");
  require_even(alpha, t);
  const auto started = std::chrono::steady_clock::now();
  const Permutation id(t);

  workers = std::max<std::size_t>(1, std::min(workers, n));
  using Histogram = std::unordered_map<std::uint64_t, std::int64_t>;
  std::vector<Histogram> hist_alpha(workers);
  std::vector<Histogram> hist_id(workers);
  auto run = [&](std::size_t w) {
    const std::size_t share = n / workers + (w < n % workers ? 1 : 0);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(w)};
    Rng rng(seq);
    for (std::size_t i = 0; i < share; ++i) {
      ++hist_alpha[w][l(sample_class(alpha, t, rng))];
      ++hist_id[w][l(sample_class(id, t, rng))];
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }

  Histogram diff;
  for (std::size_t w = 0; w < workers; ++w) {
    for (const auto& [k, c] : hist_alpha[w]) diff[k] += c;
    for (const auto& [k, c] : hist_id[w]) diff[k] -= c;
  }
  std::uint64_t l1 = 0;
  for (const auto& [k, d] : diff) l1 += static_cast<std::uint64_t>(d < 0 ? -d : d);

  TvdEstimate e;
  e.samples = n;
  e.distinct = diff.size();
  const double nn = static_cast<double>(n);
  e.estimate = static_cast<double>(l1) / (2.0 * nn);
  e.radius = std::sqrt(static_cast<double>(e.distinct) / nn) +
             std::sqrt(std::log(2.0 / kTvdConfidenceDelta) / nn);
  e.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return e;
}

void write_tvd_report_header(std::ostream& os, std::uint64_t seed, std::size_t workers) {
  os << "# itergroup " << kVersion << " tvd report\n"
     << "# seed=" << seed << " workers=" << workers << '\n'
     << "# radius = sqrt(K/n) + sqrt(ln(2/delta)/n), K = distinct outcomes, delta = "
     << kTvdConfidenceDelta << '\n'
     << "leak,alpha,t,n,estimate,radius,distinct,seconds\n";
}

void write_tvd_report_row(std::ostream& os, const LeakageFunction& l, const Permutation& alpha,
                          std::size_t t, const TvdEstimate& e) {
  std::ostringstream row;
  row << std::setprecision(6) << std::quoted(l.name, '"', '"') << ','
      << std::quoted(format_cycles(alpha), '"', '"') << ',' << t << ','
      << e.samples << ',' << e.estimate << ',' << e.radius << ',' << e.distinct << ','
      << e.seconds;
  os << row.str() << '\n';
}

double AmplifierParams::slack() const {
  return 1.0 / (2.0 * std::pow(static_cast<double>(t), static_cast<double>(k)));
}

double AmplifierParams::low() const { return (1.0 - slack()) * static_cast<double>(m) * eps_alpha; }

double AmplifierParams::high() const { return (1.0 + slack()) * static_cast<double>(m) * eps_alpha; }

void AmplifierParams::validate() const {
  if (!(eps_alpha > 0.0 && eps_alpha <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "eps_alpha must lie in (0, 1]");
  }
  if (m < 1 || k < 1 || t < 2) throw Error(ErrorCode::InvalidArgument, "need m, k >= 1 and t >= 2");
}

std::string_view to_string(Decision d) noexcept { return d == Decision::Alpha ? "alpha" : "id"; }

AmplifierOutcome amplifier_decide(const ProductVector& x, const LeakageFunction& c_prime,
                                  const AmplifierParams& p, Rng& rng) {
  p.validate();
  if (c_prime.bits != 1) throw Error(ErrorCode::InvalidArgument, "amplifier needs a one-bit observer");
  AmplifierOutcome out;
  for (std::size_t i = 0; i < p.m; ++i) out.count += c_prime(rerandomize(x, rng)) & 1U;
  const auto c = static_cast<double>(out.count);
  out.decision = (p.low() <= c && c <= p.high()) ? Decision::Alpha : Decision::Id;
  return out;
}

double calibrate_eps_alpha(const LeakageFunction& c_prime, const Permutation& alpha, std::size_t t,
                           std::size_t samples, Rng& rng) {
  if (samples == 0) throw Error(ErrorCode::InvalidArgument, "need samples >= 1");
  std::size_t ones = 0;
  for (std::size_t i = 0; i < samples; ++i) ones += c_prime(sample_class(alpha, t, rng)) & 1U;
  return static_cast<double>(ones) / static_cast<double>(samples);
}

}  // namespace itergroup
