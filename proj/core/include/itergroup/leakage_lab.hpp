#pragma once

// Product-class sampling and leakage experiments.
//
// D_alpha is the uniform distribution on length-t vectors over A_t whose
// product is alpha. rerandomize() maps x to
//   (x1 r1, r1^-1 x2 r2, .., r_{t-1}^-1 xt)
// for uniform r_i in A_t, which is a bijection from r-tuples onto the class
// of prod x. A leakage function sees one vector and emits a short bit string;
// the experiments measure how far its output distributions under D_alpha and
// D_id are apart, and how a one-bit observer can be amplified by repetition.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "itergroup/permutation.hpp"
#include "itergroup/product_map.hpp"

namespace itergroup {

ProductVector rerandomize(const ProductVector& x, Rng& rng);

/// Deterministic form with explicit r1..r_{t-1}; rs.size() must be x.size() - 1.
ProductVector rerandomize_with(const ProductVector& x, std::span<const Permutation> rs);

/// A draw from D_alpha: rerandomize((alpha, id, .., id)).
ProductVector sample_class(const Permutation& alpha, std::size_t t, Rng& rng);

/// Leakage output: the low `bits` bits of a 64-bit word.
struct LeakageFunction {
  std::string name;
  std::size_t bits = 1;
  std::function<std::uint64_t(const ProductVector&)> eval;

  std::uint64_t operator()(const ProductVector& v) const;
};

/// Builds leakage functions from short specs of the form "name[:arg]".
/// Built-ins:
///   coord:i            lexicographic rank of x_i
///   foldeq[:perm]      1 iff the fold equals perm (alpha by default)
///   point:p            fold(p) - 1
///   firstbits:B        bit j is the low bit of x_j(1) - 1, for j <= B
///   planted:pa:pid     one pseudo-random bit, 1 with probability pa on
///                      alpha-products and pid otherwise
class LeakageRegistry {
public:
  using Factory =
      std::function<LeakageFunction(std::string_view arg, std::size_t t, const Permutation& alpha)>;

  LeakageRegistry();

  void add(std::string name, Factory f);
  bool contains(std::string_view name) const;
  std::vector<std::string> names() const;

  LeakageFunction make(std::string_view spec, std::size_t t, const Permutation& alpha) const;

private:
  std::map<std::string, Factory, std::less<>> factories_;
};

const LeakageRegistry& default_leakage_registry();

/// Exact rational in lowest terms.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Rational make(std::uint64_t num, std::uint64_t den);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
  bool operator==(const Rational&) const = default;
};

/// Largest t accepted by tvd_exact.
inline constexpr std::size_t kExactTvdMaxDegree = 4;

/// Total variation distance between l(D_alpha) and l(D_id), by enumerating
/// all |A_t|^(t-1) rerandomizers. Throws BudgetExceeded for t > 4.
Rational tvd_exact(const LeakageFunction& l, const Permutation& alpha, std::size_t t);

inline constexpr std::size_t kMaxHistogramBits = 20;
inline constexpr double kTvdConfidenceDelta = 0.01;

struct TvdEstimate {
  double estimate = 0;
  double radius = 0;
  std::size_t samples = 0;
  std::size_t distinct = 0;  // outcomes seen in either histogram
  double seconds = 0;
};

/// Plug-in estimate from n draws of each class. With K distinct outcomes,
///   radius = sqrt(K / n) + sqrt(ln(2 / delta) / n),  delta = 0.01,
/// a bias bound for the empirical distance plus a McDiarmid deviation term.
/// Worker w draws from mt19937_64(seed_seq{seed, w}) over a contiguous share
/// of the n draws, so results depend only on (seed, workers).
/// Throws OutputTooWide when l.bits > 20.
TvdEstimate tvd_monte_carlo(const LeakageFunction& l, const Permutation& alpha, std::size_t t,
                            std::size_t n, std::uint64_t seed, std::size_t workers = 1);

/// Header comment lines and column names of the CSV experiment report.
void write_tvd_report_header(std::ostream& os, std::uint64_t seed, std::size_t workers);
void write_tvd_report_row(std::ostream& os, const LeakageFunction& l, const Permutation& alpha,
                          std::size_t t, const TvdEstimate& e);

struct AmplifierParams {
  std::size_t t = 0;
  std::size_t k = 1;
  std::size_t m = 1;
  double eps_alpha = 1;

  double slack() const;  // 1 / (2 t^k)
  double low() const;    // (1 - slack) m eps_alpha
  double high() const;   // (1 + slack) m eps_alpha

  /// Throws InvalidArgument unless 0 < eps_alpha <= 1, m >= 1, k >= 1, t >= 2.
  void validate() const;
};

enum class Decision { Alpha, Id };

std::string_view to_string(Decision d) noexcept;

struct AmplifierOutcome {
  Decision decision = Decision::Id;
  std::size_t count = 0;  // sum of c'(z_i)
};

/// Counts c' over m rerandomizations of x and answers Alpha iff
/// low <= count <= high. c' must emit one bit.
AmplifierOutcome amplifier_decide(const ProductVector& x, const LeakageFunction& c_prime,
                                  const AmplifierParams& p, Rng& rng);

/// Fraction of `samples` draws from D_alpha on which c' outputs 1.
double calibrate_eps_alpha(const LeakageFunction& c_prime, const Permutation& alpha, std::size_t t,
                           std::size_t samples, Rng& rng);

}  // namespace itergroup
