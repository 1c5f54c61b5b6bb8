#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "parallelo/lattice.hpp"
#include "parallelo/rational.hpp"
#include "parallelo/visible_count.hpp"

namespace parallelo {

/// 6/pi^2, the density of coprime pairs.
inline constexpr double kCoprimeDensity = 0.607927101854026628663;

/// One observation f_n(a) = V(a,n)/n.
struct ProfileRecord {
  std::int64_t n;
  std::int64_t a;
  std::int64_t v;
  Rational ratio;
  double ratio_float;
};

ProfileRecord make_record(const CountBreakdown& b);

/// Records for every a in [1, n-1] coprime to n, ascending in a.
std::vector<ProfileRecord> profile(std::int64_t n, CountMethod method = CountMethod::Direct, unsigned threads = 1);

struct RatioWitness {
  Rational ratio;
  std::int64_t a;
  std::int64_t n;
};

/// Per-n summary of a scan; also the checkpoint unit for resumed scans.
struct ScanRow {
  std::int64_t n;
  std::int64_t admissible;
  std::optional<RatioWitness> min;
  std::optional<RatioWitness> max;
  std::vector<ProfileRecord> violations;
};

struct ScanReport {
  std::int64_t n_min;
  std::int64_t n_max;
  std::string excluded;
  std::int64_t admissible = 0;
  std::optional<RatioWitness> min;
  std::optional<RatioWitness> max;
  /// Records with ratio <= 1/2 or ratio >= 3/4, ordered by (n, a).
  std::vector<ProfileRecord> violations;
  std::vector<ScanRow> rows;
};

struct ScanOptions {
  unsigned threads = 1;
  CountMethod method = CountMethod::Direct;
  /// Called with (rows finished, rows total); serialized, may come from any worker.
  std::function<void(std::size_t, std::size_t)> progress;
};

/// Both strict bounds 1/2 < ratio < 3/4 hold.
bool within_conjectured_bounds(const Rational& ratio);

ScanRow scan_single(std::int64_t n, CountMethod method = CountMethod::Direct);

/// Every n in [n_min, n_max], every coprime a outside {1, n-1}. Ties in the
/// extremal ratios go to the smallest n, then the smallest a.
ScanReport conjecture_scan(std::int64_t n_min, std::int64_t n_max, const ScanOptions& options = {});

/// rho in (0,1) given either by a continued fraction (irrational named
/// constants) or by an exact rational proxy.
class RhoSpec {
 public:
  static RhoSpec golden();          // (sqrt5 - 1)/2 = [0; 1, 1, 1, ...]
  static RhoSpec silver();          // sqrt2 - 1 = [0; 2, 2, 2, ...]
  static RhoSpec e_minus_two();     // e - 2 = [0; 1, 2, 1, 1, 4, 1, 1, 6, ...]
  static RhoSpec named(const std::string& name);
  static RhoSpec rational(const Rational& value);
  /// "p/q" or a finite decimal such as "0.25"; throws InvalidArgument.
  static RhoSpec parse_value(const std::string& text);

  const std::string& label() const { return label_; }
  bool is_rational_proxy() const { return proxy_.has_value(); }
  double approx() const;

  /// ceil(rho * n), exact.
  std::int64_t ceil_times(std::int64_t n) const;

 private:
  RhoSpec() = default;

  std::string label_;
  std::function<std::int64_t(int)> partial_quotient_;  // a_i for i >= 1; a_0 = 0
  std::optional<Rational> proxy_;
};

enum class CoprimePolicy { Skip, NearestCoprime };

struct RhoRecord {
  std::int64_t n;
  std::int64_t a;
  bool skipped;
  std::string reason;
  std::optional<std::int64_t> v;
  std::optional<Rational> ratio;
  double deviation;  // |ratio - 6/pi^2|, NaN when skipped
};

std::vector<RhoRecord> rho_sequence(const RhoSpec& rho, std::span<const std::int64_t> n_values, CoprimePolicy policy,
                                    unsigned threads = 1);

/// Median of the deviations of non-skipped records; nullopt when none.
std::optional<double> median_deviation(std::span<const RhoRecord> records);

/// (1/a) sum_{s<=a} phi(s)/s, exact.
BigRational phi_mean(std::int64_t a);

struct DensityResult {
  std::int64_t visible;
  std::int64_t total;
  double ratio;
};

/// Visible points of [-r, r]^2 by direct gcd enumeration.
DensityResult square_density(std::int64_t r);

/// Star discrepancy of {frac(k*n/a) : 1 <= k <= q}. Requires 1 <= q <= a.
double discrepancy(const CanonicalParallelogram& c, std::int64_t q);

/// n in [lo, hi] stepping by `step`, optionally restricted to primes.
std::vector<std::int64_t> n_range(std::int64_t lo, std::int64_t hi, std::int64_t step, bool primes_only);

}  // namespace parallelo
