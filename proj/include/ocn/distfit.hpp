#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ocn/histogram.hpp"

namespace ocn {

/// Candidate families, in the column order of the published fit tables.
enum class Family : std::uint8_t {
  power_law,
  beta,
  cauchy,
  exponential,
  gamma,
  logistic,
  log_normal,
  normal,
  uniform,
  weibull,
};

inline constexpr std::array<Family, 10> kAllFamilies = {
    Family::power_law, Family::beta,     Family::cauchy,     Family::exponential, Family::gamma,
    Family::logistic,  Family::log_normal, Family::normal, Family::uniform,     Family::weibull,
};

/// Snake-case name, e.g. "log_normal".
std::string_view family_name(Family f);
/// Table column code, e.g. "LN".
std::string_view family_code(Family f);
/// Accepts either the name or the code (case-insensitive for codes).
std::optional<Family> parse_family(std::string_view text);

/// A multiset of reals stored as ascending distinct values with positive
/// weights. Raw samples have unit weights; histograms and hop-distance
/// counts map directly onto it without expansion.
class Sample {
 public:
  Sample() = default;
  static Sample from_values(std::span<const double> values);
  static Sample from_weighted(std::vector<std::pair<double, double>> value_weight);
  static Sample from_histogram(const IntegerHistogram& h);

  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& weights() const { return weights_; }
  double total_weight() const { return total_; }
  bool empty() const { return values_.empty(); }
  double min() const { return values_.front(); }
  double max() const { return values_.back(); }

  double mean() const;
  /// Population (1/N) variance.
  double variance() const;
  /// Linear-interpolation quantile on the expanded sample (rank h = (N-1)p).
  double quantile(double p) const;

  /// Items with value >= threshold.
  Sample tail(double threshold) const;
  /// Applies x -> a*x + b (a > 0) to every value.
  Sample affine(double a, double b) const;

 private:
  std::vector<double> values_;
  std::vector<double> weights_;
  double total_ = 0;
};

struct Parameter {
  std::string_view name;
  double value;
};

/// A member of one family with concrete parameters. Factories validate the
/// parameter domain and throw FitError on violation.
class Distribution {
 public:
  static Distribution power_law(double alpha, double xmin);
  /// Beta(a, b) on the rescaled variable y = eps + (1 - 2 eps)(x - lo)/(hi - lo).
  static Distribution beta(double a, double b, double lo, double hi);
  static Distribution cauchy(double location, double scale);
  static Distribution exponential(double rate);
  static Distribution gamma(double shape, double scale);
  static Distribution logistic(double location, double scale);
  static Distribution log_normal(double mu, double sigma);
  static Distribution normal(double mu, double sigma);
  static Distribution uniform(double lo, double hi);
  static Distribution weibull(double shape, double scale);

  /// Inset used when mapping beta samples into the open unit interval.
  static constexpr double kBetaInset = 1e-6;

  Family family() const { return family_; }
  double cdf(double x) const;
  std::vector<Parameter> parameters() const;
  /// Throws std::out_of_range for a name the family does not have.
  double parameter(std::string_view name) const;

 private:
  Distribution(Family f, std::array<double, 4> p) : family_(f), p_(p) {}
  Family family_;
  std::array<double, 4> p_;
};

class FitError : public std::runtime_error {
 public:
  enum class Kind { domain, no_convergence };
  FitError(Kind kind, const std::string& what, std::optional<double> last_iterate = std::nullopt)
      : std::runtime_error(what), kind_(kind), last_iterate_(last_iterate) {}
  Kind kind() const { return kind_; }
  std::optional<double> last_iterate() const { return last_iterate_; }

 private:
  Kind kind_;
  std::optional<double> last_iterate_;
};

struct FitOptions {
  /// Power-law lower cutoff; defaults to the smallest positive value.
  std::optional<double> xmin;
  double tolerance = 1e-8;
  int max_iterations = 100;
};

/// Estimates family parameters from the sample:
///   normal, log-normal: maximum likelihood (closed form)
///   exponential: rate = 1 / mean
///   uniform: (min, max)
///   power-law: continuous MLE alpha = 1 + N / sum ln(x / xmin) over x >= xmin
///   weibull: MLE, root of the shape equation (Newton with bisection guard)
///   gamma: MLE, Newton on ln k - digamma(k) = ln mean - mean ln x from the
///          moment estimate
///   logistic: location = mean, scale = sd * sqrt(3) / pi
///   cauchy: location = median, scale = half the interquartile range
///   beta: moment matching after rescaling into (0, 1)
Distribution fit(Family family, const Sample& sample, const FitOptions& options = {});
inline Distribution fit(Family family, std::span<const double> values, const FitOptions& options = {}) {
  return fit(family, Sample::from_values(values), options);
}

/// Kolmogorov-Smirnov distance between the sample's empirical CDF and
/// dist, evaluated on both sides of every distinct value. Throws FitError
/// if the CDF is not a number at a sample value.
double ks_statistic(const Sample& sample, const Distribution& dist);
inline double ks_statistic(std::span<const double> values, const Distribution& dist) {
  return ks_statistic(Sample::from_values(values), dist);
}

/// Samples smaller than this are not fitted by fit_all.
inline constexpr double kMinFitSampleSize = 5;

struct FitResult {
  Family family;
  std::optional<Distribution> distribution;
  /// KS distance; NaN when the family is inapplicable.
  double ks;
  /// Total weight the KS statistic was computed over (the tail for
  /// power-law).
  double sample_size;
  /// Why the family is inapplicable, empty otherwise.
  std::string error;

  bool applicable() const { return distribution.has_value(); }
};

/// Fits all ten families and orders them by ascending KS, ties broken by
/// family order; inapplicable families follow in family order.
std::vector<FitResult> fit_all(const Sample& sample, const FitOptions& options = {}, unsigned threads = 1);

/// Result for one family from a fit_all list, or nullptr.
const FitResult* find_fit(const std::vector<FitResult>& results, Family family);

struct PowerLawScan {
  double xmin = 0;
  double alpha = 0;
  double ks = 0;
  double tail_size = 0;
  std::size_t candidates = 0;
};

struct ScanOptions {
  /// Candidate cutoffs tried; when the sample has more distinct positive
  /// values than this, an evenly spaced subset by rank is used.
  std::size_t max_candidates = 1000;
};

/// Tries distinct sample values as xmin, fits alpha on each tail and keeps
/// the KS-minimizing one (smallest xmin on ties). Needs at least 10
/// distinct positive values; throws FitError otherwise.
PowerLawScan powerlaw_xmin_scan(const Sample& sample, const ScanOptions& options = {});

}  // namespace ocn
