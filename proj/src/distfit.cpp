#include "ocn/distfit.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/trigamma.hpp>

#include "ocn/parallel.hpp"

namespace ocn {

namespace {

struct FamilyInfo {
  std::string_view name;
  std::string_view code;
};

constexpr std::array<FamilyInfo, 10> kFamilyInfo = {{
    {"power_law", "PL"},
    {"beta", "BET"},
    {"cauchy", "CAU"},
    {"exponential", "E"},
    {"gamma", "GM"},
    {"logistic", "LOG"},
    {"log_normal", "LN"},
    {"normal", "N"},
    {"uniform", "U"},
    {"weibull", "WB"},
}};

[[noreturn]] void domain_fail(Family f, const std::string& why) {
  throw FitError(FitError::Kind::domain, std::string(family_name(f)) + ": " + why);
}

}  // namespace

std::string_view family_name(Family f) { return kFamilyInfo[static_cast<std::size_t>(f)].name; }
std::string_view family_code(Family f) { return kFamilyInfo[static_cast<std::size_t>(f)].code; }

std::optional<Family> parse_family(std::string_view text) {
  std::string upper(text);
  for (auto& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (Family f : kAllFamilies)
    if (text == family_name(f) || upper == family_code(f)) return f;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Sample

Sample Sample::from_weighted(std::vector<std::pair<double, double>> value_weight) {
  std::sort(value_weight.begin(), value_weight.end());
  Sample s;
  for (auto [value, weight] : value_weight) {
    if (!std::isfinite(value)) throw std::invalid_argument("sample value is not finite");
    if (!(weight >= 0) || !std::isfinite(weight)) throw std::invalid_argument("sample weight must be finite and >= 0");
    if (weight == 0) continue;
    if (!s.values_.empty() && s.values_.back() == value)
      s.weights_.back() += weight;
    else {
      s.values_.push_back(value);
      s.weights_.push_back(weight);
    }
    s.total_ += weight;
  }
  return s;
}

Sample Sample::from_values(std::span<const double> values) {
  std::vector<std::pair<double, double>> vw;
  vw.reserve(values.size());
  for (double v : values) vw.emplace_back(v, 1.0);
  return from_weighted(std::move(vw));
}

Sample Sample::from_histogram(const IntegerHistogram& h) {
  std::vector<std::pair<double, double>> vw;
  for (auto [value, count] : h.bins()) vw.emplace_back(static_cast<double>(value), static_cast<double>(count));
  return from_weighted(std::move(vw));
}

double Sample::mean() const {
  long double acc = 0;
  for (std::size_t i = 0; i < values_.size(); ++i) acc += static_cast<long double>(values_[i]) * weights_[i];
  return static_cast<double>(acc / total_);
}

double Sample::variance() const {
  const long double mu = mean();
  long double acc = 0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const long double d = values_[i] - mu;
    acc += d * d * weights_[i];
  }
  return static_cast<double>(acc / total_);
}

double Sample::quantile(double p) const {
  if (values_.empty()) throw std::domain_error("quantile of an empty sample");
  const double h = (total_ - 1.0) * p;
  const double lo_rank = std::floor(h);
  // value at 0-based rank r in the expanded sample
  auto at_rank = [&](double r) {
    double cum = 0;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      cum += weights_[i];
      if (r < cum) return values_[i];
    }
    return values_.back();
  };
  const double lo = at_rank(lo_rank);
  const double hi = at_rank(lo_rank + 1);
  return lo + (h - lo_rank) * (hi - lo);
}

Sample Sample::tail(double threshold) const {
  Sample s;
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] >= threshold) {
      s.values_.push_back(values_[i]);
      s.weights_.push_back(weights_[i]);
      s.total_ += weights_[i];
    }
  return s;
}

Sample Sample::affine(double a, double b) const {
  if (!(a > 0)) throw std::invalid_argument("affine scale must be positive");
  Sample s = *this;
  for (auto& v : s.values_) v = a * v + b;
  return s;
}

// ---------------------------------------------------------------------------
// Distribution

Distribution Distribution::power_law(double alpha, double xmin) {
  if (!(alpha > 1) || !std::isfinite(alpha)) domain_fail(Family::power_law, "alpha must exceed 1");
  if (!(xmin > 0)) domain_fail(Family::power_law, "xmin must be positive");
  return {Family::power_law, {alpha, xmin, 0, 0}};
}
Distribution Distribution::beta(double a, double b, double lo, double hi) {
  if (!(a > 0) || !(b > 0)) domain_fail(Family::beta, "shape parameters must be positive");
  if (!(lo < hi)) domain_fail(Family::beta, "support needs lo < hi");
  return {Family::beta, {a, b, lo, hi}};
}
Distribution Distribution::cauchy(double location, double scale) {
  if (!(scale > 0)) domain_fail(Family::cauchy, "scale must be positive");
  return {Family::cauchy, {location, scale, 0, 0}};
}
Distribution Distribution::exponential(double rate) {
  if (!(rate > 0) || !std::isfinite(rate)) domain_fail(Family::exponential, "rate must be positive");
  return {Family::exponential, {rate, 0, 0, 0}};
}
Distribution Distribution::gamma(double shape, double scale) {
  if (!(shape > 0) || !(scale > 0)) domain_fail(Family::gamma, "shape and scale must be positive");
  return {Family::gamma, {shape, scale, 0, 0}};
}
Distribution Distribution::logistic(double location, double scale) {
  if (!(scale > 0)) domain_fail(Family::logistic, "scale must be positive");
  return {Family::logistic, {location, scale, 0, 0}};
}
Distribution Distribution::log_normal(double mu, double sigma) {
  if (!(sigma > 0)) domain_fail(Family::log_normal, "sigma must be positive");
  return {Family::log_normal, {mu, sigma, 0, 0}};
}
Distribution Distribution::normal(double mu, double sigma) {
  if (!(sigma > 0)) domain_fail(Family::normal, "sigma must be positive");
  return {Family::normal, {mu, sigma, 0, 0}};
}
Distribution Distribution::uniform(double lo, double hi) {
  if (!(lo < hi)) domain_fail(Family::uniform, "needs lo < hi");
  return {Family::uniform, {lo, hi, 0, 0}};
}
Distribution Distribution::weibull(double shape, double scale) {
  if (!(shape > 0) || !(scale > 0)) domain_fail(Family::weibull, "shape and scale must be positive");
  return {Family::weibull, {shape, scale, 0, 0}};
}

double Distribution::cdf(double x) const {
  const auto& p = p_;
  switch (family_) {
    case Family::power_law:
      return x < p[1] ? 0.0 : 1.0 - std::pow(x / p[1], 1.0 - p[0]);
    case Family::beta: {
      double y = kBetaInset + (1.0 - 2.0 * kBetaInset) * (x - p[2]) / (p[3] - p[2]);
      y = std::clamp(y, 0.0, 1.0);
      return boost::math::ibeta(p[0], p[1], y);
    }
    case Family::cauchy:
      return 0.5 + std::atan((x - p[0]) / p[1]) / std::numbers::pi;
    case Family::exponential:
      return x <= 0 ? 0.0 : -std::expm1(-p[0] * x);
    case Family::gamma:
      return x <= 0 ? 0.0 : boost::math::gamma_p(p[0], x / p[1]);
    case Family::logistic:
      return 1.0 / (1.0 + std::exp(-(x - p[0]) / p[1]));
    case Family::log_normal:
      return x <= 0 ? 0.0 : 0.5 * boost::math::erfc(-(std::log(x) - p[0]) / (p[1] * std::numbers::sqrt2));
    case Family::normal:
      return 0.5 * boost::math::erfc(-(x - p[0]) / (p[1] * std::numbers::sqrt2));
    case Family::uniform:
      return std::clamp((x - p[0]) / (p[1] - p[0]), 0.0, 1.0);
    case Family::weibull:
      return x <= 0 ? 0.0 : -std::expm1(-std::pow(x / p[1], p[0]));
  }
  return std::numeric_limits<double>::quiet_NaN();
}

std::vector<Parameter> Distribution::parameters() const {
  const auto& p = p_;
  switch (family_) {
    case Family::power_law: return {{"alpha", p[0]}, {"xmin", p[1]}};
    case Family::beta: return {{"a", p[0]}, {"b", p[1]}, {"lo", p[2]}, {"hi", p[3]}};
    case Family::cauchy: return {{"location", p[0]}, {"scale", p[1]}};
    case Family::exponential: return {{"rate", p[0]}};
    case Family::gamma: return {{"shape", p[0]}, {"scale", p[1]}};
    case Family::logistic: return {{"location", p[0]}, {"scale", p[1]}};
    case Family::log_normal: return {{"mu", p[0]}, {"sigma", p[1]}};
    case Family::normal: return {{"mu", p[0]}, {"sigma", p[1]}};
    case Family::uniform: return {{"lo", p[0]}, {"hi", p[1]}};
    case Family::weibull: return {{"shape", p[0]}, {"scale", p[1]}};
  }
  return {};
}

double Distribution::parameter(std::string_view name) const {
  for (const auto& p : parameters())
    if (p.name == name) return p.value;
  throw std::out_of_range(std::string(family_name(family_)) + " has no parameter " + std::string(name));
}

// ---------------------------------------------------------------------------
// Fitting

namespace {

double weighted_sum(const Sample& s, auto&& fn) {
  long double acc = 0;
  for (std::size_t i = 0; i < s.values().size(); ++i) acc += static_cast<long double>(fn(s.values()[i])) * s.weights()[i];
  return static_cast<double>(acc);
}

void require_positive(Family f, const Sample& s) {
  if (!(s.min() > 0)) domain_fail(f, "requires strictly positive samples");
}

Distribution fit_power_law(const Sample& s, const FitOptions& o) {
  double xmin;
  if (o.xmin) {
    xmin = *o.xmin;
  } else {
    const auto it = std::upper_bound(s.values().begin(), s.values().end(), 0.0);
    if (it == s.values().end()) domain_fail(Family::power_law, "no positive samples");
    xmin = *it;
  }
  if (!(xmin > 0)) domain_fail(Family::power_law, "xmin must be positive");
  const Sample t = s.tail(xmin);
  if (t.empty()) domain_fail(Family::power_law, "no samples at or above xmin");
  const double log_sum = weighted_sum(t, [&](double x) { return std::log(x / xmin); });
  if (!(log_sum > 0)) domain_fail(Family::power_law, "all tail samples equal xmin");
  return Distribution::power_law(1.0 + t.total_weight() / log_sum, xmin);
}

Distribution fit_weibull(const Sample& s, const FitOptions& o) {
  require_positive(Family::weibull, s);
  if (s.min() == s.max()) domain_fail(Family::weibull, "constant sample");
  // Shape equation on z = x / max (shape is scale-invariant):
  //   g(k) = sum w z^k ln z / sum w z^k - 1/k - mean ln z = 0,
  // with g increasing from -inf to -mean ln z > 0.
  const double xmax = s.max();
  std::vector<double> logz(s.values().size());
  for (std::size_t i = 0; i < logz.size(); ++i) logz[i] = std::log(s.values()[i] / xmax);
  const double W = s.total_weight();
  double mean_log = 0;
  for (std::size_t i = 0; i < logz.size(); ++i) mean_log += s.weights()[i] * logz[i];
  mean_log /= W;

  auto eval = [&](double k, double& deriv) {
    long double s0 = 0, s1 = 0, s2 = 0;
    for (std::size_t i = 0; i < logz.size(); ++i) {
      const long double zk = s.weights()[i] * std::exp(k * logz[i]);
      s0 += zk;
      s1 += zk * logz[i];
      s2 += zk * logz[i] * logz[i];
    }
    const long double r1 = s1 / s0, r2 = s2 / s0;
    deriv = static_cast<double>(r2 - r1 * r1) + 1.0 / (k * k);
    return static_cast<double>(r1) - 1.0 / k - mean_log;
  };

  double d;
  double lo = 1.0, hi = 1.0;
  for (int i = 0; eval(lo, d) > 0; ++i) {
    lo /= 2;
    if (i > 200) throw FitError(FitError::Kind::no_convergence, "weibull: cannot bracket shape", lo);
  }
  for (int i = 0; eval(hi, d) < 0; ++i) {
    hi *= 2;
    if (i > 200) throw FitError(FitError::Kind::no_convergence, "weibull: cannot bracket shape", hi);
  }
  double k = 0.5 * (lo + hi);
  for (int iter = 0; iter < o.max_iterations; ++iter) {
    const double g = eval(k, d);
    if (g > 0)
      hi = k;
    else
      lo = k;
    double next = k - g / d;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - k) <= o.tolerance * std::max(1.0, k)) {
      k = next;
      long double sk = 0;
      for (std::size_t i = 0; i < logz.size(); ++i) sk += s.weights()[i] * std::exp(k * logz[i]);
      const double scale = xmax * std::pow(static_cast<double>(sk / W), 1.0 / k);
      return Distribution::weibull(k, scale);
    }
    k = next;
  }
  throw FitError(FitError::Kind::no_convergence, "weibull: shape did not converge", k);
}

Distribution fit_gamma(const Sample& s, const FitOptions& o) {
  require_positive(Family::gamma, s);
  const double mean = s.mean();
  const double var = s.variance();
  const double target = std::log(mean) - weighted_sum(s, [](double x) { return std::log(x); }) / s.total_weight();
  if (!(target > 0) || !(var > 0)) domain_fail(Family::gamma, "constant sample");
  // Solve ln k - digamma(k) = target; the left side decreases in k.
  double k = mean * mean / var;
  for (int iter = 0; iter < o.max_iterations; ++iter) {
    const double h = std::log(k) - boost::math::digamma(k) - target;
    const double dh = 1.0 / k - boost::math::trigamma(k);
    double next = k - h / dh;
    if (!(next > 0)) next = k / 2;
    if (std::abs(next - k) <= o.tolerance * std::max(1.0, k)) return Distribution::gamma(next, mean / next);
    k = next;
  }
  throw FitError(FitError::Kind::no_convergence, "gamma: shape did not converge", k);
}

}  // namespace

Distribution fit(Family family, const Sample& s, const FitOptions& o) {
  if (s.empty()) domain_fail(family, "empty sample");
  switch (family) {
    case Family::power_law:
      return fit_power_law(s, o);
    case Family::beta: {
      if (!(s.min() < s.max())) domain_fail(family, "constant sample");
      const double lo = s.min(), hi = s.max();
      const double eps = Distribution::kBetaInset;
      const Sample y = s.affine((1.0 - 2.0 * eps) / (hi - lo), eps - (1.0 - 2.0 * eps) * lo / (hi - lo));
      const double m = y.mean(), v = y.variance();
      const double common = m * (1.0 - m) / v - 1.0;
      if (!(common > 0)) domain_fail(family, "moment equations have no solution");
      return Distribution::beta(m * common, (1.0 - m) * common, lo, hi);
    }
    case Family::cauchy: {
      const double half_iqr = 0.5 * (s.quantile(0.75) - s.quantile(0.25));
      if (!(half_iqr > 0)) domain_fail(family, "zero interquartile range");
      return Distribution::cauchy(s.quantile(0.5), half_iqr);
    }
    case Family::exponential: {
      if (s.min() < 0) domain_fail(family, "requires nonnegative samples");
      const double mean = s.mean();
      if (!(mean > 0)) domain_fail(family, "mean must be positive");
      return Distribution::exponential(1.0 / mean);
    }
    case Family::gamma:
      return fit_gamma(s, o);
    case Family::logistic: {
      const double sd = std::sqrt(s.variance());
      if (!(sd > 0)) domain_fail(family, "constant sample");
      return Distribution::logistic(s.mean(), sd * std::numbers::sqrt3 / std::numbers::pi);
    }
    case Family::log_normal: {
      require_positive(family, s);
      std::vector<std::pair<double, double>> logs;
      for (std::size_t i = 0; i < s.values().size(); ++i) logs.emplace_back(std::log(s.values()[i]), s.weights()[i]);
      const Sample ls = Sample::from_weighted(std::move(logs));
      const double sigma = std::sqrt(ls.variance());
      if (!(sigma > 0)) domain_fail(family, "constant sample");
      return Distribution::log_normal(ls.mean(), sigma);
    }
    case Family::normal: {
      const double sigma = std::sqrt(s.variance());
      if (!(sigma > 0)) domain_fail(family, "constant sample");
      return Distribution::normal(s.mean(), sigma);
    }
    case Family::uniform:
      if (!(s.min() < s.max())) domain_fail(family, "constant sample");
      return Distribution::uniform(s.min(), s.max());
    case Family::weibull:
      return fit_weibull(s, o);
  }
  domain_fail(family, "unknown family");
}

double ks_statistic(const Sample& s, const Distribution& dist) {
  if (s.empty()) throw std::invalid_argument("KS statistic of an empty sample");
  double cum = 0, worst = 0;
  const double n = s.total_weight();
  for (std::size_t i = 0; i < s.values().size(); ++i) {
    const double f = dist.cdf(s.values()[i]);
    if (std::isnan(f))
      throw FitError(FitError::Kind::domain, std::string(family_name(dist.family())) +
                                                 ": CDF undefined at " + std::to_string(s.values()[i]));
    const double before = cum / n;
    cum += s.weights()[i];
    const double after = std::min(1.0, cum / n);
    worst = std::max({worst, std::abs(after - f), std::abs(f - before)});
  }
  return std::min(worst, 1.0);
}

std::vector<FitResult> fit_all(const Sample& s, const FitOptions& o, unsigned threads) {
  std::vector<FitResult> results(kAllFamilies.size());
  parallel_items(kAllFamilies.size(), resolve_threads(threads, kAllFamilies.size()), [&](unsigned, std::size_t i) {
    FitResult& r = results[i];
    r.family = kAllFamilies[i];
    r.ks = std::numeric_limits<double>::quiet_NaN();
    r.sample_size = 0;
    if (s.total_weight() < kMinFitSampleSize) {
      r.error = "sample has fewer than 5 items";
      return;
    }
    try {
      const Distribution d = fit(r.family, s, o);
      const Sample& evaluated = r.family == Family::power_law ? s.tail(d.parameter("xmin")) : s;
      r.ks = ks_statistic(evaluated, d);
      r.sample_size = evaluated.total_weight();
      r.distribution = d;
    } catch (const std::exception& e) {
      r.error = e.what();
    }
  });
  std::stable_sort(results.begin(), results.end(), [](const FitResult& a, const FitResult& b) {
    if (a.applicable() != b.applicable()) return a.applicable();
    if (a.applicable() && a.ks != b.ks) return a.ks < b.ks;
    return a.family < b.family;
  });
  return results;
}

const FitResult* find_fit(const std::vector<FitResult>& results, Family family) {
  for (const auto& r : results)
    if (r.family == family) return &r;
  return nullptr;
}

PowerLawScan powerlaw_xmin_scan(const Sample& s, const ScanOptions& options) {
  const auto first_pos = std::upper_bound(s.values().begin(), s.values().end(), 0.0) - s.values().begin();
  const std::size_t D = s.values().size() - static_cast<std::size_t>(first_pos);
  if (D < 10)
    throw FitError(FitError::Kind::domain,
                   "power_law scan needs at least 10 distinct positive values, got " + std::to_string(D));
  std::vector<double> v(s.values().begin() + first_pos, s.values().end());
  std::vector<double> w(s.weights().begin() + first_pos, s.weights().end());
  std::vector<double> logv(D);
  for (std::size_t i = 0; i < D; ++i) logv[i] = std::log(v[i]);
  // suffix sums of weight and weighted log
  std::vector<long double> W(D + 1, 0), L(D + 1, 0);
  for (std::size_t i = D; i-- > 0;) {
    W[i] = W[i + 1] + w[i];
    L[i] = L[i + 1] + static_cast<long double>(w[i]) * logv[i];
  }

  // the largest value cannot be a cutoff: its tail has zero log spread
  const std::size_t usable = D - 1;
  std::vector<std::size_t> candidates;
  if (options.max_candidates == 0 || usable <= options.max_candidates) {
    for (std::size_t i = 0; i < usable; ++i) candidates.push_back(i);
  } else {
    for (std::size_t k = 0; k < options.max_candidates; ++k) {
      const std::size_t i = static_cast<std::size_t>(
          std::llround(static_cast<double>(k) * static_cast<double>(usable - 1) /
                       static_cast<double>(options.max_candidates - 1)));
      if (candidates.empty() || candidates.back() != i) candidates.push_back(i);
    }
  }

  PowerLawScan best;
  best.ks = std::numeric_limits<double>::infinity();
  for (std::size_t i : candidates) {
    const long double spread = L[i] - W[i] * logv[i];
    if (!(spread > 0)) continue;
    const double alpha = static_cast<double>(1.0L + W[i] / spread);
    const double n = static_cast<double>(W[i]);
    double cum = 0, worst = 0;
    for (std::size_t j = i; j < D; ++j) {
      const double f = -std::expm1((1.0 - alpha) * (logv[j] - logv[i]));
      const double before = cum / n;
      cum += w[j];
      worst = std::max({worst, std::abs(std::min(1.0, cum / n) - f), std::abs(f - before)});
    }
    if (worst < best.ks) best = {v[i], alpha, worst, n, 0};
  }
  best.candidates = candidates.size();
  return best;
}

}  // namespace ocn
