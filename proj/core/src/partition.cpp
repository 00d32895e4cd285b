#include "tristring/partition.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "tristring/enumerate.hpp"
#include "tristring/error.hpp"

namespace tristring {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const double kLogTwoPi = std::log(kTwoPi);
// exp() overflows a double above ~709.78.
constexpr double kLogOverflow = 709.0;

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      compensation_ += (sum_ - t) + x;
    else
      compensation_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

// Tracks the "term / running sum < eps for kConvergenceRun consecutive terms" rule.
class StopRule {
 public:
  explicit StopRule(double eps) : eps_(eps) {}
  void observe(double term, double sum) {
    const bool small = sum > 0.0 && term / sum < eps_;
    run_ = small ? run_ + 1 : 0;
    last_small_ = small;
  }
  bool satisfied() const { return run_ >= kConvergenceRun; }
  bool last_small() const { return last_small_; }

 private:
  double eps_;
  int run_ = 0;
  bool last_small_ = false;
};

double log_prefactor(int dimension) { return -0.5 * dimension * kLogTwoPi; }

double sqrt_constant(TutteConstant c) {
  return c == TutteConstant::kThreeOverTwoPi ? std::sqrt(3.0 / kTwoPi) : std::sqrt(1.5 * std::numbers::pi);
}

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

nlohmann::ordered_json json_number(double value) {
  if (!std::isfinite(value)) return nullptr;
  return round_significant(value);
}

}  // namespace

std::string to_string(SeriesMode mode) {
  switch (mode) {
    case SeriesMode::kExactEnumerated: return "exact";
    case SeriesMode::kLowerBoundSphere: return "lower-bound";
    case SeriesMode::kPartialSingleClass: return "partial";
  }
  return "unknown";
}

SeriesMode parse_series_mode(const std::string& name) {
  if (name == "exact") return SeriesMode::kExactEnumerated;
  if (name == "lower-bound") return SeriesMode::kLowerBoundSphere;
  if (name == "partial") return SeriesMode::kPartialSingleClass;
  throw InvalidArgument("unknown series mode '" + name + "'");
}

void SeriesConfig::validate(int first_k) const {
  if (!(mu >= 0.0) || !std::isfinite(mu)) throw InvalidArgument("mu must be a finite value >= 0");
  if (dimension < 1) throw InvalidArgument("dimension D must be >= 1");
  if (eps && !(*eps > 0.0 && *eps < 1.0)) throw InvalidArgument("eps must lie in (0, 1)");
  if (k_max && *k_max < first_k)
    throw InvalidArgument("k_max " + std::to_string(*k_max) + " is below the first admissible k = " +
                          std::to_string(first_k));
}

double log_term_for_triangulation(const EmbeddedTriangulation& t, const SeriesConfig& cfg) {
  if (const auto report = validate_triangulation(t); !report.valid())
    throw InvalidTriangulation("term_for_triangulation: " + report.to_string());
  const BigInt kappa = spanning_tree_count(t.graph());
  if (kappa == 0) throw InvalidArgument("term_for_triangulation: graph has no spanning tree");
  const double faces = 2.0 * static_cast<double>(t.n_edges()) / 3.0;
  return -cfg.mu * faces + 0.5 * cfg.dimension * ((t.n_vertices() - 1) * kLogTwoPi - log_of(kappa));
}

double term_for_triangulation(const EmbeddedTriangulation& t, const SeriesConfig& cfg) {
  return std::exp(log_term_for_triangulation(t, cfg));
}

double log_tutte_asymptotic_count(int k, TutteConstant constant) {
  if (k < 2) throw InvalidArgument("tutte_asymptotic_count: k must be >= 2");
  return std::log(sqrt_constant(constant) / 16.0) - 2.5 * std::log(k + 2.0) + (k + 3.0) * std::log(256.0 / 27.0);
}

double tutte_asymptotic_count(int k, TutteConstant constant) {
  return std::exp(log_tutte_asymptotic_count(k, constant));
}

double log_kappa_upper_bound(int n_vertices) {
  if (n_vertices < 4) throw InvalidArgument("kappa_upper_bound: n_vertices must be >= 4");
  const double n = n_vertices;
  return -std::log(n) + (n - 1.0) * std::log(3.0 * n / (n - 1.0));
}

double kappa_upper_bound(int n_vertices) { return std::exp(log_kappa_upper_bound(n_vertices)); }

double mu_critical(int dimension) {
  if (dimension < 1) throw InvalidArgument("mu_critical: dimension must be >= 1");
  return 0.5 * (std::log(256.0 / 27.0) + 0.5 * dimension * std::log(kTwoPi / 3.0));
}

PartitionResult sphere_lower_bound(const SeriesConfig& cfg) {
  constexpr int kFirst = 2;
  cfg.validate(kFirst);
  PartitionResult result;
  result.surface = SurfaceSpec::sphere().name();
  result.config = cfg;
  result.mu_critical = mu_critical(cfg.dimension);

  const double half_d = 0.5 * cfg.dimension;
  const int last = cfg.k_max.value_or(kSeriesHorizon);
  CompensatedSum sum;
  StopRule rule(cfg.tolerance());
  bool overflowed = false;
  for (int k = kFirst; k <= last; ++k) {
    const int n = k + 2;
    const double log_count = log_tutte_asymptotic_count(k, cfg.tutte_constant);
    const double log_bound = log_kappa_upper_bound(n);
    const double log_term = -2.0 * cfg.mu * k + log_count + half_d * (n * kLogTwoPi - log_bound);
    const double term = std::exp(log_term);
    if (log_term > kLogOverflow || !std::isfinite(sum.value() + term)) {
      overflowed = true;
      break;
    }
    sum.add(term);
    result.terms.push_back({k, n, std::exp(log_count), std::exp(log_bound), log_term, term});
    rule.observe(term, sum.value());
    if (!cfg.k_max && rule.satisfied()) break;
  }
  result.value = std::exp(log_prefactor(cfg.dimension)) * sum.value();
  const bool settled = cfg.k_max ? rule.last_small() : rule.satisfied();
  result.converged = !overflowed && settled && cfg.mu > result.mu_critical;
  return result;
}

PartitionResult general_surface_sum(const SurfaceSpec& surface, const SeedCatalog& catalog, const SeriesConfig& cfg) {
  if (catalog.surface != surface)
    throw InvalidArgument("catalog is for the " + catalog.surface.name() + ", not the " + surface.name());
  Enumerator enumerator(catalog, cfg.workers);
  const int chi = surface.euler_characteristic;
  const int first_k = enumerator.first_level() - chi;
  cfg.validate(first_k);

  PartitionResult result;
  result.surface = surface.name();
  result.config = cfg;
  result.mu_critical = mu_critical(cfg.dimension);

  const double half_d = 0.5 * cfg.dimension;
  const int last_k = cfg.k_max.value_or(cfg.max_vertices - chi);
  CompensatedSum sum;
  StopRule rule(cfg.tolerance());
  for (int k = first_k; k <= last_k; ++k) {
    const int n = k + chi;
    const auto& level = n == enumerator.first_level() ? enumerator.level(n) : enumerator.advance();
    std::map<BigInt, std::uint64_t> by_kappa;
    for (const auto& t : level) ++by_kappa[spanning_tree_count(t.graph())];
    CompensatedSum level_sum;
    for (const auto& [kappa, count] : by_kappa) {
      const double log_term = std::log(static_cast<double>(count)) - 2.0 * cfg.mu * k +
                              half_d * (n * kLogTwoPi - log_of(kappa));
      const double term = std::exp(log_term);
      level_sum.add(term);
      result.terms.push_back({k, n, count, kappa, log_term, term});
    }
    sum.add(level_sum.value());
    rule.observe(level_sum.value(), sum.value());
    if (!cfg.k_max && rule.satisfied()) break;
  }
  result.value = std::exp(log_prefactor(cfg.dimension)) * sum.value();
  result.converged = cfg.k_max ? rule.last_small() : rule.satisfied();
  return result;
}

PartitionResult truncated_sum(const SeedCatalog& catalog, const SeriesConfig& cfg) {
  return general_surface_sum(catalog.surface, catalog, cfg);
}

PartialComparison partial_comparison(const SeriesConfig& cfg) {
  cfg.validate(0);
  if (!cfg.k_max) throw InvalidArgument("partial comparison needs k_max");
  const double half_d = 0.5 * cfg.dimension;
  const int last = *cfg.k_max;
  CompensatedSum sphere;
  for (int k = 2; k <= last; ++k) {
    const int n = k + 2;
    sphere.add(std::exp(-2.0 * cfg.mu * k + half_d * (n * kLogTwoPi - log_kappa_upper_bound(n))));
  }
  constexpr int kTorusFirst = 10;
  constexpr double kTorusSeeds = 21.0;
  CompensatedSum torus;
  for (int k = kTorusFirst; k <= last; ++k)
    torus.add(std::exp(-2.0 * cfg.mu * k + half_d * (k * kLogTwoPi - log_kappa_upper_bound(k))));
  const double prefactor = std::exp(log_prefactor(cfg.dimension));
  return {prefactor * sphere.value(), prefactor * kTorusSeeds * torus.value()};
}

double round_significant(double value, int digits) {
  if (!std::isfinite(value) || value == 0.0) return value;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return std::strtod(buf, nullptr);
}

std::string to_json(const PartitionResult& result) {
  nlohmann::ordered_json j;
  j["surface"] = result.surface;
  j["mu"] = json_number(result.config.mu);
  j["D"] = result.config.dimension;
  j["mode"] = to_string(result.config.mode);
  j["value"] = json_number(result.value);
  j["converged"] = result.converged;
  j["mu_critical"] = json_number(result.mu_critical);
  auto terms = nlohmann::ordered_json::array();
  for (const auto& t : result.terms) {
    nlohmann::ordered_json row;
    row["k"] = t.k;
    if (const auto* count = std::get_if<std::uint64_t>(&t.class_count))
      row["C"] = *count;
    else
      row["C"] = json_number(std::get<double>(t.class_count));
    if (const auto* exact = std::get_if<BigInt>(&t.kappa)) {
      if (*exact <= std::numeric_limits<std::uint64_t>::max())
        row["kappa"] = exact->convert_to<std::uint64_t>();
      else
        row["kappa"] = to_string(*exact);
    } else {
      row["kappa"] = json_number(std::get<double>(t.kappa));
    }
    row["term"] = json_number(t.term);
    terms.push_back(std::move(row));
  }
  j["terms"] = std::move(terms);
  return j.dump(2) + "\n";
}

std::string to_csv(const PartitionResult& result) {
  std::ostringstream out;
  out << "k,n_vertices,C,kappa,log_term,term\n";
  for (const auto& t : result.terms) {
    out << t.k << ',' << t.n_vertices << ',';
    if (const auto* count = std::get_if<std::uint64_t>(&t.class_count))
      out << *count;
    else
      out << format_number(std::get<double>(t.class_count));
    out << ',';
    if (const auto* exact = std::get_if<BigInt>(&t.kappa))
      out << to_string(*exact);
    else
      out << format_number(std::get<double>(t.kappa));
    out << ',' << format_number(t.log_term) << ',' << format_number(t.term) << '\n';
  }
  return out.str();
}

std::string to_json(const PartialComparison& result, const SeriesConfig& cfg) {
  nlohmann::ordered_json j;
  j["mode"] = to_string(SeriesMode::kPartialSingleClass);
  j["mu"] = json_number(cfg.mu);
  j["D"] = cfg.dimension;
  j["k_max"] = cfg.k_max.value_or(0);
  j["sphere_partial"] = json_number(result.sphere);
  j["torus_partial"] = json_number(result.torus);
  j["ratio"] = result.torus > 0.0 ? json_number(result.sphere / result.torus) : nlohmann::ordered_json(nullptr);
  return j.dump(2) + "\n";
}

}  // namespace tristring
