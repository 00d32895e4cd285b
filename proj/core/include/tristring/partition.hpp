#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tristring/big_integer.hpp"
#include "tristring/catalog.hpp"
#include "tristring/surface.hpp"

namespace tristring {

enum class SeriesMode { kExactEnumerated, kLowerBoundSphere, kPartialSingleClass };

std::string to_string(SeriesMode mode);
/// "exact", "lower-bound", "partial".
SeriesMode parse_series_mode(const std::string& name);

/// Reading of the square-root prefactor in the asymptotic count of sphere
/// triangulations. kThreeOverTwoPi is sqrt(3 / (2 pi)); kThreeHalvesPi is
/// sqrt((3 / 2) pi), which is the reading that reproduces the reference sphere
/// lower-bound values 0.5115676 (D = 1) and 2.2794931 (D = 2) at mu = 2.
enum class TutteConstant { kThreeOverTwoPi, kThreeHalvesPi };

inline constexpr double kDefaultTolerance = 1e-12;
/// Consecutive small terms required before the series is declared converged.
inline constexpr int kConvergenceRun = 3;
/// Longest series evaluated when no k_max is given.
inline constexpr int kSeriesHorizon = 20000;

struct SeriesConfig {
  double mu = 2.0;
  int dimension = 1;
  std::optional<int> k_max;
  std::optional<double> eps;
  SeriesMode mode = SeriesMode::kLowerBoundSphere;
  TutteConstant tutte_constant = TutteConstant::kThreeHalvesPi;
  /// Exact mode without k_max stops enumerating at this many vertices.
  int max_vertices = 11;
  unsigned workers = 1;

  double tolerance() const { return eps.value_or(kDefaultTolerance); }
  /// Throws InvalidArgument on mu < 0, D < 1, eps outside (0, 1) or k_max < first_k.
  void validate(int first_k) const;
};

/// One row of a partition sum: all classes at level k (F = 2k faces) that share
/// a spanning-tree count, or one asymptotic level of the lower-bound series.
/// `term` is the row's contribution before the (1/2pi)^(D/2) prefactor.
struct PartitionTermRecord {
  int k = 0;
  int n_vertices = 0;
  std::variant<std::uint64_t, double> class_count;
  std::variant<BigInt, double> kappa;
  double log_term = 0.0;
  double term = 0.0;
};

struct PartitionResult {
  std::string surface;
  SeriesConfig config;
  double value = 0.0;
  std::vector<PartitionTermRecord> terms;
  bool converged = false;
  double mu_critical = 0.0;
};

/// e^(-mu F) ((2pi)^(V-1) / kappa)^(D/2) for one triangulation, in log space.
double log_term_for_triangulation(const EmbeddedTriangulation& t, const SeriesConfig& cfg);
double term_for_triangulation(const EmbeddedTriangulation& t, const SeriesConfig& cfg);

/// (1/16) c (k+2)^(-5/2) (256/27)^(k+3): asymptotic number of sphere
/// triangulations with k+2 vertices, where c is the selected square-root constant.
double tutte_asymptotic_count(int k, TutteConstant constant = TutteConstant::kThreeOverTwoPi);
double log_tutte_asymptotic_count(int k, TutteConstant constant = TutteConstant::kThreeOverTwoPi);

/// (1/n) (3n / (n-1))^(n-1) for n = k + 2 vertices.
double kappa_upper_bound(int n_vertices);
double log_kappa_upper_bound(int n_vertices);

/// Smallest mu at which the lower-bound term ratio drops below one:
/// (1/2) ln((256/27) (2pi/3)^(D/2)).
double mu_critical(int dimension);

/// Lower bound on Z(sphere) from the asymptotic class count and the spanning-tree
/// bound. Reports converged = false (with the partial value) when mu <= mu_critical.
PartitionResult sphere_lower_bound(const SeriesConfig& cfg);

/// Exact truncated sum over every enumerated class, with per-class spanning-tree
/// counts. Starts at the level of the smallest seed.
PartitionResult general_surface_sum(const SurfaceSpec& surface, const SeedCatalog& catalog, const SeriesConfig& cfg);
PartitionResult truncated_sum(const SeedCatalog& catalog, const SeriesConfig& cfg);

struct PartialComparison {
  double sphere = 0.0;
  double torus = 0.0;
};

/// Sphere and torus sums with one class per level and kappa replaced by its upper
/// bound; the torus sum carries the factor 21 and starts at k = 10.
PartialComparison partial_comparison(const SeriesConfig& cfg);

std::string to_json(const PartitionResult& result);
std::string to_csv(const PartitionResult& result);
std::string to_json(const PartialComparison& result, const SeriesConfig& cfg);

/// Value rounded to 12 significant digits, as written to JSON and CSV.
double round_significant(double value, int digits = 12);

}  // namespace tristring
