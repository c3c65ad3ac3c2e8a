#pragma once

// Desk-scale separable benchmark functions with seeded instances, and pure
// random search to generate run logs.
//
// The functions approximate the separable group of the bbob suite; they are
// not replicas (no oscillation transforms, unit slope weights).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "runfall/model.hpp"
#include "runfall/rng.hpp"

namespace runfall {

inline constexpr std::string_view kSuiteName = "mini";
inline constexpr std::string_view kRandomSearchName = "random-search";
inline constexpr double kDomainBound = 5.0;
inline constexpr double kOptimumBound = 4.0;

enum class FunctionId { sphere, ellipsoid, rastrigin, bueche, linear_slope };

std::string_view function_name(FunctionId id);
std::optional<FunctionId> parse_function(std::string_view name);

/// Suite order: sphere, ellipsoid, rastrigin, bueche, linear-slope.
std::span<const FunctionId> all_functions();

/// Comma separated names, each either a name or a suite-order range "a..b".
/// Throws InvalidArgument on unknown names.
std::vector<FunctionId> parse_function_list(std::string_view text);

class ProblemInstance {
 public:
  ProblemInstance(FunctionId function, std::uint32_t dimension, std::uint64_t instance_id,
                  std::vector<double> x_opt, double f_opt);

  FunctionId function() const noexcept { return function_; }
  std::uint32_t dimension() const noexcept { return dimension_; }
  std::uint64_t instance_id() const noexcept { return instance_id_; }
  /// For linear-slope this is the domain corner 5 * sign.
  std::span<const double> x_opt() const noexcept { return x_opt_; }
  double f_opt() const noexcept { return f_opt_; }

  ProblemTriple triple() const;

  friend bool operator==(const ProblemInstance&, const ProblemInstance&) = default;

 private:
  FunctionId function_;
  std::uint32_t dimension_;
  std::uint64_t instance_id_;
  std::vector<double> x_opt_;
  double f_opt_;
};

/// x_opt uniform in [-4, 4]^n (linear-slope: random corner of [-5, 5]^n) and
/// f_opt uniform in [-100, 100] rounded to 0.01, seeded by the triple alone.
ProblemInstance instantiate(FunctionId function, std::uint32_t dimension, std::uint64_t instance_id);
ProblemInstance instantiate(std::string_view function, std::uint32_t dimension,
                            std::uint64_t instance_id);

/// Objective value at x; throws InvalidArgument on a dimension mismatch.
double evaluate(const ProblemInstance& instance, std::span<const double> x);

/// `budget` uniform samples in [-5, 5]^n. The trace's reference value is f_opt
/// and total_evaluations == budget.
RunTrace random_search(const ProblemInstance& instance, Evals budget, Rng& rng,
                       IndicatorKind indicator = IndicatorKind::best_so_far,
                       std::string algorithm = std::string(kRandomSearchName));

}  // namespace runfall
