#include "runfall/suite.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "runfall/error.hpp"
#include "runfall/indicator.hpp"

namespace runfall {

namespace {

constexpr std::array<FunctionId, 5> kFunctions = {FunctionId::sphere, FunctionId::ellipsoid,
                                                  FunctionId::rastrigin, FunctionId::bueche,
                                                  FunctionId::linear_slope};

constexpr std::uint64_t kInstanceSeed = 0x72756e66616c6cULL;

double rastrigin_sum(std::span<const double> z) {
  double cos_sum = 0.0;
  double sq_sum = 0.0;
  for (double v : z) {
    cos_sum += std::cos(2.0 * std::numbers::pi * v);
    sq_sum += v * v;
  }
  return 10.0 * (static_cast<double>(z.size()) - cos_sum) + sq_sum;
}

// Scaling exponent i / (n - 1), 0 for n == 1.
double ramp(std::size_t i, std::size_t n) {
  return n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
}

// Objective without the dimension check. `z` is scratch of size n.
double evaluate_into(const ProblemInstance& p, std::span<const double> x, std::vector<double>& z) {
  const auto x_opt = p.x_opt();
  const std::size_t n = x.size();
  double sum = 0.0;
  switch (p.function()) {
    case FunctionId::sphere:
      for (std::size_t i = 0; i < n; ++i) {
        const double d = x[i] - x_opt[i];
        sum += d * d;
      }
      break;
    case FunctionId::ellipsoid:
      for (std::size_t i = 0; i < n; ++i) {
        const double d = x[i] - x_opt[i];
        sum += std::pow(10.0, 6.0 * ramp(i, n)) * d * d;
      }
      break;
    case FunctionId::rastrigin:
      for (std::size_t i = 0; i < n; ++i) z[i] = x[i] - x_opt[i];
      sum = rastrigin_sum(z);
      break;
    case FunctionId::bueche:
      for (std::size_t i = 0; i < n; ++i) {
        const double d = x[i] - x_opt[i];
        double s = std::pow(10.0, 0.5 * ramp(i, n));
        // odd 1-based index, positive side
        if (i % 2 == 0 && d > 0.0) s *= 10.0;
        z[i] = s * d;
      }
      sum = rastrigin_sum(z);
      break;
    case FunctionId::linear_slope:
      for (std::size_t i = 0; i < n; ++i) {
        const double s = x_opt[i] > 0.0 ? 1.0 : -1.0;
        const double zi = x[i] * x_opt[i] < kDomainBound * kDomainBound ? x[i] : x_opt[i];
        sum += kDomainBound * std::abs(s) - s * zi;
      }
      break;
  }
  return p.f_opt() + sum;
}

}  // namespace

std::string_view function_name(FunctionId id) {
  switch (id) {
    case FunctionId::sphere: return "sphere";
    case FunctionId::ellipsoid: return "ellipsoid";
    case FunctionId::rastrigin: return "rastrigin";
    case FunctionId::bueche: return "bueche";
    case FunctionId::linear_slope: return "linear-slope";
  }
  return "unknown";
}

std::optional<FunctionId> parse_function(std::string_view name) {
  for (FunctionId id : kFunctions) {
    if (function_name(id) == name) return id;
  }
  return std::nullopt;
}

std::span<const FunctionId> all_functions() { return kFunctions; }

std::vector<FunctionId> parse_function_list(std::string_view text) {
  const auto lookup = [](std::string_view name) {
    auto id = parse_function(name);
    if (!id) throw InvalidArgument("unknown function '" + std::string(name) + "'");
    return *id;
  };
  std::vector<FunctionId> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view item = text.substr(start, comma - start);
    if (item.empty()) throw InvalidArgument("empty function name in list");
    if (auto dots = item.find(".."); dots != std::string_view::npos) {
      const auto a = static_cast<std::size_t>(lookup(item.substr(0, dots)));
      const auto b = static_cast<std::size_t>(lookup(item.substr(dots + 2)));
      if (a > b) throw InvalidArgument("function range '" + std::string(item) + "' runs backwards");
      for (std::size_t i = a; i <= b; ++i) out.push_back(kFunctions[i]);
    } else {
      out.push_back(lookup(item));
    }
    start = comma + 1;
  }
  return out;
}

ProblemInstance::ProblemInstance(FunctionId function, std::uint32_t dimension,
                                 std::uint64_t instance_id, std::vector<double> x_opt, double f_opt)
    : function_(function),
      dimension_(dimension),
      instance_id_(instance_id),
      x_opt_(std::move(x_opt)),
      f_opt_(f_opt) {
  if (dimension_ < 1) throw InvalidArgument("dimension must be >= 1");
  if (x_opt_.size() != dimension_) throw InvalidArgument("x_opt size differs from dimension");
}

ProblemTriple ProblemInstance::triple() const {
  return {std::string(function_name(function_)), dimension_, instance_id_};
}

ProblemInstance instantiate(FunctionId function, std::uint32_t dimension, std::uint64_t instance_id) {
  if (dimension < 1) throw InvalidArgument("dimension must be >= 1");
  const std::string key = std::string(kSuiteName) + "/" + std::string(function_name(function)) + "/" +
                          std::to_string(dimension) + "/" + std::to_string(instance_id);
  Rng rng(derive_seed(kInstanceSeed, key));
  std::vector<double> x_opt(dimension);
  for (double& v : x_opt) {
    if (function == FunctionId::linear_slope) {
      v = rng.uniform01() < 0.5 ? -kDomainBound : kDomainBound;
    } else {
      v = rng.uniform(-kOptimumBound, kOptimumBound);
    }
  }
  const double f_opt = std::round(rng.uniform(-100.0, 100.0) * 100.0) / 100.0;
  return ProblemInstance(function, dimension, instance_id, std::move(x_opt), f_opt);
}

ProblemInstance instantiate(std::string_view function, std::uint32_t dimension,
                            std::uint64_t instance_id) {
  auto id = parse_function(function);
  if (!id) throw InvalidArgument("unknown function '" + std::string(function) + "'");
  return instantiate(*id, dimension, instance_id);
}

double evaluate(const ProblemInstance& instance, std::span<const double> x) {
  if (x.size() != instance.dimension()) {
    throw InvalidArgument("evaluate: got " + std::to_string(x.size()) + " coordinates for dimension " +
                          std::to_string(instance.dimension()));
  }
  std::vector<double> scratch(x.size());
  return evaluate_into(instance, x, scratch);
}

RunTrace random_search(const ProblemInstance& instance, Evals budget, Rng& rng,
                       IndicatorKind indicator, std::string algorithm) {
  if (budget < 1) throw InvalidArgument("random_search: budget must be >= 1");
  const std::size_t n = instance.dimension();
  std::vector<double> x(n);
  std::vector<double> scratch(n);
  std::vector<Step> steps;
  std::vector<double> history;
  if (indicator == IndicatorKind::noisy_percentile) history.reserve(budget);

  for (Evals t = 1; t <= budget; ++t) {
    for (double& v : x) v = rng.uniform(-kDomainBound, kDomainBound);
    const double f = evaluate_into(instance, x, scratch);
    if (indicator == IndicatorKind::noisy_percentile) {
      history.push_back(f);
    } else if (steps.empty() || f < steps.back().value) {
      steps.push_back({t, f});
    }
  }
  if (indicator == IndicatorKind::noisy_percentile) steps = noisy_indicator(history);
  return RunTrace(std::string(kSuiteName), std::move(algorithm), instance.triple(), instance.f_opt(),
                  std::move(steps), budget);
}

}  // namespace runfall
