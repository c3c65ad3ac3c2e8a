#include "runfall/cli/app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <thread>
#include <vector>

#include "runfall/cli/curve_csv.hpp"
#include "runfall/cli/plot.hpp"
#include "runfall/ecdf.hpp"
#include "runfall/error.hpp"
#include "runfall/ingest.hpp"
#include "runfall/numfmt.hpp"
#include "runfall/refbest.hpp"
#include "runfall/rng.hpp"
#include "runfall/runtime.hpp"
#include "runfall/suite.hpp"
#include "runfall/targets.hpp"

namespace runfall::cli {
namespace fs = std::filesystem;

namespace {

constexpr std::string_view kSeedEnv = "RUNFALL_SEED";
constexpr std::string_view kDefaultTargets = "1e2:1e-8:51";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv(std::string(kSeedEnv).c_str())) {
    if (auto v = parse_uint(env)) return *v;
    throw UsageError(std::string(kSeedEnv) + " is not an unsigned integer: '" + env + "'");
  }
  throw UsageError("this command is randomized: pass --seed or set " + std::string(kSeedEnv));
}

Evals parse_budget(const std::string& text) {
  const auto v = parse_double(text);
  if (!v || !(*v >= 1.0) || *v > 9007199254740992.0 || std::floor(*v) != *v) {
    throw UsageError("budget must be a positive integer, got '" + text + "'");
  }
  return static_cast<Evals>(*v);
}

double parse_positive(const std::string& what, const std::string& text) {
  const auto v = parse_double(text);
  if (!v || !(*v > 0.0) || !std::isfinite(*v)) throw UsageError(what + " must be a positive number, got '" + text + "'");
  return *v;
}

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::size_t start = 0;
    while (start <= item.size()) {
      auto comma = item.find(',', start);
      if (comma == std::string::npos) comma = item.size();
      if (comma > start) out.push_back(item.substr(start, comma - start));
      start = comma + 1;
    }
  }
  return out;
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

DataSet load(const std::vector<std::string>& inputs, bool allow_repetitions) {
  std::vector<fs::path> paths(inputs.begin(), inputs.end());
  return load_dataset(paths, LoadOptions{allow_repetitions});
}

std::string resolve_algorithm(const DataSet& dataset, const std::string& requested) {
  if (!requested.empty()) {
    const auto names = dataset.algorithms();
    if (std::find(names.begin(), names.end(), requested) == names.end()) {
      throw DataError("no trials for algorithm '" + requested + "'");
    }
    return requested;
  }
  const auto names = dataset.algorithms();
  if (names.empty()) throw DataError("no run logs found");
  if (names.size() > 1) throw UsageError("data holds several algorithms (" + join(names, ", ") + "); pass --algorithm");
  return names.front();
}

XUnit parse_x_unit(const std::string& text) {
  if (text == "evals") return XUnit::evals;
  if (text == "evals-per-dimension") return XUnit::evals_per_dimension;
  throw UsageError("x unit must be 'evals' or 'evals-per-dimension'");
}

// Non-random outputs state that no seed, bootstrap count or generator was used.
std::string deterministic_header() { return "# seed=none\n# N=none\n# prng=none\n"; }

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

// run ------------------------------------------------------------------------

struct RunOptions {
  std::string suite = std::string(kSuiteName);
  std::string functions = "sphere..linear-slope";
  std::vector<std::uint32_t> dims;
  std::uint64_t instances = 15;
  std::string budget = "1000000";
  std::string algorithm = std::string(kRandomSearchName);
  std::string label;
  std::string indicator = "best-so-far";
  std::optional<std::uint64_t> seed;
  unsigned threads = 1;
  std::string out_dir;
};

int cmd_run(const RunOptions& o, std::ostream& out) {
  if (o.suite != kSuiteName) throw UsageError("unknown suite '" + o.suite + "' (available: mini)");
  if (o.algorithm != kRandomSearchName) {
    throw UsageError("unknown algorithm '" + o.algorithm + "' (built in: random-search)");
  }
  IndicatorKind indicator = IndicatorKind::best_so_far;
  if (o.indicator == "noisy-percentile") {
    indicator = IndicatorKind::noisy_percentile;
  } else if (o.indicator != "best-so-far") {
    throw UsageError("indicator must be 'best-so-far' or 'noisy-percentile'");
  }
  if (o.instances < 1) throw UsageError("need at least one instance");
  const std::uint64_t seed = resolve_seed(o.seed);
  const Evals budget = parse_budget(o.budget);
  const std::vector<FunctionId> functions = parse_function_list(o.functions);
  const std::string label = o.label.empty() ? o.algorithm : o.label;

  struct Job {
    FunctionId function;
    std::uint32_t dim;
    std::uint64_t instance;
    std::string text;
  };
  std::vector<Job> jobs;
  for (FunctionId f : functions) {
    for (std::uint32_t d : o.dims) {
      if (d < 1) throw UsageError("dimension must be >= 1");
      for (std::uint64_t i = 1; i <= o.instances; ++i) jobs.push_back({f, d, i, {}});
    }
  }

  const std::vector<std::string> comments = {"generator=runfall run", "seed=" + std::to_string(seed),
                                             "N=none", "prng=" + std::string(Rng::kIdentifier),
                                             "indicator=" + o.indicator};
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t j = next++; j < jobs.size(); j = next++) {
      Job& job = jobs[j];
      const ProblemInstance instance = instantiate(job.function, job.dim, job.instance);
      const std::string key = o.algorithm + "/" + std::string(function_name(job.function)) + "/" +
                              std::to_string(job.dim) + "/" + std::to_string(job.instance);
      Rng rng(derive_seed(seed, key));
      job.text = write_run_log(random_search(instance, budget, rng, indicator, label), comments);
    }
  };
  const unsigned threads = std::max(1u, o.threads);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }

  std::string stem = label;
  std::replace(stem.begin(), stem.end(), '/', '_');
  for (const Job& job : jobs) {
    char inst[32];
    std::snprintf(inst, sizeof inst, "%03llu", static_cast<unsigned long long>(job.instance));
    const fs::path file = fs::path(o.out_dir) / (stem + "_" + std::string(function_name(job.function)) + "_d" +
                                                 std::to_string(job.dim) + "_i" + inst + ".rlog");
    write_text_file(file, job.text);
  }
  out << "wrote " << jobs.size() << " run logs to " << o.out_dir << " (seed=" << seed << ")\n";
  return kExitOk;
}

// art ------------------------------------------------------------------------

struct ArtOptions {
  std::vector<std::string> inputs;
  std::string table;
  std::string label = "table";
  std::string targets = std::string(kDefaultTargets);
  std::string algorithm;
  std::vector<std::string> functions;
  std::vector<std::uint32_t> dims;
  bool allow_repetitions = false;
};

void append_art_rows(std::string& csv, const std::string& algorithm, const RuntimeTable& table) {
  for (const auto& [key, entry] : table) {
    csv += algorithm + "," + key.function_id + "," + std::to_string(key.dimension) + "," +
           format_double(key.precision) + "," + std::to_string(entry.successes.size()) + "," +
           std::to_string(entry.instance_count()) + "," + format_double(art(entry)) + "\n";
  }
}

int cmd_art(const ArtOptions& o, std::ostream& out) {
  if (o.inputs.empty() == o.table.empty()) throw UsageError("pass either --in or --table");
  const TargetSet targets = parse_target_range(o.targets);
  const auto functions = split_list(o.functions);
  const auto wanted_function = [&](const std::string& f) {
    return functions.empty() || std::find(functions.begin(), functions.end(), f) != functions.end();
  };
  const auto wanted_dim = [&](std::uint32_t d) {
    return o.dims.empty() || std::find(o.dims.begin(), o.dims.end(), d) != o.dims.end();
  };

  std::string csv = "# generator=runfall art\n" + deterministic_header() + "# targets=" + o.targets + "\n";
  csv += "algorithm,function,dimension,precision,n_success,K,art\n";
  if (!o.table.empty()) {
    const RuntimeTable table = parse_runtime_table(read_text_file(o.table));
    RuntimeTable filtered;
    for (const auto& [key, entry] : table) {
      if (!wanted_function(key.function_id) || !wanted_dim(key.dimension)) continue;
      if (std::find(targets.precisions().begin(), targets.precisions().end(), key.precision) ==
          targets.precisions().end()) {
        continue;
      }
      filtered.insert(key, entry);
    }
    append_art_rows(csv, o.label, filtered);
  } else {
    const DataSet dataset = load(o.inputs, o.allow_repetitions);
    for (const auto& alg : dataset.algorithms()) {
      if (!o.algorithm.empty() && alg != o.algorithm) continue;
      for (const auto& f : dataset.functions(alg)) {
        if (!wanted_function(f)) continue;
        for (std::uint32_t d : dataset.dimensions(alg)) {
          if (!wanted_dim(d) || dataset.group(alg, f, d).empty()) continue;
          append_art_rows(csv, alg, extract_runtimes(dataset, alg, f, d, targets));
        }
      }
    }
  }
  out << csv;
  return kExitOk;
}

// targets --------------------------------------------------------------------

struct TargetsOptions {
  std::vector<std::string> inputs;
  std::string table;
  std::string algorithm;
  std::string function;
  std::uint32_t dim = 0;
  std::string budgets = "five";
  std::optional<bool> unique;
  std::string candidates = std::string(kDefaultTargets);
  bool allow_repetitions = false;
};

int cmd_targets(const TargetsOptions& o, std::ostream& out) {
  if (o.inputs.empty() == o.table.empty()) throw UsageError("pass either --in or --table as reference data");
  BudgetVariant variant;
  if (o.budgets == "five") {
    variant = BudgetVariant::five;
  } else if (o.budgets == "thirtyone") {
    variant = BudgetVariant::thirtyone;
  } else {
    throw UsageError("--budgets must be 'five' or 'thirtyone'");
  }
  const bool unique = o.unique.value_or(default_unique(variant));
  const TargetSet candidates = parse_target_range(o.candidates);

  RuntimeTable reference;
  std::string source;
  if (!o.table.empty()) {
    reference = parse_runtime_table(read_text_file(o.table));
    source = o.table;
  } else {
    const DataSet dataset = load(o.inputs, o.allow_repetitions);
    const std::string alg = resolve_algorithm(dataset, o.algorithm);
    reference = extract_runtimes(dataset, alg, o.function, o.dim, candidates);
    source = alg;
  }
  const RunlengthTargets chosen = runlength_targets(reference, o.function, o.dim, candidates,
                                                    default_expensive_budgets(o.dim, variant), unique);

  std::string csv = "# generator=runfall targets\n" + deterministic_header() + "# reference=" + source + "\n# function=" + o.function +
                    "\n# dimension=" + std::to_string(o.dim) + "\n# budgets=" + o.budgets +
                    "\n# unique=" + (unique ? "on" : "off") + "\n# candidates=" + o.candidates + "\n";
  csv += "budget,precision\n";
  for (const auto& c : chosen.chosen) csv += format_double(c.budget) + "," + format_double(c.precision) + "\n";
  out << csv;
  return kExitOk;
}

// ecdf -----------------------------------------------------------------------

struct EcdfCommandOptions {
  std::vector<std::string> inputs;
  std::string table;
  std::string algorithm;
  std::string label;
  std::vector<std::uint32_t> dims;
  std::vector<std::string> functions;
  std::string targets = std::string(kDefaultTargets);
  std::size_t bootstraps = kDefaultBootstraps;
  std::optional<std::uint64_t> seed;
  unsigned threads = 1;
  std::string x_unit = "evals";
  bool no_variance_reduction = false;
  bool allow_repetitions = false;
  std::string out_file;
};

int cmd_ecdf(const EcdfCommandOptions& o, std::ostream& out) {
  if (o.inputs.empty() == o.table.empty()) throw UsageError("pass either --in or --table");
  if (o.dims.empty()) throw UsageError("--dim is required");
  AggregationScope scope{o.algorithm, o.dims, split_list(o.functions)};
  scope.dimension();
  if (o.bootstraps < 1) throw UsageError("--bootstraps must be >= 1");

  EcdfOptions options;
  options.bootstraps = o.bootstraps;
  options.seed = resolve_seed(o.seed);
  options.variance_reduction = !o.no_variance_reduction;
  options.x_unit = parse_x_unit(o.x_unit);
  options.threads = std::max(1u, o.threads);
  const TargetSet targets = parse_target_range(o.targets);

  std::string source;
  std::optional<EcdfCurve> curve;
  RuntimeTable scoped;
  if (!o.table.empty()) {
    const RuntimeTable table = parse_runtime_table(read_text_file(o.table));
    scoped = scope_table(table, scope, targets);
    source = o.label.empty() ? fs::path(o.table).stem().string() : o.label;
  } else {
    const DataSet dataset = load(o.inputs, o.allow_repetitions);
    scope.algorithm = resolve_algorithm(dataset, o.algorithm);
    scoped = scope_table(dataset, scope, targets);
    source = o.label.empty() ? scope.algorithm : o.label;
  }
  curve = aggregate_ecdf(scoped, scope, targets, options);

  std::vector<std::string> functions;
  for (const auto& k : scoped.keys()) {
    if (functions.empty() || functions.back() != k.function_id) functions.push_back(k.function_id);
  }
  const Metadata meta = {{"label", source},
                         {"dimension", std::to_string(scope.dimension())},
                         {"functions", join(functions, ";")},
                         {"targets", o.targets},
                         {"seed", std::to_string(options.seed)},
                         {"N", std::to_string(options.bootstraps)},
                         {"prng", std::string(Rng::kIdentifier)},
                         {"variance_reduction", options.variance_reduction ? "on" : "off"},
                         {"x_unit", o.x_unit}};
  emit(out, o.out_file, write_ecdf_csv(*curve, meta));
  return kExitOk;
}

// best -----------------------------------------------------------------------

struct BestOptions {
  std::vector<std::string> inputs;
  std::vector<std::string> algorithms;
  std::vector<std::uint32_t> dims;
  std::string targets = std::string(kDefaultTargets);
  std::string table_out;
  bool allow_repetitions = false;
};

int cmd_best(const BestOptions& o, std::ostream& out) {
  const DataSet dataset = load(o.inputs, o.allow_repetitions);
  const TargetSet targets = parse_target_range(o.targets);
  auto names = split_list(o.algorithms);
  if (names.empty()) names = dataset.algorithms();
  if (names.empty()) throw DataError("no run logs found");

  AlgorithmTables tables;
  for (const auto& alg : names) {
    RuntimeTable all = extract_all_runtimes(dataset, alg, targets);
    if (all.empty()) throw DataError("no trials for algorithm '" + alg + "'");
    RuntimeTable filtered;
    for (const auto& [key, entry] : all) {
      if (o.dims.empty() || std::find(o.dims.begin(), o.dims.end(), key.dimension) != o.dims.end()) {
        filtered.insert(key, entry);
      }
    }
    tables.emplace(alg, std::move(filtered));
  }
  const SelectionMap selection = select_best(tables);
  const RuntimeTable composed = compose_virtual_dataset(selection, tables);

  std::string csv = "# generator=runfall best\n" + deterministic_header() + "# algorithms=" + join(names, ";") + "\n# targets=" + o.targets + "\n";
  csv += "function,dimension,precision,algorithm,art,n_success,K\n";
  for (const auto& [key, sel] : selection) {
    csv += key.function_id + "," + std::to_string(key.dimension) + "," + format_double(key.precision) + "," +
           sel.algorithm + "," + format_double(sel.art) + "," + std::to_string(sel.successes) + "," +
           std::to_string(sel.instances) + "\n";
  }
  out << csv;
  if (!o.table_out.empty()) write_text_file(o.table_out, write_runtime_table(composed));
  return kExitOk;
}

// plot -----------------------------------------------------------------------

struct PlotOptions {
  std::string kind;
  std::vector<std::string> inputs;
  std::vector<std::string> labels;
  std::string out_file;
  std::string title;
  bool linear_x = false;
  bool linear_y = false;
  std::string algorithm;
  std::string function;
  std::string precision = "1e-8";
  bool allow_repetitions = false;
};

int cmd_plot(const PlotOptions& o, std::ostream& out) {
  PlotSpec spec;
  spec.log_x = !o.linear_x;
  spec.log_y = !o.linear_y;
  spec.title = o.title;
  std::string svg;

  if (o.kind == "ecdf") {
    spec.kind = PlotKind::ecdf;
    std::vector<LabeledCurve> curves;
    std::optional<std::string> unit;
    for (std::size_t i = 0; i < o.inputs.size(); ++i) {
      EcdfCsv csv = read_ecdf_csv(read_text_file(o.inputs[i]));
      std::string label = i < o.labels.size() ? o.labels[i]
                                              : csv.get("label").value_or(fs::path(o.inputs[i]).stem().string());
      const std::string this_unit = csv.get("x_unit").value_or("evals");
      if (unit && *unit != this_unit) throw UsageError("curves use different x units");
      unit = this_unit;
      const std::string prefix = "curve" + std::to_string(i) + ".";
      spec.metadata.emplace_back(prefix + "label", label);
      for (const char* key : {"dimension", "seed", "N", "prng"}) {
        spec.metadata.emplace_back(prefix + key, csv.get(key).value_or("none"));
      }
      curves.push_back({std::move(label), std::move(csv.curve)});
    }
    spec.x_unit = parse_x_unit(unit.value_or("evals"));
    svg = render_ecdf_svg(curves, spec);
  } else if (o.kind == "scaling") {
    spec.kind = PlotKind::scaling;
    if (o.function.empty()) throw UsageError("--function is required for scaling plots");
    const double precision = parse_positive("--precision", o.precision);
    const DataSet dataset = load(o.inputs, o.allow_repetitions);
    std::vector<std::string> algs = dataset.algorithms();
    if (!o.algorithm.empty()) algs = {resolve_algorithm(dataset, o.algorithm)};
    std::vector<ScalingSeries> series;
    for (const auto& alg : algs) {
      std::vector<std::uint32_t> dims;
      for (std::uint32_t d : dataset.dimensions(alg)) {
        if (!dataset.group(alg, o.function, d).empty()) dims.push_back(d);
      }
      if (dims.empty()) continue;
      series.push_back({alg, scaling_series(dataset, alg, o.function, dims, precision)});
    }
    if (series.empty()) throw DataError("no trials for function '" + o.function + "'");
    spec.metadata = {{"function", o.function}, {"precision", format_double(precision)}, {"seed", "none"},
                     {"N", "none"}, {"prng", "none"}};
    svg = render_scaling_svg(series, spec);
  } else {
    throw UsageError("--kind must be 'ecdf' or 'scaling'");
  }
  write_text_file(o.out_file, svg);
  out << "wrote " << o.out_file << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"runfall: fixed-target runtime analysis of black-box optimization benchmarks", "runfall"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  const auto add_seed = [](CLI::App* sub, std::optional<std::uint64_t>& seed) {
    sub->add_option("--seed", seed, "Master seed (falls back to RUNFALL_SEED)");
  };

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "Generate run logs with the built-in suite");
  run_cmd->add_option("--suite", run.suite, "Benchmark suite")->capture_default_str();
  run_cmd->add_option("--functions", run.functions, "Functions, e.g. sphere..linear-slope or sphere,rastrigin")
      ->capture_default_str();
  run_cmd->add_option("--dim", run.dims, "Dimension (repeatable)")->required();
  run_cmd->add_option("--instances", run.instances, "Instances per function and dimension")->capture_default_str();
  run_cmd->add_option("--budget", run.budget, "Evaluations per trial")->capture_default_str();
  run_cmd->add_option("--algorithm", run.algorithm, "Built-in algorithm")->capture_default_str();
  run_cmd->add_option("--label", run.label, "Algorithm name written to the logs");
  run_cmd->add_option("--indicator", run.indicator, "best-so-far or noisy-percentile")->capture_default_str();
  add_seed(run_cmd, run.seed);
  run_cmd->add_option("--threads", run.threads, "Worker threads")->capture_default_str();
  run_cmd->add_option("--out", run.out_dir, "Output directory")->required();

  ArtOptions art_o;
  auto* art_cmd = app.add_subcommand("art", "Average runtime per (algorithm, function, dimension, precision)");
  art_cmd->add_option("--in", art_o.inputs, "Run-log files or directories");
  art_cmd->add_option("--table", art_o.table, "Runtime table instead of run logs");
  art_cmd->add_option("--label", art_o.label, "Algorithm column for --table")->capture_default_str();
  art_cmd->add_option("--targets", art_o.targets, "Target precisions MAX:MIN:COUNT")->capture_default_str();
  art_cmd->add_option("--algorithm", art_o.algorithm, "Only this algorithm");
  art_cmd->add_option("--functions", art_o.functions, "Only these functions");
  art_cmd->add_option("--dim", art_o.dims, "Only these dimensions");
  art_cmd->add_flag("--allow-repetitions", art_o.allow_repetitions, "Renumber repeated instances");

  TargetsOptions tgt;
  auto* tgt_cmd = app.add_subcommand("targets", "Runlength-based targets from reference data");
  tgt_cmd->add_option("--in", tgt.inputs, "Reference run logs");
  tgt_cmd->add_option("--table", tgt.table, "Reference runtime table (e.g. from `best --table-out`)");
  tgt_cmd->add_option("--algorithm", tgt.algorithm, "Reference algorithm in --in");
  tgt_cmd->add_option("--function", tgt.function, "Function")->required();
  tgt_cmd->add_option("--dim", tgt.dim, "Dimension")->required()->check(CLI::PositiveNumber);
  tgt_cmd->add_option("--budgets", tgt.budgets, "five or thirtyone")->capture_default_str();
  tgt_cmd->add_flag("--unique,!--no-unique", tgt.unique, "Never pick a target twice");
  tgt_cmd->add_option("--candidates", tgt.candidates, "Candidate precisions MAX:MIN:COUNT")->capture_default_str();
  tgt_cmd->add_flag("--allow-repetitions", tgt.allow_repetitions, "Renumber repeated instances");

  EcdfCommandOptions ec;
  auto* ecdf_cmd = app.add_subcommand("ecdf", "Bootstrapped runtime ECDF for one dimension");
  ecdf_cmd->add_option("--in", ec.inputs, "Run-log files or directories");
  ecdf_cmd->add_option("--table", ec.table, "Runtime table instead of run logs");
  ecdf_cmd->add_option("--algorithm", ec.algorithm, "Algorithm");
  ecdf_cmd->add_option("--label", ec.label, "Curve label");
  ecdf_cmd->add_option("--dim", ec.dims, "Dimension (exactly one)");
  ecdf_cmd->add_option("--functions", ec.functions, "Functions to aggregate (default: all)");
  ecdf_cmd->add_option("--targets", ec.targets, "Target precisions MAX:MIN:COUNT")->capture_default_str();
  ecdf_cmd->add_option("--bootstraps,-N", ec.bootstraps, "Simulated restarts per pair")->capture_default_str();
  add_seed(ecdf_cmd, ec.seed);
  ecdf_cmd->add_option("--threads", ec.threads, "Worker threads")->capture_default_str();
  ecdf_cmd->add_option("--x-unit", ec.x_unit, "evals or evals-per-dimension")->capture_default_str();
  ecdf_cmd->add_flag("--no-variance-reduction", ec.no_variance_reduction, "Random first trial in every sample");
  ecdf_cmd->add_flag("--allow-repetitions", ec.allow_repetitions, "Renumber repeated instances");
  ecdf_cmd->add_option("--out", ec.out_file, "Output CSV (default: standard output)");

  BestOptions best;
  auto* best_cmd = app.add_subcommand("best", "Compose the artificial best algorithm");
  best_cmd->add_option("--in", best.inputs, "Run logs of all candidate algorithms")->required();
  best_cmd->add_option("--algorithms", best.algorithms, "Candidate algorithms (default: all)");
  best_cmd->add_option("--dim", best.dims, "Only these dimensions");
  best_cmd->add_option("--targets", best.targets, "Target precisions MAX:MIN:COUNT")->capture_default_str();
  best_cmd->add_option("--table-out", best.table_out, "Write the composed runtime table here");
  best_cmd->add_flag("--allow-repetitions", best.allow_repetitions, "Renumber repeated instances");

  PlotOptions plot;
  auto* plot_cmd = app.add_subcommand("plot", "Render an ECDF or scaling SVG");
  plot_cmd->add_option("--kind", plot.kind, "ecdf or scaling")->required();
  plot_cmd->add_option("--in", plot.inputs, "ECDF CSV files (ecdf) or run logs (scaling)")->required();
  plot_cmd->add_option("--label", plot.labels, "Curve labels, in --in order");
  plot_cmd->add_option("--out", plot.out_file, "Output SVG")->required();
  plot_cmd->add_option("--title", plot.title, "Plot title");
  plot_cmd->add_flag("--linear-x", plot.linear_x, "Linear x axis");
  plot_cmd->add_flag("--linear-y", plot.linear_y, "Linear y axis (scaling)");
  plot_cmd->add_option("--algorithm", plot.algorithm, "Only this algorithm (scaling)");
  plot_cmd->add_option("--function", plot.function, "Function (scaling)");
  plot_cmd->add_option("--precision", plot.precision, "Target precision (scaling)")->capture_default_str();
  plot_cmd->add_flag("--allow-repetitions", plot.allow_repetitions, "Renumber repeated instances");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*run_cmd) return cmd_run(run, out);
    if (*art_cmd) return cmd_art(art_o, out);
    if (*tgt_cmd) return cmd_targets(tgt, out);
    if (*ecdf_cmd) return cmd_ecdf(ec, out);
    if (*best_cmd) return cmd_best(best, out);
    if (*plot_cmd) return cmd_plot(plot, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace runfall::cli
