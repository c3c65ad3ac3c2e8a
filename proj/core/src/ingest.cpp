#include "runfall/ingest.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include "runfall/error.hpp"
#include "runfall/numfmt.hpp"

namespace runfall {
namespace fs = std::filesystem;

namespace {

constexpr std::array<std::string_view, 7> kHeaderKeys = {
    "format", "suite", "algorithm", "function", "dimension", "instance", "reference"};

std::string_view strip_comment(std::string_view line) {
  if (auto pos = line.find('#'); pos != std::string_view::npos) line = line.substr(0, pos);
  return trim(line);
}

std::vector<std::string_view> split_ws(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t') ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

// Calls fn(line_number, line) for every '\n'-separated line.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    fn(line_no, text.substr(start, end - start));
    if (end == text.size()) break;
    start = end + 1;
  }
}

class HeaderBuilder {
 public:
  void set(std::size_t line, std::string_view key, std::string_view value) {
    const auto it = std::find(kHeaderKeys.begin(), kHeaderKeys.end(), key);
    if (it == kHeaderKeys.end()) throw ParseError(line, "unknown header key '" + std::string(key) + "'");
    const auto idx = static_cast<std::size_t>(it - kHeaderKeys.begin());
    if (seen_[idx]) throw ParseError(line, "duplicate header key '" + std::string(key) + "'");
    seen_[idx] = true;
    any_ = true;
    if (value.empty()) throw ParseError(line, "empty value for '" + std::string(key) + "'");

    if (key == "format") {
      auto v = parse_uint(value);
      if (!v || *v != static_cast<std::uint64_t>(kRunLogFormatVersion)) {
        throw ParseError(line, "unsupported format '" + std::string(value) + "'");
      }
      header_.format_version = static_cast<int>(*v);
    } else if (key == "suite") {
      header_.suite = value;
    } else if (key == "algorithm") {
      header_.algorithm = value;
    } else if (key == "function") {
      header_.function_id = value;
    } else if (key == "dimension") {
      auto v = parse_uint(value);
      if (!v || *v < 1 || *v > std::numeric_limits<std::uint32_t>::max()) {
        throw ParseError(line, "dimension must be a positive integer");
      }
      header_.dimension = static_cast<std::uint32_t>(*v);
    } else if (key == "instance") {
      auto v = parse_uint(value);
      if (!v) throw ParseError(line, "instance must be a non-negative integer");
      header_.instance_id = *v;
    } else {
      auto v = parse_double(value);
      if (!v || !std::isfinite(*v)) throw ParseError(line, "reference must be a finite number");
      header_.reference_value = *v;
    }
  }

  bool any() const { return any_; }

  const LogHeader& finish(std::size_t line) const {
    for (std::size_t i = 0; i < kHeaderKeys.size(); ++i) {
      if (!seen_[i]) throw ParseError(line, "missing header key '" + std::string(kHeaderKeys[i]) + "'");
    }
    return header_;
  }

 private:
  LogHeader header_;
  std::array<bool, kHeaderKeys.size()> seen_{};
  bool any_ = false;
};

void check_name(std::string_view what, const std::string& value) {
  if (value.empty() || value.find_first_of("#\n\r,") != std::string::npos || trim(value) != value) {
    throw InvalidArgument(std::string(what) + " '" + value +
                          "' must be non-empty, without surrounding whitespace, '#', ',' or line breaks");
  }
}

}  // namespace

RunTrace parse_run_log(std::string_view text) {
  enum class State { header, data, done };
  State state = State::header;
  HeaderBuilder header;
  std::optional<LogHeader> parsed_header;
  std::vector<Step> steps;
  std::optional<Evals> last_raw_evals;
  std::optional<Evals> total;
  std::size_t last_line = 0;

  for_each_line(text, [&](std::size_t ln, std::string_view raw) {
    if (!trim(raw).empty()) last_line = ln;
    const std::string_view line = strip_comment(raw);
    switch (state) {
      case State::header: {
        if (line.empty()) {
          if (header.any()) {
            parsed_header = header.finish(ln);
            state = State::data;
          }
          return;
        }
        const auto colon = line.find(':');
        if (colon == std::string_view::npos) {
          throw ParseError(ln, "expected 'key: value' header line (header ends with a blank line)");
        }
        header.set(ln, trim(line.substr(0, colon)), trim(line.substr(colon + 1)));
        return;
      }
      case State::data: {
        if (line.empty()) return;
        if (line.starts_with("total")) {
          const auto colon = line.find(':');
          if (colon == std::string_view::npos || trim(line.substr(0, colon)) != "total") {
            throw ParseError(ln, "malformed footer, expected 'total: <evals>'");
          }
          auto v = parse_uint(line.substr(colon + 1));
          if (!v || *v < 1) throw ParseError(ln, "footer total must be a positive integer");
          if (steps.empty()) throw ParseError(ln, "no data lines before the footer");
          if (*v < *last_raw_evals) {
            throw ParseError(ln, "footer total " + std::to_string(*v) +
                                     " is below the last recorded evaluation " +
                                     std::to_string(*last_raw_evals));
          }
          total = *v;
          state = State::done;
          return;
        }
        const auto fields = split_ws(line);
        if (fields.size() != 2) throw ParseError(ln, "expected '<evals> <indicator-value>'");
        auto evals = parse_uint(fields[0]);
        if (!evals || *evals < 1) throw ParseError(ln, "evaluation count must be a positive integer");
        auto value = parse_double(fields[1]);
        if (!value) throw ParseError(ln, "indicator value '" + std::string(fields[1]) + "' is not a number");
        if (last_raw_evals && *evals <= *last_raw_evals) {
          throw ParseError(ln, "evaluation counts must be strictly increasing");
        }
        last_raw_evals = *evals;
        if (steps.empty() || *value < steps.back().value) steps.push_back({*evals, *value});
        return;
      }
      case State::done:
        if (!line.empty()) throw ParseError(ln, "content after the footer line");
        return;
    }
  });

  if (state == State::header) {
    if (header.any()) header.finish(last_line);
    throw ParseError(last_line, "missing data block (header must be followed by a blank line)");
  }
  if (state == State::data) throw ParseError(last_line, "missing footer 'total: <evals>'");

  const LogHeader& h = *parsed_header;
  try {
    return RunTrace(h.suite, h.algorithm, ProblemTriple{h.function_id, h.dimension, h.instance_id},
                    h.reference_value, std::move(steps), *total);
  } catch (const InvalidArgument& e) {
    throw ParseError(0, e.what());
  }
}

std::string write_run_log(const RunTrace& trace, std::span<const std::string> comments) {
  check_name("suite", trace.suite());
  check_name("algorithm", trace.algorithm());
  check_name("function", trace.triple().function_id);
  if (trace.steps().empty()) throw InvalidArgument("cannot write a trial without evaluations");

  std::string out;
  for (const std::string& c : comments) {
    if (c.find_first_of("\n\r") != std::string::npos) throw InvalidArgument("comment spans lines");
    out += "# " + c + "\n";
  }
  out += "format: " + std::to_string(kRunLogFormatVersion) + "\n";
  out += "suite: " + trace.suite() + "\n";
  out += "algorithm: " + trace.algorithm() + "\n";
  out += "function: " + trace.triple().function_id + "\n";
  out += "dimension: " + std::to_string(trace.triple().dimension) + "\n";
  out += "instance: " + std::to_string(trace.triple().instance_id) + "\n";
  out += "reference: " + format_double(trace.reference_value()) + "\n";
  out += "\n";
  for (const Step& s : trace.steps()) {
    out += std::to_string(s.evals);
    out += ' ';
    out += format_double(s.value);
    out += '\n';
  }
  out += "total: " + std::to_string(trace.total_evaluations()) + "\n";
  return out;
}

std::vector<fs::path> collect_run_logs(std::span<const fs::path> paths) {
  std::vector<fs::path> files;
  for (const fs::path& p : paths) {
    std::error_code ec;
    if (fs::is_directory(p, ec)) {
      for (auto it = fs::recursive_directory_iterator(p, ec); !ec && it != fs::recursive_directory_iterator();
           it.increment(ec)) {
        if (it->is_regular_file() && it->path().extension() == kRunLogExtension) {
          files.push_back(it->path().lexically_normal());
        }
      }
      if (ec) throw DataError("cannot read directory " + p.string() + ": " + ec.message());
    } else if (fs::is_regular_file(p, ec)) {
      files.push_back(p.lexically_normal());
    } else {
      throw DataError("no such file or directory: " + p.string());
    }
  }
  std::sort(files.begin(), files.end());
  files.erase(std::unique(files.begin(), files.end()), files.end());
  return files;
}

DataSet load_dataset(std::span<const fs::path> paths, const LoadOptions& options) {
  const auto files = collect_run_logs(paths);

  std::vector<std::pair<RunTrace, std::string>> parsed;
  std::string errors;
  for (const fs::path& f : files) {
    try {
      parsed.emplace_back(parse_run_log(read_text_file(f)), f.string());
    } catch (const Error& e) {
      errors += "\n  " + f.string() + ": " + e.what();
    }
  }
  if (!errors.empty()) throw DataError("failed to load run logs:" + errors);

  DataSet dataset;
  std::vector<std::pair<RunTrace, std::string>> repeated;
  for (auto& [trace, origin] : parsed) {
    if (options.allow_repetitions && dataset.contains(key_of(trace))) {
      repeated.emplace_back(std::move(trace), std::move(origin));
      continue;
    }
    dataset.insert(std::move(trace), std::move(origin));
  }
  for (auto& [trace, origin] : repeated) {
    const auto& t = trace.triple();
    const auto next = *dataset.max_instance(trace.algorithm(), t.function_id, t.dimension) + 1;
    dataset.insert(trace.as_repetition(next), std::move(origin));
  }
  return dataset;
}

namespace {

constexpr std::string_view kTableMagic = "# runtime-table v1";
constexpr std::string_view kTableColumns = "function,dimension,precision,successes,failures";

std::string join_evals(const std::vector<Evals>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

std::vector<Evals> parse_evals(std::size_t ln, std::string_view field) {
  std::vector<Evals> out;
  for (std::string_view tok : split_ws(trim(field))) {
    auto v = parse_uint(tok);
    if (!v || *v < 1) throw ParseError(ln, "runtime '" + std::string(tok) + "' is not a positive integer");
    out.push_back(*v);
  }
  return out;
}

}  // namespace

std::string write_runtime_table(const RuntimeTable& table) {
  std::string out;
  out += kTableMagic;
  out += '\n';
  out += kTableColumns;
  out += '\n';
  for (const auto& [key, entry] : table) {
    check_name("function", key.function_id);
    out += key.function_id + ',' + std::to_string(key.dimension) + ',' + format_double(key.precision) +
           ',' + join_evals(entry.successes) + ',' + join_evals(entry.failures) + '\n';
  }
  return out;
}

RuntimeTable parse_runtime_table(std::string_view text) {
  RuntimeTable table;
  bool magic = false;
  bool columns = false;
  for_each_line(text, [&](std::size_t ln, std::string_view raw) {
    const std::string_view full = trim(raw);
    if (!magic) {
      if (full.empty()) return;
      if (full != kTableMagic) throw ParseError(ln, "expected '" + std::string(kTableMagic) + "'");
      magic = true;
      return;
    }
    const std::string_view line = strip_comment(raw);
    if (line.empty()) return;
    if (!columns) {
      if (line != kTableColumns) throw ParseError(ln, "expected column line '" + std::string(kTableColumns) + "'");
      columns = true;
      return;
    }
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      auto comma = line.find(',', start);
      fields.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 5) throw ParseError(ln, "expected 5 comma separated fields");
    auto dim = parse_uint(fields[1]);
    if (!dim || *dim < 1 || *dim > std::numeric_limits<std::uint32_t>::max()) {
      throw ParseError(ln, "dimension must be a positive integer");
    }
    auto precision = parse_double(fields[2]);
    if (!precision) throw ParseError(ln, "precision is not a number");
    RuntimeEntry entry{parse_evals(ln, fields[3]), parse_evals(ln, fields[4])};
    try {
      table.insert(RuntimeKey{std::string(trim(fields[0])), static_cast<std::uint32_t>(*dim), *precision},
                   std::move(entry));
    } catch (const DataError& e) {
      throw ParseError(ln, e.what());
    }
  });
  if (!columns) throw ParseError(0, "runtime table header missing");
  return table;
}

std::string read_text_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw DataError("cannot read " + path.string());
  return ss.str();
}

void write_text_file(const fs::path& path, std::string_view text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw DataError("cannot create " + path.parent_path().string() + ": " + ec.message());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw DataError("cannot write " + path.string());
}

}  // namespace runfall
