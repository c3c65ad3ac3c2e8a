#include "runfall/cli/curve_csv.hpp"

#include <cmath>

#include "runfall/error.hpp"
#include "runfall/numfmt.hpp"

namespace runfall::cli {

namespace {

// Keys describing the curve itself; written from the curve, never from metadata.
bool is_curve_key(std::string_view key) {
  return key == "total_count" || key == "cross_x" || key == "solved_fraction";
}

}  // namespace

std::string write_ecdf_csv(const EcdfCurve& curve, const Metadata& metadata) {
  std::string out = "# runfall ecdf\n";
  for (const auto& [key, value] : metadata) {
    if (!is_curve_key(key)) out += "# " + key + "=" + value + "\n";
  }
  out += "# total_count=" + std::to_string(curve.total_count()) + "\n";
  out += "# cross_x=" + (curve.cross_x() ? format_double(*curve.cross_x()) : std::string("none")) + "\n";
  out += "# solved_fraction=" + format_double(curve.solved_fraction()) + "\n";
  out += "x,fraction\n";
  for (const EcdfPoint& p : curve.steps()) {
    out += format_double(p.x) + "," + format_double(p.fraction) + "\n";
  }
  return out;
}

std::optional<std::string> EcdfCsv::get(std::string_view key) const {
  for (const auto& [k, v] : metadata) {
    if (k == key) return v;
  }
  return std::nullopt;
}

EcdfCsv read_ecdf_csv(std::string_view text) {
  Metadata meta;
  std::vector<EcdfPoint> points;
  bool header = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty()) continue;
    if (line.front() == '#') {
      const std::string_view body = trim(line.substr(1));
      if (auto eq = body.find('='); eq != std::string_view::npos) {
        meta.emplace_back(std::string(trim(body.substr(0, eq))), std::string(trim(body.substr(eq + 1))));
      }
      continue;
    }
    if (!header) {
      if (line != "x,fraction") throw ParseError(line_no, "expected 'x,fraction' header");
      header = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string_view::npos) throw ParseError(line_no, "expected 'x,fraction'");
    auto x = parse_double(line.substr(0, comma));
    auto f = parse_double(line.substr(comma + 1));
    if (!x || !f || !std::isfinite(*x) || !(*f >= 0.0 && *f <= 1.0)) {
      throw ParseError(line_no, "malformed step point");
    }
    if (!points.empty() && !(*x > points.back().x && *f > points.back().fraction)) {
      throw ParseError(line_no, "step points must increase in x and fraction");
    }
    points.push_back({*x, *f});
  }
  if (!header) throw ParseError(0, "missing 'x,fraction' header");

  EcdfCsv result{EcdfCurve({}, 1, std::nullopt, 0.0), std::move(meta)};
  const auto total_text = result.get("total_count");
  const auto total = total_text ? parse_uint(*total_text) : std::nullopt;
  if (!total || *total == 0) throw ParseError(0, "missing or invalid total_count metadata");

  std::vector<double> runtimes;
  std::uint64_t previous = 0;
  for (const EcdfPoint& p : points) {
    const auto count = static_cast<std::uint64_t>(std::llround(p.fraction * static_cast<double>(*total)));
    if (count <= previous || count > *total) throw ParseError(0, "step fractions inconsistent with total_count");
    runtimes.insert(runtimes.end(), count - previous, p.x);
    previous = count;
  }

  std::optional<double> cross;
  if (auto c = result.get("cross_x"); c && *c != "none") {
    cross = parse_double(*c);
    if (!cross) throw ParseError(0, "invalid cross_x metadata");
  }
  double solved = static_cast<double>(previous) / static_cast<double>(*total);
  if (auto s = result.get("solved_fraction")) {
    auto v = parse_double(*s);
    if (!v) throw ParseError(0, "invalid solved_fraction metadata");
    solved = *v;
  }
  std::erase_if(result.metadata, [](const auto& kv) { return is_curve_key(kv.first); });
  try {
    result.curve = EcdfCurve(std::move(runtimes), *total, cross, solved);
  } catch (const InvalidArgument& e) {
    throw ParseError(0, e.what());
  }
  return result;
}

}  // namespace runfall::cli
