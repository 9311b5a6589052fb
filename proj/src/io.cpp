#include "pathsig/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace pathsig {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

double parse_cell(const std::string& cell, std::size_t row, std::size_t col) {
  std::size_t b = cell.find_first_not_of(" \t");
  const std::size_t e = cell.find_last_not_of(" \t");
  const auto fail = [&] {
    throw std::runtime_error("csv: row " + std::to_string(row) + ", column " +
                             std::to_string(col) + ": not a number");
  };
  if (b == std::string::npos) fail();
  double v = 0.0;
  const char* first = cell.data() + b;
  const char* last = cell.data() + e + 1;
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last || !std::isfinite(v)) fail();
  return v;
}

}  // namespace

SampledPath read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("csv: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const std::vector<std::string> head = split(line, ',');
  const auto bad_header = [] {
    throw std::runtime_error("csv: malformed header: expected t,x1,...,xd");
  };
  if (head.size() < 2 || head[0] != "t") bad_header();
  for (std::size_t i = 1; i < head.size(); ++i)
    if (head[i] != "x" + std::to_string(i)) bad_header();

  SampledPath p;
  p.d = head.size() - 1;
  std::size_t row = 1;  // header is row 1
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> cells = split(line, ',');
    if (cells.size() != p.d + 1)
      throw std::runtime_error("csv: row " + std::to_string(row) +
                               ": expected " + std::to_string(p.d + 1) +
                               " values, got " + std::to_string(cells.size()));
    const double t = parse_cell(cells[0], row, 1);
    if (!p.times.empty()) {
      if (t == p.times.back())
        throw std::runtime_error("csv: row " + std::to_string(row) +
                                 ": duplicate timestamp");
      if (t < p.times.back())
        throw std::runtime_error("csv: row " + std::to_string(row) +
                                 ": time does not increase");
    }
    p.times.push_back(t);
    for (std::size_t c = 1; c <= p.d; ++c)
      p.points.push_back(parse_cell(cells[c], row, c + 1));
  }
  if (p.times.empty()) throw std::runtime_error("csv: no data rows");

  const double first = p.times.front(), last = p.times.back();
  p.source_range = std::make_pair(first, last);
  if (p.times.size() == 1) {
    p.times[0] = 0.0;
  } else {
    const double span = last - first;
    for (double& t : p.times) t = (t - first) / span;
    p.times.front() = 0.0;
    p.times.back() = 1.0;
    for (std::size_t i = 0; i + 1 < p.times.size(); ++i)
      if (!(p.times[i] < p.times[i + 1]))
        throw std::runtime_error(
            "csv: time normalisation collapsed adjacent samples");
  }
  check_path(p);
  return p;
}

SampledPath read_csv(const std::string& text) {
  std::istringstream in(text);
  return read_csv(in);
}

std::string format_double(double v) {
  // "-0" would be read back as the integer 0, dropping the sign bit
  if (v == 0.0) return std::signbit(v) ? "-0.0" : "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string write_tensor_json(
    const TruncatedTensor& x, std::pair<double, double> interval,
    const std::optional<std::pair<double, double>>& time_range) {
  std::string s = "{\"d\":" + std::to_string(x.dim()) +
                  ",\"depth\":" + std::to_string(x.depth());
  s += ",\"interval\":[" + format_double(interval.first) + "," +
       format_double(interval.second) + "]";
  if (time_range)
    s += ",\"time_range\":[" + format_double(time_range->first) + "," +
         format_double(time_range->second) + "]";
  s += ",\"levels\":[";
  for (std::size_t k = 0; k <= x.depth(); ++k) {
    if (k) s += ',';
    s += '[';
    const std::vector<double>& lv = x.level(k);
    for (std::size_t i = 0; i < lv.size(); ++i) {
      if (i) s += ',';
      s += format_double(lv[i]);
    }
    s += ']';
  }
  s += "]}";
  return s;
}

namespace {

std::pair<double, double> read_range(const nlohmann::json& v,
                                     const char* key) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    throw std::runtime_error(std::string("json: ") + key +
                             " must be a pair of numbers");
  return {v[0].get<double>(), v[1].get<double>()};
}

}  // namespace

TensorDoc read_tensor_json(const std::string& text, std::size_t cap) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("d") || !j.contains("depth") ||
      !j.contains("levels"))
    throw std::runtime_error("json: expected an object with d, depth, levels");
  if (!j["d"].is_number_unsigned() || !j["depth"].is_number_unsigned())
    throw std::runtime_error("json: d and depth must be nonnegative integers");
  const std::size_t d = j["d"].get<std::size_t>();
  const std::size_t depth = j["depth"].get<std::size_t>();
  TensorDoc doc;
  doc.tensor = TruncatedTensor(d, depth, cap);
  const nlohmann::json& levels = j["levels"];
  if (!levels.is_array() || levels.size() != depth + 1)
    throw std::runtime_error("json: levels must hold depth+1 arrays");
  for (std::size_t k = 0; k <= depth; ++k) {
    const nlohmann::json& lv = levels[k];
    if (!lv.is_array() || lv.size() != doc.tensor.level_size(k))
      throw std::runtime_error("json: level " + std::to_string(k) +
                               " must hold d^k entries");
    std::vector<double>& dst = doc.tensor.level(k);
    for (std::size_t i = 0; i < dst.size(); ++i) {
      if (!lv[i].is_number())
        throw std::runtime_error("json: non-numeric coefficient at level " +
                                 std::to_string(k));
      dst[i] = lv[i].get<double>();
      if (!std::isfinite(dst[i]))
        throw std::runtime_error("json: non-finite coefficient at level " +
                                 std::to_string(k));
    }
  }
  if (j.contains("interval")) doc.interval = read_range(j["interval"], "interval");
  if (j.contains("time_range"))
    doc.time_range = read_range(j["time_range"], "time_range");
  return doc;
}

}  // namespace pathsig
