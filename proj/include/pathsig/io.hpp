#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

#include "pathsig/path.hpp"
#include "pathsig/tensor.hpp"

namespace pathsig {

// Shared command configuration.
struct RunConfig {
  std::size_t depth = 2;                             // N >= 1
  std::optional<std::pair<double, double>> interval; // within [0,1]; default full range
  std::optional<double> alpha;                       // Hoelder exponent in (0,1)
  double tol = 1e-8;
  bool strict = false;
  std::size_t cap = kDefaultEntryCap;
};

// CSV with header exactly `t,x1,...,xd` and strictly increasing t. Times
// are mapped affinely onto [0,1]; the raw range lands in source_range.
// Errors carry 1-based row (and column) positions.
SampledPath read_csv(std::istream& in);
SampledPath read_csv(const std::string& text);

// 17 significant digits (%.17g); round-trips bit-exactly.
std::string format_double(double v);

// {"d":..,"depth":..,"interval":[s,t],("time_range":[a,b],)"levels":[[..],..]}
// with levels flattened in the canonical word order.
std::string write_tensor_json(
    const TruncatedTensor& x, std::pair<double, double> interval = {0.0, 1.0},
    const std::optional<std::pair<double, double>>& time_range = {});

struct TensorDoc {
  TruncatedTensor tensor;
  std::pair<double, double> interval{0.0, 1.0};
  std::optional<std::pair<double, double>> time_range;
};

// Parses write_tensor_json output; unknown keys are ignored.
TensorDoc read_tensor_json(const std::string& text,
                           std::size_t cap = kDefaultEntryCap);

}  // namespace pathsig
