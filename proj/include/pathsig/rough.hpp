#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pathsig/path.hpp"
#include "pathsig/tensor.hpp"

namespace pathsig {

// Index pairs (i, j), i < j, over which Hoelder suprema are taken: every
// pair when n <= 2000, dyadic gaps i -> i + 2^k beyond that.
std::vector<std::pair<std::size_t, std::size_t>> holder_pairs(std::size_t n);

// max over sample pairs of ||X_t - X_s|| / |t-s|^alpha; a lower bound for
// the sup over the continuous interpolant, exact for the sampled restriction.
// Requires alpha in (0,1) and n >= 2.
double holder_norm(const SampledPath& p, double alpha);

// Level-k Hoelder constants max ||X_{s,t}||_k / |t-s|^(k alpha) of the
// derived two-parameter map, k = 1..N.
std::vector<double> graded_holder(const SignaturePath& sp, double alpha);

// max over pairs of rho_N(unit, X_{s,t}) / |t-s|^alpha. Every grid tensor
// must pass the group-like test at tol; otherwise the input does not sit in
// the group and the call fails.
double rho_holder(const SignaturePath& sp, double alpha, double tol = 1e-8);

// Two-parameter tensor family X_{i,j}, 0 <= i <= j < n, over a time grid.
// Hand-built or loaded families can be checked against Chen's relation
// directly; signature_path output is one of these via two_parameter().
struct TwoParamFunctional {
  std::size_t d = 0;
  std::size_t depth = 0;
  std::vector<double> times;
  std::vector<TruncatedTensor> table;  // upper triangle, row-major

  std::size_t size() const { return times.size(); }
  std::size_t index(std::size_t i, std::size_t j) const;
  const TruncatedTensor& at(std::size_t i, std::size_t j) const {
    return table[index(i, j)];
  }
  TruncatedTensor& at(std::size_t i, std::size_t j) {
    return table[index(i, j)];
  }
};

// The derived map X_{i,j} = inverse(tensors[i]) (x) tensors[j].
TwoParamFunctional two_parameter(const SignaturePath& sp);

struct ChenReport {
  bool pass = true;
  // worst ||X_{s,t} - X_{s,u} (x) X_{u,t}|| / (1 + ||X_{s,t}||)
  double residual = 0.0;
  std::size_t s = 0, u = 0, t = 0;  // grid indices of the worst triple
  double ts = 0.0, tu = 0.0, tt = 0.0;  // their grid times
  bool subsampled = false;  // grid was strided down to bound the triple count
};

// Chen's relation over all grid triples s <= u <= t of the family.
ChenReport is_multiplicative(const TwoParamFunctional& f, double tol = 1e-8);
// The same check on the derived map of a SignaturePath. True by
// construction for signature_path output; grids longer than 256 points are
// strided down (endpoints kept) to bound the triple count.
ChenReport is_multiplicative(const SignaturePath& sp, double tol = 1e-8);

// floor(1/alpha), the smallest admissible truncation depth for exponent
// alpha. Requires alpha in (0,1).
std::size_t minimal_depth(double alpha);

struct YoungOptions {
  std::optional<double> alpha;  // declared exponent of the integrator X
  std::optional<double> beta;   // declared exponent of the integrand Y
  bool strict = false;          // require declared exponents with sum > 1
};

struct YoungResult {
  std::vector<double> values;
  // alpha + beta > 1 when both exponents are declared; empty otherwise.
  std::optional<bool> exponents_ok;
};

// Left-point Riemann-Stieltjes sum of Y against X over the common time
// interval, refined to `refine` uniform steps of the linear interpolants.
// Scalar Y (d == 1) integrates against every coordinate of X (d values);
// otherwise Y is read as an e x d matrix path, row-major columns, and the
// result has e entries sum_j int Y_ij dX^j.
YoungResult young_integral(const SampledPath& Y, const SampledPath& X,
                           std::size_t refine, const YoungOptions& opts = {});

}  // namespace pathsig
