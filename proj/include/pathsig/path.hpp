#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pathsig/tensor.hpp"

namespace pathsig {

// Piecewise-linear sampled path: strictly increasing times inside [0,1],
// one point of R^d per time, n >= 1.
struct SampledPath {
  std::size_t d = 0;
  std::vector<double> times;
  std::vector<double> points;  // row-major, size() x d
  // Sample range before time normalisation, when read from a file.
  std::optional<std::pair<double, double>> source_range;

  std::size_t size() const { return times.size(); }
  const double* point(std::size_t i) const { return points.data() + i * d; }
  double* point(std::size_t i) { return points.data() + i * d; }
};

// Validates the SampledPath invariants; throws std::invalid_argument.
void check_path(const SampledPath& p);

// Piecewise-linear interpolant at time t within the sampled range.
std::vector<double> eval_path(const SampledPath& p, double t);
void eval_path(const SampledPath& p, double t, double* out);

// Times mapped t -> times[0] + times[last] - t in reversed order; points
// reversed.
SampledPath reverse(const SampledPath& p);

// exp of the level-1 increment dx.
TruncatedTensor segment_sig(const std::vector<double>& dx, std::size_t depth,
                            std::size_t cap = kDefaultEntryCap);

// Signature over the window [s, t] in path time: the ordered product of
// segment exponentials (partial end segments interpolated linearly),
// combined by a balanced binary tree. s == t gives the unit.
TruncatedTensor path_signature(const SampledPath& p, std::size_t depth,
                               double s, double t,
                               std::size_t cap = kDefaultEntryCap);
// Full sampled range.
TruncatedTensor path_signature(const SampledPath& p, std::size_t depth,
                               std::size_t cap = kDefaultEntryCap);

// One-parameter signature curve t -> X_{0,t} on the sample grid;
// tensors[0] = unit and every tensor has level-0 == 1.
struct SignaturePath {
  std::size_t d = 0;
  std::size_t depth = 0;
  std::vector<double> times;
  std::vector<TruncatedTensor> tensors;

  std::size_t size() const { return times.size(); }
};

// Running Chen products at every grid time.
SignaturePath signature_path(const SampledPath& p, std::size_t depth,
                             std::size_t cap = kDefaultEntryCap);

// Derived two-parameter increment inverse(tensors[i]) (x) tensors[j].
TruncatedTensor sig_between(const SignaturePath& sp, std::size_t i,
                            std::size_t j);

// Every tensor replaced by its antipode inverse (the pointwise inverse
// path); requires group-like input for the result to be meaningful.
SignaturePath inverse_signature_path(const SignaturePath& sp);

// log of the full-interval signature; a Lie element for sampled paths.
TruncatedTensor log_signature(const SampledPath& p, std::size_t depth,
                              std::size_t cap = kDefaultEntryCap);

// Independent oracle: left-point Riemann-Stieltjes recursion
// S_k(t_{j+1}) = S_k(t_j) + S_{k-1}(t_j) (x) dX_j over a uniform refinement
// of the path into mesh steps. First-order accurate in the mesh.
TruncatedTensor brute_force_sig(const SampledPath& p, std::size_t depth,
                                std::size_t mesh,
                                std::size_t cap = kDefaultEntryCap);

// Antisymmetric part of the depth-2 signature over the full interval,
// A[i][j] = (<S,ij> - <S,ji>)/2, returned row-major d x d. Requires d >= 2.
std::vector<double> levy_area(const SampledPath& p,
                              std::size_t cap = kDefaultEntryCap);

}  // namespace pathsig
