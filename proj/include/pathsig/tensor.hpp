#pragma once

#include <cstddef>
#include <vector>

#include "pathsig/words.hpp"

namespace pathsig {

// Element of the truncated tensor algebra T^N(R^d): a dense coefficient
// array per level k = 0..N. Level k holds d^k entries indexed by words of
// length k in lexicographic order (word a1...ak at sum_i (a_i-1) d^(k-i)).
class TruncatedTensor {
 public:
  TruncatedTensor() = default;
  // Zero tensor of the given shape. Throws std::length_error when the
  // total coefficient count (d^(N+1)-1)/(d-1) exceeds cap.
  TruncatedTensor(std::size_t d, std::size_t depth,
                  std::size_t cap = kDefaultEntryCap);

  std::size_t dim() const { return d_; }
  std::size_t depth() const { return levels_.empty() ? 0 : levels_.size() - 1; }
  std::size_t level_size(std::size_t k) const { return levels_[k].size(); }

  std::vector<double>& level(std::size_t k) { return levels_[k]; }
  const std::vector<double>& level(std::size_t k) const { return levels_[k]; }

  double scalar() const { return levels_[0][0]; }
  double& scalar() { return levels_[0][0]; }

  bool same_shape(const TruncatedTensor& o) const {
    return d_ == o.d_ && levels_.size() == o.levels_.size();
  }

 private:
  std::size_t d_ = 0;
  std::vector<std::vector<double>> levels_;
};

// Coefficient count of a (d, depth) tensor; throws std::length_error past cap.
std::size_t total_entries(std::size_t d, std::size_t depth,
                          std::size_t cap = kDefaultEntryCap);

// Zero tensor with the shape of a, skipping the cap re-check.
TruncatedTensor zeros_like(const TruncatedTensor& a);

TruncatedTensor unit(std::size_t d, std::size_t depth,
                     std::size_t cap = kDefaultEntryCap);
TruncatedTensor add(const TruncatedTensor& a, const TruncatedTensor& b);
TruncatedTensor sub(const TruncatedTensor& a, const TruncatedTensor& b);
TruncatedTensor scale(double lambda, const TruncatedTensor& a);

// Algebra product: level k of the result is sum_{n+m=k} a_n (x) b_m, the
// block at word uv being a_n[u] b_m[v]. Gather kernel, parallelised over
// the entries of each output level.
TruncatedTensor mul(const TruncatedTensor& a, const TruncatedTensor& b);
// Reference kernel: the same sums accumulated by the plain scatter triple
// loop, serial. Kept as the oracle for mul and for the kernel benchmark;
// both kernels add contributions in the same order, so results match
// entry for entry.
TruncatedTensor mul_serial(const TruncatedTensor& a, const TruncatedTensor& b);

// Neumann inversion a0^{-1} sum_{k<=N} (-b)^k with b = a/a0 - 1; b is
// nilpotent, so the series is a polynomial. Requires level-0 != 0.
TruncatedTensor inverse(const TruncatedTensor& a);

// exp(a) = sum_{n<=N} a^n/n! for level-0 zero a, Horner-style (N products).
TruncatedTensor exp(const TruncatedTensor& a);
// log(a) = sum_{1<=n<=N} (-1)^(n+1) (a-1)^n/n for level-0 one a.
TruncatedTensor log(const TruncatedTensor& a);

// Levels 0..n copied; an algebra morphism. Requires n <= depth(a).
TruncatedTensor project(const TruncatedTensor& a, std::size_t n);
// Level k scaled by lambda^k, level 0 unchanged.
TruncatedTensor dilation(double lambda, const TruncatedTensor& a);

// Coefficient of x at word w (level |w|). Requires |w| <= depth, letters
// within the alphabet.
double pair(const TruncatedTensor& x, const Word& w);
// Linear extension sum coeff(w) pair(x, w).
double pair_poly(const TruncatedTensor& x, const WordPoly& p);

// Euclidean norms under the orthonormal word basis.
double hs_norm_level(const TruncatedTensor& a, std::size_t k);
double hs_norm(const TruncatedTensor& a);

// max_{k=1..N} (k! ||a_k||)^(1/k) plus the same maximum for inverse(a).
// Requires level-0 == 1 and N >= 1. Left invariant, symmetric, subadditive.
double homogeneous_norm(const TruncatedTensor& a);
// homogeneous_norm(inverse(x) (x) y); a left-invariant distance.
double rho_metric(const TruncatedTensor& x, const TruncatedTensor& y);

// ||a - b|| <= tol (1 + ||a||) in the Hilbert-Schmidt norm.
bool approx_equal(const TruncatedTensor& a, const TruncatedTensor& b,
                  double tol = 1e-9);

// Vector v placed at level 1, all other levels zero.
TruncatedTensor from_level1(const std::vector<double>& v, std::size_t depth,
                            std::size_t cap = kDefaultEntryCap);

}  // namespace pathsig
