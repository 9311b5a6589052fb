#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pathsig/tensor.hpp"
#include "pathsig/words.hpp"

namespace pathsig {

// Outcome of the shuffle-character test. residual is the largest scaled
// violation |<x, u shuffle v> - <x,u><x,v>| / (1 + |<x,u><x,v>|) over word
// pairs with 1 <= |u|, |v| and |u|+|v| <= depth, pruned to u <= v.
struct GrouplikeReport {
  bool pass = true;
  double residual = 0.0;
  Word u, v;  // maximising pair (empty when depth < 2)
};

// Shuffle-character test for membership in G^N. Requires level-0 == 1.
GrouplikeReport is_grouplike(const TruncatedTensor& a, double tol = 1e-8);

// Inverse through the antipode: the entry at word w is (-1)^|w| times the
// entry of a at the reversed word. Agrees with inverse() on group-like
// input; on non-group-like input the two generally differ.
TruncatedTensor grouplike_inverse(const TruncatedTensor& a);

// mul(a, b) - mul(b, a).
TruncatedTensor lie_bracket(const TruncatedTensor& a, const TruncatedTensor& b);

// True when exp(x) passes the shuffle-character test at tol.
// Requires level-0 == 0.
bool is_lie(const TruncatedTensor& x, double tol = 1e-8);

// Dimensions of the homogeneous components (levels 1..N) of the Lie algebra
// generated by the coordinate vectors under bracketing; rank of the span of
// left-iterated brackets, by Gaussian elimination at relative tolerance 1e-9.
std::vector<std::size_t> lie_project_dims(std::size_t d, std::size_t N,
                                          std::size_t cap = kDefaultEntryCap);

// Tensor with level-0 == 1 carrying a cached group-like verdict.
class GroupElement {
 public:
  explicit GroupElement(TruncatedTensor t);
  const TruncatedTensor& tensor() const { return t_; }
  // Shuffle-character verdict, cached per tolerance.
  bool geometric(double tol = 1e-8) const;

 private:
  TruncatedTensor t_;
  mutable std::optional<std::pair<double, bool>> cached_;
};

}  // namespace pathsig
