#include "pathsig/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pathsig {

namespace {

constexpr std::size_t kNoCap = std::numeric_limits<std::size_t>::max();
constexpr std::ptrdiff_t kParallelCutoff = 4096;

void check_same_shape(const TruncatedTensor& a, const TruncatedTensor& b) {
  if (!a.same_shape(b)) throw std::invalid_argument("tensor shape mismatch");
}

}  // namespace

std::size_t total_entries(std::size_t d, std::size_t depth, std::size_t cap) {
  if (d < 1) throw std::invalid_argument("alphabet size must be at least 1");
  if (d > 65535)
    throw std::invalid_argument("alphabet size above 65535 is unsupported");
  std::size_t total = 1, pow = 1;
  for (std::size_t k = 1; k <= depth; ++k) {
    if (pow > cap / d)
      throw std::length_error("tensor entry count exceeds the cap");
    pow *= d;
    total += pow;
    if (total > cap)
      throw std::length_error("tensor entry count exceeds the cap");
  }
  return total;
}

TruncatedTensor::TruncatedTensor(std::size_t d, std::size_t depth,
                                 std::size_t cap)
    : d_(d) {
  total_entries(d, depth, cap);
  levels_.resize(depth + 1);
  std::size_t sz = 1;
  for (std::size_t k = 0; k <= depth; ++k) {
    levels_[k].assign(sz, 0.0);
    if (k < depth) sz *= d;
  }
}

TruncatedTensor zeros_like(const TruncatedTensor& a) {
  if (a.dim() == 0) return TruncatedTensor{};
  return TruncatedTensor(a.dim(), a.depth(), kNoCap);
}

TruncatedTensor unit(std::size_t d, std::size_t depth, std::size_t cap) {
  TruncatedTensor r(d, depth, cap);
  r.scalar() = 1.0;
  return r;
}

TruncatedTensor add(const TruncatedTensor& a, const TruncatedTensor& b) {
  check_same_shape(a, b);
  TruncatedTensor r = a;
  for (std::size_t k = 0; k <= r.depth(); ++k) {
    const std::vector<double>& bk = b.level(k);
    std::vector<double>& rk = r.level(k);
    for (std::size_t i = 0; i < rk.size(); ++i) rk[i] += bk[i];
  }
  return r;
}

TruncatedTensor sub(const TruncatedTensor& a, const TruncatedTensor& b) {
  check_same_shape(a, b);
  TruncatedTensor r = a;
  for (std::size_t k = 0; k <= r.depth(); ++k) {
    const std::vector<double>& bk = b.level(k);
    std::vector<double>& rk = r.level(k);
    for (std::size_t i = 0; i < rk.size(); ++i) rk[i] -= bk[i];
  }
  return r;
}

TruncatedTensor scale(double lambda, const TruncatedTensor& a) {
  TruncatedTensor r = a;
  for (std::size_t k = 0; k <= r.depth(); ++k)
    for (double& x : r.level(k)) x *= lambda;
  return r;
}

// One pass per split: for fixed n the map (prefix, suffix) to
// prefix * d^(k-n) + suffix is a bijection onto level k, so the collapsed
// loop covers disjoint output entries and threads never race.  Splits run
// in ascending n, the same order mul_serial accumulates in, so the two
// kernels agree entry for entry, not merely within rounding; the plain nest
// below is the same arithmetic and exists because the collapsed form defeats
// vectorisation, which is all that matters on a single thread.
TruncatedTensor mul(const TruncatedTensor& a, const TruncatedTensor& b) {
  check_same_shape(a, b);
  const std::size_t N = a.depth();
  TruncatedTensor c = zeros_like(a);
#ifdef _OPENMP
  const bool team = omp_get_max_threads() > 1;
#else
  const bool team = false;
#endif
  for (std::size_t k = 0; k <= N; ++k) {
    double* ck = c.level(k).data();
    const std::ptrdiff_t sz = static_cast<std::ptrdiff_t>(c.level_size(k));
    for (std::size_t n = 0; n <= k; ++n) {
      const double* an = a.level(n).data();
      const double* bm = b.level(k - n).data();
      const std::ptrdiff_t rows = static_cast<std::ptrdiff_t>(a.level_size(n));
      const std::ptrdiff_t cols =
          static_cast<std::ptrdiff_t>(b.level_size(k - n));
      if (team && sz >= kParallelCutoff) {
#pragma omp parallel for collapse(2)
        for (std::ptrdiff_t i = 0; i < rows; ++i)
          for (std::ptrdiff_t j = 0; j < cols; ++j)
            ck[i * cols + j] += an[i] * bm[j];
      } else {
        for (std::ptrdiff_t i = 0; i < rows; ++i)
          for (std::ptrdiff_t j = 0; j < cols; ++j)
            ck[i * cols + j] += an[i] * bm[j];
      }
    }
  }
  return c;
}

TruncatedTensor mul_serial(const TruncatedTensor& a, const TruncatedTensor& b) {
  check_same_shape(a, b);
  const std::size_t N = a.depth();
  TruncatedTensor c = zeros_like(a);
  for (std::size_t k = 0; k <= N; ++k) {
    std::vector<double>& ck = c.level(k);
    // n ascends here just as in the parallel kernel's split loop, so each
    // output entry accumulates its k+1 contributions in the same order and
    // the two kernels agree entry for entry, not merely within rounding.
    for (std::size_t n = 0; n <= k; ++n) {
      const std::vector<double>& an = a.level(n);
      const std::vector<double>& bm = b.level(k - n);
      for (std::size_t i = 0; i < an.size(); ++i)
        for (std::size_t j = 0; j < bm.size(); ++j)
          ck[i * bm.size() + j] += an[i] * bm[j];
    }
  }
  return c;
}

TruncatedTensor inverse(const TruncatedTensor& a) {
  const double a0 = a.scalar();
  if (a0 == 0.0) throw std::domain_error("not invertible: π₀(a) = 0");
  TruncatedTensor b = scale(1.0 / a0, a);
  b.scalar() = 0.0;
  TruncatedTensor one = zeros_like(a);
  one.scalar() = 1.0;
  TruncatedTensor r = one;
  for (std::size_t i = 0; i < a.depth(); ++i) r = sub(one, mul(b, r));
  return scale(1.0 / a0, r);
}

TruncatedTensor exp(const TruncatedTensor& a) {
  if (a.scalar() != 0.0) throw std::domain_error("exp requires π₀(a) = 0");
  TruncatedTensor one = zeros_like(a);
  one.scalar() = 1.0;
  TruncatedTensor r = one;
  for (std::size_t n = a.depth(); n >= 1; --n)
    r = add(one, scale(1.0 / static_cast<double>(n), mul(a, r)));
  return r;
}

TruncatedTensor log(const TruncatedTensor& a) {
  if (a.scalar() != 1.0) throw std::domain_error("log requires π₀(a) = 1");
  const std::size_t N = a.depth();
  TruncatedTensor v = a;
  v.scalar() = 0.0;
  if (N == 0) return v;
  auto coeff = [](std::size_t n) {
    return ((n % 2) ? 1.0 : -1.0) / static_cast<double>(n);
  };
  TruncatedTensor r = zeros_like(a);
  r.scalar() = coeff(N);
  for (std::size_t n = N; n-- > 1;) {
    r = mul(v, r);
    r.scalar() += coeff(n);
  }
  return mul(v, r);
}

TruncatedTensor project(const TruncatedTensor& a, std::size_t n) {
  if (n > a.depth())
    throw std::invalid_argument("projection depth exceeds tensor depth");
  TruncatedTensor r(a.dim(), n, kNoCap);
  for (std::size_t k = 0; k <= n; ++k) r.level(k) = a.level(k);
  return r;
}

TruncatedTensor dilation(double lambda, const TruncatedTensor& a) {
  TruncatedTensor r = a;
  double p = 1.0;
  for (std::size_t k = 1; k <= r.depth(); ++k) {
    p *= lambda;
    for (double& x : r.level(k)) x *= p;
  }
  return r;
}

double pair(const TruncatedTensor& x, const Word& w) {
  if (w.size() > x.depth())
    throw std::invalid_argument("word length exceeds tensor depth");
  return x.level(w.size())[word_index(w, x.dim())];
}

double pair_poly(const TruncatedTensor& x, const WordPoly& p) {
  double s = 0.0;
  for (const auto& [w, c] : p) s += static_cast<double>(c) * pair(x, w);
  return s;
}

double hs_norm_level(const TruncatedTensor& a, std::size_t k) {
  if (k > a.depth()) throw std::out_of_range("level out of range");
  double s = 0.0;
  for (double x : a.level(k)) s += x * x;
  return std::sqrt(s);
}

double hs_norm(const TruncatedTensor& a) {
  double s = 0.0;
  for (std::size_t k = 0; k <= a.depth(); ++k)
    for (double x : a.level(k)) s += x * x;
  return std::sqrt(s);
}

namespace {

// max_{k=1..N} (k! ||a_k||)^(1/k)
double graded_max(const TruncatedTensor& a) {
  double best = 0.0, fact = 1.0;
  for (std::size_t k = 1; k <= a.depth(); ++k) {
    fact *= static_cast<double>(k);
    const double nk = hs_norm_level(a, k);
    if (nk > 0.0)
      best = std::max(best, std::pow(fact * nk, 1.0 / static_cast<double>(k)));
  }
  return best;
}

}  // namespace

double homogeneous_norm(const TruncatedTensor& a) {
  if (a.scalar() != 1.0)
    throw std::domain_error("homogeneous norm requires π₀(a) = 1");
  if (a.depth() < 1)
    throw std::invalid_argument("homogeneous norm requires depth >= 1");
  return graded_max(a) + graded_max(inverse(a));
}

double rho_metric(const TruncatedTensor& x, const TruncatedTensor& y) {
  check_same_shape(x, y);
  if (x.scalar() != 1.0 || y.scalar() != 1.0)
    throw std::domain_error("rho_N requires π₀ = 1 on both arguments");
  // equal arguments give exactly zero: the k-th roots in the graded norm
  // would otherwise inflate the inverse-product's rounding noise (~1e-16)
  // to around eps^(1/N)
  bool equal = true;
  for (std::size_t k = 0; equal && k <= x.depth(); ++k)
    equal = x.level(k) == y.level(k);
  if (equal) return 0.0;
  return homogeneous_norm(mul(inverse(x), y));
}

bool approx_equal(const TruncatedTensor& a, const TruncatedTensor& b,
                  double tol) {
  if (!a.same_shape(b)) return false;
  return hs_norm(sub(a, b)) <= tol * (1.0 + hs_norm(a));
}

TruncatedTensor from_level1(const std::vector<double>& v, std::size_t depth,
                            std::size_t cap) {
  if (v.empty()) throw std::invalid_argument("level-1 vector must be nonempty");
  if (depth < 1) throw std::invalid_argument("from_level1 requires depth >= 1");
  TruncatedTensor r(v.size(), depth, cap);
  r.level(1) = v;
  return r;
}

}  // namespace pathsig
