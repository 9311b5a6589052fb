#include "pathsig/path.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pathsig/grouplike.hpp"

namespace pathsig {

void check_path(const SampledPath& p) {
  if (p.d < 1) throw std::invalid_argument("path dimension must be at least 1");
  const std::size_t n = p.times.size();
  if (n < 1) throw std::invalid_argument("path needs at least one sample");
  if (p.points.size() != n * p.d)
    throw std::invalid_argument("point array does not match times x d");
  if (p.times.front() < 0.0 || p.times.back() > 1.0)
    throw std::invalid_argument("sample times must lie inside [0,1]");
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!(p.times[i] < p.times[i + 1]))
      throw std::invalid_argument("sample times must be strictly increasing");
  for (double t : p.times)
    if (!std::isfinite(t)) throw std::invalid_argument("non-finite sample time");
  for (double x : p.points)
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite coordinate");
}

void eval_path(const SampledPath& p, double t, double* out) {
  const std::vector<double>& ts = p.times;
  if (t < ts.front() || t > ts.back())
    throw std::invalid_argument("time outside the sampled range");
  const std::size_t hi =
      static_cast<std::size_t>(std::upper_bound(ts.begin(), ts.end(), t) -
                               ts.begin());
  if (hi == ts.size()) {
    const double* last = p.point(ts.size() - 1);
    std::copy(last, last + p.d, out);
    return;
  }
  const std::size_t lo = hi - 1;  // hi >= 1: t >= ts.front() and ts[hi] > t
  const double w = (t - ts[lo]) / (ts[hi] - ts[lo]);
  const double* a = p.point(lo);
  const double* b = p.point(hi);
  for (std::size_t j = 0; j < p.d; ++j) out[j] = a[j] + w * (b[j] - a[j]);
}

std::vector<double> eval_path(const SampledPath& p, double t) {
  std::vector<double> out(p.d);
  eval_path(p, t, out.data());
  return out;
}

SampledPath reverse(const SampledPath& p) {
  check_path(p);
  const std::size_t n = p.size();
  SampledPath r;
  r.d = p.d;
  r.times.resize(n);
  r.points.resize(n * p.d);
  const double span = p.times.front() + p.times.back();
  for (std::size_t i = 0; i < n; ++i) {
    r.times[i] = span - p.times[n - 1 - i];
    const double* src = p.point(n - 1 - i);
    std::copy(src, src + p.d, r.point(i));
  }
  return r;
}

TruncatedTensor segment_sig(const std::vector<double>& dx, std::size_t depth,
                            std::size_t cap) {
  const std::size_t d = dx.size();
  if (d < 1) throw std::invalid_argument("increment must be nonempty");
  TruncatedTensor r(d, depth, cap);
  r.scalar() = 1.0;
  if (depth >= 1) r.level(1) = dx;
  // level k = dx^(x)k / k!, built as (level k-1 (x) dx) / k
  for (std::size_t k = 2; k <= depth; ++k) {
    const std::vector<double>& prev = r.level(k - 1);
    std::vector<double>& cur = r.level(k);
    const double invk = 1.0 / static_cast<double>(k);
    for (std::size_t i = 0; i < prev.size(); ++i) {
      const double base = prev[i] * invk;
      for (std::size_t j = 0; j < d; ++j) cur[i * d + j] = base * dx[j];
    }
  }
  return r;
}

namespace {

// Ordered product of the window's segment exponentials. Collects the
// nonzero increments (grid points strictly inside, interpolated endpoints),
// exponentiates, and reduces by a balanced binary tree; pairing neighbours
// keeps the left-to-right order of the noncommutative product.
TruncatedTensor chen_product(const SampledPath& p, std::size_t depth, double s,
                             double t, std::size_t cap) {
  total_entries(p.d, depth, cap);
  std::vector<double> brk;
  brk.push_back(s);
  for (double u : p.times)
    if (u > s && u < t) brk.push_back(u);
  brk.push_back(t);

  std::vector<std::vector<double>> dxs;
  std::vector<double> prev = eval_path(p, brk.front());
  std::vector<double> cur(p.d);
  for (std::size_t i = 1; i < brk.size(); ++i) {
    eval_path(p, brk[i], cur.data());
    std::vector<double> dx(p.d);
    bool nonzero = false;
    for (std::size_t j = 0; j < p.d; ++j) {
      dx[j] = cur[j] - prev[j];
      nonzero = nonzero || dx[j] != 0.0;
    }
    if (nonzero) dxs.push_back(std::move(dx));
    std::swap(prev, cur);
  }
  if (dxs.empty()) return unit(p.d, depth, cap);

  std::vector<TruncatedTensor> segs(dxs.size());
  const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(dxs.size());
#pragma omp parallel for if (m >= 8)
  for (std::ptrdiff_t i = 0; i < m; ++i)
    segs[static_cast<std::size_t>(i)] =
        segment_sig(dxs[static_cast<std::size_t>(i)], depth, cap);

  while (segs.size() > 1) {
    std::vector<TruncatedTensor> nxt;
    nxt.reserve((segs.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < segs.size(); i += 2)
      nxt.push_back(mul(segs[i], segs[i + 1]));
    if (segs.size() % 2) nxt.push_back(std::move(segs.back()));
    segs = std::move(nxt);
  }
  return std::move(segs.front());
}

}  // namespace

TruncatedTensor path_signature(const SampledPath& p, std::size_t depth,
                               double s, double t, std::size_t cap) {
  check_path(p);
  if (s > t) throw std::invalid_argument("window start exceeds window end");
  if (s < p.times.front() || t > p.times.back())
    throw std::invalid_argument("window outside the sampled range");
  return chen_product(p, depth, s, t, cap);
}

TruncatedTensor path_signature(const SampledPath& p, std::size_t depth,
                               std::size_t cap) {
  check_path(p);
  return chen_product(p, depth, p.times.front(), p.times.back(), cap);
}

SignaturePath signature_path(const SampledPath& p, std::size_t depth,
                             std::size_t cap) {
  check_path(p);
  const std::size_t n = p.size();
  SignaturePath sp;
  sp.d = p.d;
  sp.depth = depth;
  sp.times = p.times;
  sp.tensors.reserve(n);
  sp.tensors.push_back(unit(p.d, depth, cap));
  std::vector<double> dx(p.d);
  for (std::size_t i = 1; i < n; ++i) {
    bool nonzero = false;
    for (std::size_t j = 0; j < p.d; ++j) {
      dx[j] = p.point(i)[j] - p.point(i - 1)[j];
      nonzero = nonzero || dx[j] != 0.0;
    }
    if (nonzero)
      sp.tensors.push_back(mul(sp.tensors.back(), segment_sig(dx, depth, cap)));
    else
      sp.tensors.push_back(sp.tensors.back());
  }
  return sp;
}

TruncatedTensor sig_between(const SignaturePath& sp, std::size_t i,
                            std::size_t j) {
  if (i >= sp.size() || j >= sp.size())
    throw std::out_of_range("grid index out of range");
  return mul(inverse(sp.tensors[i]), sp.tensors[j]);
}

SignaturePath inverse_signature_path(const SignaturePath& sp) {
  SignaturePath r;
  r.d = sp.d;
  r.depth = sp.depth;
  r.times = sp.times;
  r.tensors.reserve(sp.tensors.size());
  for (const TruncatedTensor& x : sp.tensors)
    r.tensors.push_back(grouplike_inverse(x));
  return r;
}

TruncatedTensor log_signature(const SampledPath& p, std::size_t depth,
                              std::size_t cap) {
  return log(path_signature(p, depth, cap));
}

TruncatedTensor brute_force_sig(const SampledPath& p, std::size_t depth,
                                std::size_t mesh, std::size_t cap) {
  check_path(p);
  if (mesh < 1) throw std::invalid_argument("mesh must be at least 1");
  const std::size_t d = p.d;
  TruncatedTensor S = unit(d, depth, cap);
  const double t0 = p.times.front(), t1 = p.times.back();
  std::vector<double> xprev = eval_path(p, t0);
  std::vector<double> xcur(d), dX(d);
  for (std::size_t step = 1; step <= mesh; ++step) {
    // the last node is pinned to t1 so rounding never leaves the range
    const double u =
        (step == mesh)
            ? t1
            : t0 + (t1 - t0) * (static_cast<double>(step) /
                                static_cast<double>(mesh));
    eval_path(p, u, xcur.data());
    for (std::size_t j = 0; j < d; ++j) dX[j] = xcur[j] - xprev[j];
    // S_k += S_{k-1} (x) dX, k descending so the right side predates the step
    for (std::size_t k = depth; k >= 1; --k) {
      const std::vector<double>& lower = S.level(k - 1);
      std::vector<double>& upper = S.level(k);
      for (std::size_t i = 0; i < lower.size(); ++i) {
        const double base = lower[i];
        if (base == 0.0) continue;
        for (std::size_t j = 0; j < d; ++j) upper[i * d + j] += base * dX[j];
      }
    }
    std::swap(xprev, xcur);
  }
  return S;
}

std::vector<double> levy_area(const SampledPath& p, std::size_t cap) {
  check_path(p);
  if (p.d < 2) throw std::invalid_argument("Levy area requires d >= 2");
  const TruncatedTensor S = path_signature(p, 2, cap);
  const std::size_t d = p.d;
  const std::vector<double>& L2 = S.level(2);
  std::vector<double> A(d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      A[i * d + j] = 0.5 * (L2[i * d + j] - L2[j * d + i]);
  return A;
}

}  // namespace pathsig
