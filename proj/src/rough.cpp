#include "pathsig/rough.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pathsig/grouplike.hpp"

namespace pathsig {

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("alpha must lie in (0,1)");
}

std::vector<TruncatedTensor> all_inverses(const SignaturePath& sp) {
  std::vector<TruncatedTensor> inv;
  inv.reserve(sp.size());
  for (const TruncatedTensor& t : sp.tensors) inv.push_back(inverse(t));
  return inv;
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> holder_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (n <= 2000) {
    pairs.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t gap = 1; i + gap < n; gap *= 2)
        pairs.emplace_back(i, i + gap);
  }
  return pairs;
}

double holder_norm(const SampledPath& p, double alpha) {
  check_path(p);
  check_alpha(alpha);
  if (p.size() < 2)
    throw std::invalid_argument("Holder norm needs at least two samples");
  const auto pairs = holder_pairs(p.size());
  const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(pairs.size());
  double best = 0.0;
#pragma omp parallel for reduction(max : best) if (m >= 1024)
  for (std::ptrdiff_t q = 0; q < m; ++q) {
    const auto [i, j] = pairs[static_cast<std::size_t>(q)];
    const double* a = p.point(i);
    const double* b = p.point(j);
    double s = 0.0;
    for (std::size_t c = 0; c < p.d; ++c) s += (b[c] - a[c]) * (b[c] - a[c]);
    best = std::max(best,
                    std::sqrt(s) / std::pow(p.times[j] - p.times[i], alpha));
  }
  return best;
}

std::vector<double> graded_holder(const SignaturePath& sp, double alpha) {
  check_alpha(alpha);
  if (sp.size() < 2)
    throw std::invalid_argument("grid needs at least two samples");
  const std::size_t N = sp.depth;
  const auto pairs = holder_pairs(sp.size());
  const auto inv = all_inverses(sp);
  std::vector<double> out(N, 0.0);
  const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(pairs.size());
#pragma omp parallel if (m >= 64)
  {
    std::vector<double> loc(N, 0.0);
#pragma omp for nowait
    for (std::ptrdiff_t q = 0; q < m; ++q) {
      const auto [i, j] = pairs[static_cast<std::size_t>(q)];
      const TruncatedTensor x = mul(inv[i], sp.tensors[j]);
      const double dt = sp.times[j] - sp.times[i];
      for (std::size_t k = 1; k <= N; ++k)
        loc[k - 1] =
            std::max(loc[k - 1], hs_norm_level(x, k) /
                                     std::pow(dt, static_cast<double>(k) * alpha));
    }
#pragma omp critical
    for (std::size_t k = 0; k < N; ++k) out[k] = std::max(out[k], loc[k]);
  }
  return out;
}

double rho_holder(const SignaturePath& sp, double alpha, double tol) {
  check_alpha(alpha);
  if (sp.size() < 2)
    throw std::invalid_argument("grid needs at least two samples");
  for (const TruncatedTensor& t : sp.tensors)
    if (!is_grouplike(t, tol).pass)
      throw std::domain_error("not weakly geometric");
  const auto pairs = holder_pairs(sp.size());
  const auto inv = all_inverses(sp);
  const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(pairs.size());
  double best = 0.0;
#pragma omp parallel for reduction(max : best) if (m >= 64)
  for (std::ptrdiff_t q = 0; q < m; ++q) {
    const auto [i, j] = pairs[static_cast<std::size_t>(q)];
    const double norm = homogeneous_norm(mul(inv[i], sp.tensors[j]));
    best = std::max(best, norm / std::pow(sp.times[j] - sp.times[i], alpha));
  }
  return best;
}

std::size_t TwoParamFunctional::index(std::size_t i, std::size_t j) const {
  const std::size_t n = times.size();
  if (i > j || j >= n) throw std::out_of_range("pair index out of range");
  return i * n - i * (i - 1) / 2 + (j - i);
}

TwoParamFunctional two_parameter(const SignaturePath& sp) {
  const std::size_t n = sp.size();
  if (n == 0) throw std::invalid_argument("empty signature path");
  TwoParamFunctional f;
  f.d = sp.d;
  f.depth = sp.depth;
  f.times = sp.times;
  f.table.resize(n * (n + 1) / 2);
  const auto inv = all_inverses(sp);
#pragma omp parallel for if (n >= 16)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
    for (std::size_t j = static_cast<std::size_t>(i); j < n; ++j)
      f.at(static_cast<std::size_t>(i), j) =
          mul(inv[static_cast<std::size_t>(i)], sp.tensors[j]);
  return f;
}

ChenReport is_multiplicative(const TwoParamFunctional& f, double tol) {
  const std::size_t n = f.size();
  if (n == 0 || f.table.size() != n * (n + 1) / 2)
    throw std::invalid_argument("malformed two-parameter table");
  ChenReport rep;
  bool seeded = false;
#pragma omp parallel if (n >= 8)
  {
    ChenReport loc;
    bool locseeded = false;
#pragma omp for nowait
    for (std::ptrdiff_t si = 0; si < static_cast<std::ptrdiff_t>(n); ++si) {
      const std::size_t s = static_cast<std::size_t>(si);
      for (std::size_t u = s; u < n; ++u) {
        for (std::size_t t = u; t < n; ++t) {
          const TruncatedTensor& whole = f.at(s, t);
          const double res = hs_norm(sub(whole, mul(f.at(s, u), f.at(u, t)))) /
                             (1.0 + hs_norm(whole));
          if (!locseeded || res > loc.residual) {
            locseeded = true;
            loc.residual = res;
            loc.s = s;
            loc.u = u;
            loc.t = t;
          }
        }
      }
    }
#pragma omp critical
    if (locseeded && (!seeded || loc.residual > rep.residual)) {
      seeded = true;
      rep.residual = loc.residual;
      rep.s = loc.s;
      rep.u = loc.u;
      rep.t = loc.t;
    }
  }
  rep.ts = f.times[rep.s];
  rep.tu = f.times[rep.u];
  rep.tt = f.times[rep.t];
  rep.pass = rep.residual <= tol;
  return rep;
}

ChenReport is_multiplicative(const SignaturePath& sp, double tol) {
  const std::size_t n = sp.size();
  if (n == 0) throw std::invalid_argument("empty signature path");
  std::vector<std::size_t> idx;
  if (n <= 256) {
    idx.resize(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  } else {
    const std::size_t stride = (n - 2) / 254 + 1;
    for (std::size_t i = 0; i < n; i += stride) idx.push_back(i);
    if (idx.back() != n - 1) idx.push_back(n - 1);
  }
  SignaturePath ssp;
  ssp.d = sp.d;
  ssp.depth = sp.depth;
  for (std::size_t i : idx) {
    ssp.times.push_back(sp.times[i]);
    ssp.tensors.push_back(sp.tensors[i]);
  }
  ChenReport rep = is_multiplicative(two_parameter(ssp), tol);
  rep.s = idx[rep.s];
  rep.u = idx[rep.u];
  rep.t = idx[rep.t];
  rep.subsampled = n > 256;
  return rep;
}

std::size_t minimal_depth(double alpha) {
  check_alpha(alpha);
  // the nudge keeps exact reciprocals (0.5, 0.25, 0.2) on the right side of
  // the floor when 1/alpha lands a hair below the integer
  return static_cast<std::size_t>(std::floor((1.0 / alpha) * (1.0 + 1e-12)));
}

YoungResult young_integral(const SampledPath& Y, const SampledPath& X,
                           std::size_t refine, const YoungOptions& opts) {
  check_path(Y);
  check_path(X);
  if (refine < 1) throw std::invalid_argument("refinement must be at least 1");
  if (opts.alpha) check_alpha(*opts.alpha);
  if (opts.beta) check_alpha(*opts.beta);
  YoungResult out;
  if (opts.alpha && opts.beta)
    out.exponents_ok = *opts.alpha + *opts.beta > 1.0;
  if (opts.strict) {
    if (!out.exponents_ok.has_value())
      throw std::domain_error(
          "strict mode requires declared exponents with alpha + beta > 1");
    if (!out.exponents_ok.value())
      throw std::domain_error("not Young-integrable: alpha + beta <= 1");
  }

  const std::size_t d = X.d;
  std::size_t e = 0;  // number of output components; 0 marks the scalar case
  if (Y.d != 1) {
    if (Y.d % d != 0)
      throw std::invalid_argument(
          "dimension mismatch: integrand is neither scalar nor e x d");
    e = Y.d / d;
  }
  out.values.assign(e == 0 ? d : e, 0.0);

  const double lo = std::max(Y.times.front(), X.times.front());
  const double hi = std::min(Y.times.back(), X.times.back());
  if (lo > hi)
    throw std::invalid_argument("paths share no common time interval");
  if (lo == hi) return out;

  std::vector<double> xprev = eval_path(X, lo);
  std::vector<double> xcur(d), yleft(Y.d);
  eval_path(Y, lo, yleft.data());
  for (std::size_t step = 1; step <= refine; ++step) {
    const double u =
        (step == refine)
            ? hi
            : lo + (hi - lo) * (static_cast<double>(step) /
                                static_cast<double>(refine));
    eval_path(X, u, xcur.data());
    if (e == 0) {
      for (std::size_t j = 0; j < d; ++j)
        out.values[j] += yleft[0] * (xcur[j] - xprev[j]);
    } else {
      for (std::size_t i = 0; i < e; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < d; ++j)
          acc += yleft[i * d + j] * (xcur[j] - xprev[j]);
        out.values[i] += acc;
      }
    }
    std::swap(xprev, xcur);
    if (step < refine) eval_path(Y, u, yleft.data());
  }
  return out;
}

}  // namespace pathsig
