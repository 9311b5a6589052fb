#include "pathsig/grouplike.hpp"

#include <cmath>
#include <stdexcept>

namespace pathsig {

namespace {

std::size_t ipow(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= base;
  return r;
}

}  // namespace

GrouplikeReport is_grouplike(const TruncatedTensor& a, double tol) {
  if (a.dim() == 0 || a.scalar() != 1.0)
    throw std::domain_error("group-like test requires π₀(a) = 1");
  const std::size_t N = a.depth(), d = a.dim();
  GrouplikeReport rep;
  for (std::size_t lu = 1; 2 * lu <= N; ++lu) {
    for (std::size_t lv = lu; lu + lv <= N; ++lv) {
      const std::size_t nu = ipow(d, lu), nv = ipow(d, lv);
      for (std::size_t iu = 0; iu < nu; ++iu) {
        const Word u = word_at_index(iu, lu, d);
        const double cu = a.level(lu)[iu];
        for (std::size_t iv = (lu == lv) ? iu : 0; iv < nv; ++iv) {
          const Word v = word_at_index(iv, lv, d);
          const double prod = cu * a.level(lv)[iv];
          const double lhs = pair_poly(a, shuffle(u, v));
          const double res = std::abs(lhs - prod) / (1.0 + std::abs(prod));
          if (res > rep.residual) {
            rep.residual = res;
            rep.u = u;
            rep.v = v;
          }
        }
      }
    }
  }
  rep.pass = rep.residual <= tol;
  return rep;
}

TruncatedTensor grouplike_inverse(const TruncatedTensor& a) {
  if (a.dim() == 0 || a.scalar() != 1.0)
    throw std::domain_error("antipode inversion requires π₀(a) = 1");
  const std::size_t d = a.dim();
  TruncatedTensor r = zeros_like(a);
  r.scalar() = a.scalar();
  for (std::size_t k = 1; k <= a.depth(); ++k) {
    const std::vector<double>& ak = a.level(k);
    std::vector<double>& rk = r.level(k);
    const double sign = (k % 2) ? -1.0 : 1.0;
    for (std::size_t i = 0; i < rk.size(); ++i) {
      // base-d digit reversal maps a word's index to its reversal's index
      std::size_t rev = 0, rest = i;
      for (std::size_t t = 0; t < k; ++t) {
        rev = rev * d + rest % d;
        rest /= d;
      }
      rk[i] = sign * ak[rev];
    }
  }
  return r;
}

TruncatedTensor lie_bracket(const TruncatedTensor& a,
                            const TruncatedTensor& b) {
  return sub(mul(a, b), mul(b, a));
}

bool is_lie(const TruncatedTensor& x, double tol) {
  if (x.dim() == 0 || x.scalar() != 0.0)
    throw std::domain_error("Lie-element test requires π₀(x) = 0");
  return is_grouplike(exp(x), tol).pass;
}

namespace {

// Row-echelon insertion with partial pivoting; keeps rows pivot-normalised.
// Returns true when v is independent of the rows already held.
bool eliminate_insert(std::vector<std::vector<double>>& rows,
                      std::vector<std::size_t>& pivots, std::vector<double> v,
                      double rel_tol) {
  double scale0 = 0.0;
  for (double x : v) scale0 = std::max(scale0, std::abs(x));
  if (scale0 == 0.0) return false;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const double f = v[pivots[r]];
    if (f == 0.0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[r][j];
  }
  std::size_t piv = 0;
  double best = 0.0;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (std::abs(v[j]) > best) {
      best = std::abs(v[j]);
      piv = j;
    }
  }
  if (best <= rel_tol * scale0) return false;
  const double inv = 1.0 / v[piv];
  for (double& x : v) x *= inv;
  rows.push_back(std::move(v));
  pivots.push_back(piv);
  return true;
}

}  // namespace

std::vector<std::size_t> lie_project_dims(std::size_t d, std::size_t N,
                                          std::size_t cap) {
  if (d < 1 || N < 1)
    throw std::invalid_argument("lie_project_dims requires d >= 1 and N >= 1");
  total_entries(d, N, cap);
  std::vector<std::size_t> dims(N);
  dims[0] = d;
  // span of level 1: the coordinate vectors themselves
  std::vector<std::vector<double>> span;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<double> e(d, 0.0);
    e[i] = 1.0;
    span.push_back(std::move(e));
  }
  for (std::size_t k = 2; k <= N; ++k) {
    // left-normed step: candidates [e_i, h] = e_i (x) h - h (x) e_i over the
    // previous level's span, which generate the next homogeneous component
    const std::size_t prev = span[0].size(), cur = prev * d;
    std::vector<std::vector<double>> rows;
    std::vector<std::size_t> pivots;
    for (std::size_t i = 0; i < d; ++i) {
      for (const std::vector<double>& h : span) {
        std::vector<double> v(cur, 0.0);
        for (std::size_t j = 0; j < prev; ++j) {
          v[i * prev + j] += h[j];
          v[j * d + i] -= h[j];
        }
        eliminate_insert(rows, pivots, v, 1e-9);
      }
    }
    dims[k - 1] = rows.size();
    // the reduced rows span the same space as the accepted candidates
    span = std::move(rows);
    if (span.empty()) {
      // commutative corner (d = 1): all later brackets vanish too
      for (std::size_t j = k; j <= N; ++j) dims[j - 1] = 0;
      break;
    }
  }
  return dims;
}

GroupElement::GroupElement(TruncatedTensor t) : t_(std::move(t)) {
  if (t_.dim() == 0 || t_.scalar() != 1.0)
    throw std::domain_error("group element requires π₀ = 1");
}

bool GroupElement::geometric(double tol) const {
  if (!cached_ || cached_->first != tol)
    cached_ = std::make_pair(tol, is_grouplike(t_, tol).pass);
  return cached_->second;
}

}  // namespace pathsig
