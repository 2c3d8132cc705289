#include "vallab/pslq.hpp"

#include <cmath>
#include <cstdlib>

namespace vallab {

namespace {

constexpr double kGamma = 1.1647;  // needs gamma > 2/sqrt(3) ~ 1.1547
constexpr long long kEntryLimit = 1LL << 53;

bool verify_relation(const std::vector<BigFixed>& x,
                     const std::vector<long long>& c, const BigFixed& eps) {
  BigFixed acc = BigFixed::zero(x[0].frac());
  long long height = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    acc = acc + x[i].mul_int(c[i]);
    height = std::max(height, std::llabs(c[i]));
  }
  BigFixed budget = eps.mul_int(std::max(1LL, height));
  return BigFixed::compare(acc.abs(), budget) <= 0;
}

}  // namespace

RelationSearch pslq_search(const std::vector<BigFixed>& x, double height_bound,
                           const BigFixed& eps, int max_iter) {
  RelationSearch out;
  size_t n = x.size();
  if (n < 2) fail(ErrorCode::ValidationError, "pslq needs at least two values");
  int frac = x[0].frac();
  for (const BigFixed& v : x)
    if (v.is_zero())
      fail(ErrorCode::ValidationError, "pslq input contains a zero value");

  // Normalize the input; the residual tolerance scales along.
  BigFixed norm2 = BigFixed::zero(frac);
  for (const BigFixed& v : x) norm2 = norm2 + v * v;
  BigFixed invnorm = BigFixed::from_int64(1, frac) / BigFixed::sqrt(norm2);
  std::vector<BigFixed> y(n);
  for (size_t i = 0; i < n; ++i) y[i] = x[i] * invnorm;
  BigFixed eps_y = eps * invnorm;

  // Partial norms s_k and the initial lower-trapezoidal H.
  std::vector<BigFixed> s(n);
  {
    BigFixed acc = BigFixed::zero(frac);
    for (size_t k = n; k-- > 0;) {
      acc = acc + y[k] * y[k];
      s[k] = BigFixed::sqrt(acc);
    }
  }
  std::vector<std::vector<BigFixed>> h(n, std::vector<BigFixed>(n - 1));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j + 1 < n; ++j) h[i][j] = BigFixed::zero(frac);
  for (size_t j = 0; j + 1 < n; ++j) {
    h[j][j] = s[j + 1] / s[j];
    for (size_t i = j + 1; i < n; ++i)
      h[i][j] = -(y[i] * y[j]) / (s[j] * s[j + 1]);
  }
  std::vector<std::vector<long long>> b(n, std::vector<long long>(n, 0));
  for (size_t i = 0; i < n; ++i) b[i][i] = 1;

  bool overflow = false;
  auto apply_reduction = [&](size_t i, size_t j) {
    // t = nint(H[i][j] / H[j][j]); y_j += t y_i; row_i(H) -= t row_j;
    // col_j(B) += t col_i.
    if (h[j][j].is_zero()) return;
    bool ok = true;
    long long t = (h[i][j] / h[j][j]).nint64(&ok);
    if (!ok) { overflow = true; return; }
    if (t == 0) return;
    y[j] = y[j] + y[i].mul_int(t);
    for (size_t k = 0; k <= j; ++k) h[i][k] = h[i][k] - h[j][k].mul_int(t);
    for (size_t k = 0; k < n; ++k) {
      b[k][j] += t * b[k][i];
      if (std::llabs(b[k][j]) > kEntryLimit) overflow = true;
    }
  };

  // Full initial size reduction.
  for (size_t i = 1; i < n; ++i)
    for (size_t j = i; j-- > 0;) apply_reduction(i, j);

  auto check_state = [&]() -> bool {
    // Relation test: smallest |y_j|.
    size_t jm = 0;
    for (size_t j = 1; j < n; ++j)
      if (BigFixed::compare(y[j].abs(), y[jm].abs()) < 0) jm = j;
    if (BigFixed::compare(y[jm].abs(), eps_y) <= 0) {
      std::vector<long long> rel(n);
      long long height = 0;
      for (size_t i = 0; i < n; ++i) {
        rel[i] = b[i][jm];
        height = std::max(height, std::llabs(rel[i]));
      }
      if (height <= static_cast<long long>(height_bound) &&
          verify_relation(x, rel, eps)) {
        out.status = RelationSearch::Status::RelationFound;
        out.relation = rel;
        return true;
      }
    }
    // Norm bound: any relation has 2-norm >= 1 / max_j |H_jj|.
    double maxdiag = 0.0;
    for (size_t j = 0; j + 1 < n; ++j)
      maxdiag = std::max(maxdiag, std::fabs(h[j][j].to_double()));
    if (maxdiag > 0.0) {
      out.certified_norm_bound = 1.0 / maxdiag;
      if (out.certified_norm_bound >
          height_bound * std::sqrt(static_cast<double>(n))) {
        out.status = RelationSearch::Status::NoRelationUnderBound;
        return true;
      }
    }
    return false;
  };

  if (check_state()) return out;

  for (int iter = 0; iter < max_iter; ++iter) {
    out.iterations = iter + 1;
    // Pivot row: maximize gamma^i |H_ii|.
    size_t m = 0;
    double best = -1.0;
    double g = 1.0;
    for (size_t i = 0; i + 1 < n; ++i) {
      g *= kGamma;
      double v = g * std::fabs(h[i][i].to_double());
      if (v > best) { best = v; m = i; }
    }
    std::swap(y[m], y[m + 1]);
    std::swap(h[m], h[m + 1]);
    for (size_t k = 0; k < n; ++k) std::swap(b[k][m], b[k][m + 1]);

    if (m + 2 < n) {
      BigFixed t0 = BigFixed::sqrt(h[m][m] * h[m][m] + h[m][m + 1] * h[m][m + 1]);
      if (!t0.is_zero()) {
        BigFixed t1 = h[m][m] / t0;
        BigFixed t2 = h[m][m + 1] / t0;
        for (size_t i = m; i < n; ++i) {
          BigFixed a = h[i][m], c = h[i][m + 1];
          h[i][m] = t1 * a + t2 * c;
          h[i][m + 1] = t1 * c - t2 * a;
        }
      }
    }
    for (size_t i = m + 1; i < n; ++i) {
      size_t jstart = std::min(i - 1, m + 1);
      for (size_t j = jstart + 1; j-- > 0;) apply_reduction(i, j);
    }
    if (overflow) {
      out.status = RelationSearch::Status::Exhausted;
      return out;
    }
    if (check_state()) return out;
  }
  out.status = RelationSearch::Status::Exhausted;
  return out;
}

RelationSearch ratio_relation(const BigFixed& x0, const BigFixed& x1,
                              double height_bound, const BigFixed& eps) {
  RelationSearch out;
  if (x1.is_zero()) fail(ErrorCode::ValidationError, "ratio_relation: x1 = 0");
  int frac = x0.frac();
  BigFixed r = x0 / x1;
  bool ok = true;
  long long a = r.floor64(&ok);
  if (!ok) {
    out.status = RelationSearch::Status::Exhausted;
    return out;
  }
  long long p_prev = 1, q_prev = 0;
  long long p = a, q = 1;
  BigFixed fracpart = r - BigFixed::from_int64(a, frac);
  // Stop refining once the remainder is below the meaningful threshold.
  BigFixed tiny = eps / x1.abs();
  auto residual_small = [&](long long pp, long long qq) {
    BigFixed res = x0.mul_int(qq) - x1.mul_int(pp);
    BigFixed budget = eps.mul_int(std::max(1LL, std::max(std::llabs(pp), std::llabs(qq))));
    return BigFixed::compare(res.abs(), budget) <= 0;
  };
  for (int it = 0; it < 400; ++it) {
    out.iterations = it + 1;
    if (q > static_cast<long long>(height_bound)) {
      out.status = RelationSearch::Status::NoRelationUnderBound;
      out.certified_norm_bound = static_cast<double>(q);
      return out;
    }
    if (std::llabs(p) <= static_cast<long long>(height_bound) &&
        residual_small(p, q)) {
      out.status = RelationSearch::Status::RelationFound;
      out.relation = {q, -p};
      return out;
    }
    if (BigFixed::compare(fracpart.abs(), tiny) <= 0) {
      // The ratio is rational at working precision; no further convergents.
      out.status = RelationSearch::Status::NoRelationUnderBound;
      out.certified_norm_bound = static_cast<double>(q);
      return out;
    }
    BigFixed inv = BigFixed::from_int64(1, frac) / fracpart;
    long long an = inv.floor64(&ok);
    if (!ok) {
      out.status = RelationSearch::Status::Exhausted;
      return out;
    }
    fracpart = inv - BigFixed::from_int64(an, frac);
    long long pn, qn;
    if (__builtin_mul_overflow(an, p, &pn) || __builtin_add_overflow(pn, p_prev, &pn) ||
        __builtin_mul_overflow(an, q, &qn) || __builtin_add_overflow(qn, q_prev, &qn)) {
      out.status = RelationSearch::Status::NoRelationUnderBound;
      out.certified_norm_bound = static_cast<double>(q);
      return out;
    }
    p_prev = p; q_prev = q; p = pn; q = qn;
  }
  out.status = RelationSearch::Status::Exhausted;
  return out;
}

}  // namespace vallab
