// SPDX-License-Identifier: Apache-2.0
//
// wetsim: outage analysis for wireless energy transfer from antenna arrays
// Copyright (C) 2026 the wetsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "wetsim/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wetsim/quadrature.hpp"
#include "wetsim/types.hpp"

namespace wetsim::specfun {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

void require(bool cond, const char* msg) {
  if (!cond) throw invalid_argument(msg);
}

// ---------------------------------------------------------------------------
// Scaled modified Bessel I

// Power series for ln(e^{-x} I_n(x)); any n, efficient for small x.
double log_ine_series(int n, double x) {
  const double q = 0.25 * x * x;
  double term = 1.0, sum = 1.0;
  for (int k = 0; k < 100000; ++k) {
    term *= q / ((k + 1.0) * (n + k + 1.0));
    sum += term;
    if (term < sum * 1e-18) break;
  }
  return n * std::log(0.5 * x) - x - std::lgamma(n + 1.0) + std::log(sum);
}

// Large-argument asymptotic expansion; requires x >> n^2.
double log_ine_asymptotic(int n, double x) {
  const double mu = 4.0 * static_cast<double>(n) * n;
  double term = 1.0, sum = 1.0, prev = kInf;
  for (int k = 1; k <= 50; ++k) {
    const double f = (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * x * k);
    term *= -f;
    if (std::abs(term) >= prev) break;  // past the smallest term
    sum += term;
    prev = std::abs(term);
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return std::log(sum) - 0.5 * std::log(2.0 * M_PI * x);
}

// Miller downward recurrence, normalized by e^{-x}(I_0 + 2 sum I_k) = 1.
double log_ine_miller(int n, double x) {
  const int start = n + static_cast<int>(std::ceil(std::sqrt(90.0 * x))) + 40;
  double pjp1 = 0.0, pj = 1.0, saved = (n == start) ? pj : 0.0;
  double sum = 2.0 * pj;  // accumulates 2 * sum_{j >= 1} p_j
  for (int j = start; j >= 1; --j) {
    double pjm1 = pjp1 + (2.0 * j / x) * pj;
    pjp1 = pj;
    pj = pjm1;  // now holds p_{j-1}
    if (j - 1 >= 1) sum += 2.0 * pj;
    if (j - 1 == n) saved = pj;
    if (pj > 1e250) {
      pj *= 1e-250;
      pjp1 *= 1e-250;
      sum *= 1e-250;
      saved *= 1e-250;
    }
  }
  const double norm = sum - pj;  // p_0 counted twice in sum
  if (!(saved > 0.0) || !(norm > 0.0)) return log_ine_series(n, x);
  return std::log(saved) - std::log(norm);
}

// ---------------------------------------------------------------------------
// Regularized incomplete gamma, real order

void gamma_pq_impl(double s, double x, double* p, double* q) {
  if (x == 0.0) {
    *p = 0.0;
    *q = 1.0;
    return;
  }
  const double lpre = -x + s * std::log(x) - std::lgamma(s);
  if (x < s + 1.0) {
    // lower series
    double ap = s, del = 1.0 / s, sum = del;
    for (int i = 0; i < 100000; ++i) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (del < sum * 1e-17) break;
    }
    *p = clamp01(sum * std::exp(lpre));
    *q = 1.0 - *p;
  } else {
    // Lentz continued fraction for Q
    const double tiny = 1e-300;
    double b = x + 1.0 - s, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i < 100000; ++i) {
      const double an = -i * (i - s);
      b += 2.0;
      d = an * d + b;
      if (std::abs(d) < tiny) d = tiny;
      c = b + an / c;
      if (std::abs(c) < tiny) c = tiny;
      d = 1.0 / d;
      const double del = d * c;
      h *= del;
      if (std::abs(del - 1.0) < 1e-16) break;
    }
    *q = clamp01(std::exp(lpre) * h);
    *p = 1.0 - *q;
  }
}

// ---------------------------------------------------------------------------
// Noncentral chi-square, both tails
//
// Poisson mixture of central gamma tails, summed outward from the Poisson
// mode. Each accumulator only ever adds positive terms, so whichever tail
// is small comes out relatively accurate.

void noncentral_pq_mixture(int m, double L, double X, double* p, double* q) {
  if (X == 0.0) {
    *p = 0.0;
    *q = 1.0;
    return;
  }
  if (L == 0.0) {
    gamma_pq_impl(m, X, p, q);
    return;
  }
  const int j0 = static_cast<int>(L);
  const double w0 = std::exp(-L + j0 * std::log(L) - std::lgamma(j0 + 1.0));
  double p0, q0;
  gamma_pq_impl(m + j0, X, &p0, &q0);
  const double lt0 = (m + j0) * std::log(X) - X - std::lgamma(m + j0 + 1.0);
  const double t0 = std::exp(lt0);

  double pacc = w0 * p0, qacc = w0 * q0;
  const double floor_ = 1e-320;

  // upward sweep: Q(s+1) = Q(s) + T(s), T(s+1) = T(s) X/(s+1)
  {
    double w = w0, T = t0, P = p0, Q = q0;
    for (int j = j0 + 1; j < j0 + 4000000; ++j) {
      w *= L / j;
      Q += T;
      P -= T;
      if (P < 0.0) P = 0.0;
      if (Q > 1.0) Q = 1.0;
      T *= X / (m + j);
      pacc += w * P;
      qacc += w * Q;
      if (w < 1e-18 * (qacc + floor_) && w * P < 1e-18 * (pacc + floor_)) break;
    }
  }
  // downward sweep: P(s-1) = P(s) + T(s-1), T(s-1) = T(s) (s)/X
  {
    double w = w0, T = t0, P = p0, Q = q0;
    for (int j = j0 - 1; j >= 0; --j) {
      w *= (j + 1.0) / L;
      T *= (m + j + 1.0) / X;
      P += T;
      Q -= T;
      if (Q < 0.0) Q = 0.0;
      if (P > 1.0) P = 1.0;
      pacc += w * P;
      qacc += w * Q;
      if (w < 1e-18 * (pacc + floor_) && w * Q < 1e-18 * (qacc + floor_)) break;
    }
  }
  *p = clamp01(pacc);
  *q = clamp01(qacc);
}

// Quadrature over the amplitude-domain density for arguments where the
// mixture would need O(sqrt(lambda)) >> 1e3 terms. The density of
// Y = sqrt(X), X ~ ncchi2(2m, a^2), is
//   f(y) = y (y/a)^{m-1} e^{-(y-a)^2/2} [e^{-ay} I_{m-1}(ay)],
// a localized bump of width O(1); each tail is integrated on its own.
class AmplitudeDensity {
 public:
  AmplitudeDensity(int m, double a) : m_(m), a_(a) {}

  double log_density(double y) const {
    if (y <= 0.0) return -kInf;
    return std::log(y) + (m_ - 1) * (std::log(y) - std::log(a_)) +
           log_bessel_i_scaled(m_ - 1, a_ * y) - 0.5 * (y - a_) * (y - a_);
  }

  double peak() const {
    return 0.5 * (a_ + std::sqrt(a_ * a_ + 4.0 * m_ - 2.0));
  }

  // integral of the density over [lo, hi] (bounds already localized)
  double integrate(double lo, double hi) const {
    if (!(hi > lo)) return 0.0;
    // locate scale
    double lmax = -kInf;
    const int kProbe = 33;
    for (int i = 0; i <= kProbe; ++i) {
      lmax = std::max(lmax, log_density(lo + (hi - lo) * i / kProbe));
    }
    if (lmax == -kInf || lmax < -740.0) return 0.0;
    const double shift = lmax;
    auto f = [&](double y) {
      const double l = log_density(y);
      return (l - shift < -745.0) ? 0.0 : std::exp(l - shift);
    };
    std::vector<double> pts;
    for (int i = 0; i <= 8; ++i) pts.push_back(lo + (hi - lo) * i / 8.0);
    auto res = quad::integrate_segments(f, pts, 1e-12, 1e-320);
    if (!res.converged) {
      throw numeric_failure("tail quadrature did not converge");
    }
    return res.value * std::exp(shift);
  }

  // width that certainly covers the mass adjacent to y0 on the given side
  double localized_bound(double y0, int dir) const {
    const double l0 = log_density(y0);
    double step = 1.0, y = y0;
    for (int i = 0; i < 200; ++i) {
      double ynext = y + dir * step;
      if (ynext <= 0.0) return 0.0;
      if (log_density(ynext) < l0 - 60.0 && ynext > 0.0) return ynext;
      y = ynext;
      step *= 1.5;
    }
    return y;
  }

 private:
  int m_;
  double a_;
};

double marcum_tail_quad(int m, double a, double b, bool lower) {
  AmplitudeDensity f(m, a);
  const double yp = f.peak();
  const double w = 30.0;
  if (lower) {
    // P = integral over (0, b]
    double lo;
    if (b <= yp) {
      lo = f.localized_bound(b, -1);  // mass hugs b from below
    } else {
      lo = std::max(0.0, f.localized_bound(yp, -1));
    }
    return clamp01(f.integrate(std::max(0.0, lo), b));
  }
  // Q = integral over [b, inf)
  double hi;
  if (b >= yp) {
    hi = f.localized_bound(b, +1);
  } else {
    hi = f.localized_bound(std::max(yp + w, b), +1);
  }
  return clamp01(f.integrate(b, hi));
}

void marcum_pq(int m, double a, double b, double* p, double* q) {
  const double L = 0.5 * a * a, X = 0.5 * b * b;
  if (b == 0.0) {
    *p = 0.0;
    *q = 1.0;
    return;
  }
  if (a == 0.0 || L <= 2.5e4) {
    noncentral_pq_mixture(m, L, X, p, q);
    return;
  }
  // decide which tail is small from the Gaussian-scale distance to the peak
  AmplitudeDensity f(m, a);
  if (b <= f.peak()) {
    *p = marcum_tail_quad(m, a, b, true);
    *q = 1.0 - *p;
  } else {
    *q = marcum_tail_quad(m, a, b, false);
    *p = 1.0 - *q;
  }
}

void validate_marcum(int m, double a, double b) {
  require(m >= 1, "marcum_q: order must be >= 1");
  require(std::isfinite(a) && a >= 0.0, "marcum_q: a must be finite and >= 0");
  require(std::isfinite(b) && b >= 0.0, "marcum_q: b must be finite and >= 0");
}

}  // namespace

// ---------------------------------------------------------------------------

double log_bessel_i_scaled(int n, double x) {
  require(n >= 0, "bessel_i_scaled: order must be >= 0");
  require(std::isfinite(x) && x >= 0.0, "bessel_i_scaled: x must be >= 0");
  if (x == 0.0) return (n == 0) ? 0.0 : -kInf;
  if (x <= 40.0 || x <= 0.7 * n) return log_ine_series(n, x);
  if (x >= 1000.0 && x >= 10.0 * static_cast<double>(n) * n) {
    return log_ine_asymptotic(n, x);
  }
  return log_ine_miller(n, x);
}

double bessel_i_scaled(int n, double x) {
  const double l = log_bessel_i_scaled(n, x);
  return (l == -kInf) ? 0.0 : std::exp(l);
}

double regularized_lower_gamma(int m, double x) {
  require(m >= 1, "regularized_lower_gamma: order must be >= 1");
  require(std::isfinite(x) && x >= 0.0, "regularized_lower_gamma: x must be >= 0");
  double p, q;
  gamma_pq_impl(m, x, &p, &q);
  return p;
}

double regularized_upper_gamma(int m, double x) {
  require(m >= 1, "regularized_upper_gamma: order must be >= 1");
  require(std::isfinite(x) && x >= 0.0, "regularized_upper_gamma: x must be >= 0");
  double p, q;
  gamma_pq_impl(m, x, &p, &q);
  return q;
}

double marcum_q(int m, double a, double b) {
  validate_marcum(m, a, b);
  double p, q;
  marcum_pq(m, a, b, &p, &q);
  return q;
}

double marcum_q_complement(int m, double a, double b) {
  validate_marcum(m, a, b);
  double p, q;
  marcum_pq(m, a, b, &p, &q);
  return p;
}

double noncentral_chi2_cdf(int dof, double lambda, double x) {
  require(dof >= 2 && dof % 2 == 0, "noncentral_chi2_cdf: dof must be even and >= 2");
  require(std::isfinite(lambda) && lambda >= 0.0, "noncentral_chi2_cdf: lambda must be >= 0");
  require(std::isfinite(x) && x >= 0.0, "noncentral_chi2_cdf: x must be >= 0");
  double p, q;
  marcum_pq(dof / 2, std::sqrt(lambda), std::sqrt(x), &p, &q);
  return p;
}

double noncentral_chi2_sf(int dof, double lambda, double x) {
  require(dof >= 2 && dof % 2 == 0, "noncentral_chi2_sf: dof must be even and >= 2");
  require(std::isfinite(lambda) && lambda >= 0.0, "noncentral_chi2_sf: lambda must be >= 0");
  require(std::isfinite(x) && x >= 0.0, "noncentral_chi2_sf: x must be >= 0");
  double p, q;
  marcum_pq(dof / 2, std::sqrt(lambda), std::sqrt(x), &p, &q);
  return q;
}

double laguerre(int k, double x) {
  require(k >= 0, "laguerre: order must be >= 0");
  require(std::isfinite(x), "laguerre: x must be finite");
  if (k == 0) return 1.0;
  double lm1 = 1.0, l = 1.0 - x;
  for (int j = 1; j < k; ++j) {
    const double lp1 = ((2.0 * j + 1.0 - x) * l - j * lm1) / (j + 1.0);
    lm1 = l;
    l = lp1;
  }
  return l;
}

std::vector<SignedLog> laguerre_log_seq(int k_max, double x) {
  require(k_max >= 0, "laguerre_log_seq: order must be >= 0");
  require(std::isfinite(x), "laguerre_log_seq: x must be finite");
  std::vector<SignedLog> out(k_max + 1);
  auto record = [](double v, double offset) -> SignedLog {
    if (v == 0.0) return {-kInf, 0};
    return {std::log(std::abs(v)) + offset, v > 0.0 ? 1 : -1};
  };
  double offset = 0.0;
  double lm1 = 1.0, l = 1.0 - x;
  out[0] = record(lm1, offset);
  if (k_max >= 1) out[1] = record(l, offset);
  for (int j = 1; j < k_max; ++j) {
    double lp1 = ((2.0 * j + 1.0 - x) * l - j * lm1) / (j + 1.0);
    lm1 = l;
    l = lp1;
    const double mag = std::max(std::abs(l), std::abs(lm1));
    if (mag > 1e270) {
      l *= 1e-270;
      lm1 *= 1e-270;
      offset += std::log(1e270);
    } else if (mag > 0.0 && mag < 1e-270) {
      l *= 1e270;
      lm1 *= 1e270;
      offset -= std::log(1e270);
    }
    out[j + 1] = record(l, offset);
  }
  return out;
}

SignedLog laguerre_log(int k, double x) { return laguerre_log_seq(k, x).back(); }

namespace detail {

void gamma_pq(double s, double x, double* p, double* q) {
  require(s > 0.0 && std::isfinite(x) && x >= 0.0, "gamma_pq: bad arguments");
  gamma_pq_impl(s, x, p, q);
}

void noncentral_pq(int m, double L, double X, double* p, double* q) {
  require(m >= 1 && L >= 0.0 && X >= 0.0, "noncentral_pq: bad arguments");
  marcum_pq(m, std::sqrt(2.0 * L), std::sqrt(2.0 * X), p, q);
}

}  // namespace detail

}  // namespace wetsim::specfun
