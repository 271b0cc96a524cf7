// SPDX-License-Identifier: Apache-2.0
//
// wetsim: outage analysis for wireless energy transfer from antenna arrays
// Copyright (C) 2026 the wetsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <vector>

namespace wetsim::specfun {

// Exponentially scaled modified Bessel function of the first kind,
// e^{-x} I_n(x), for integer n >= 0 and x >= 0. Values lie in (0, 1] for
// x > 0 and decrease with n. Throws wetsim::invalid_argument on negative
// arguments.
double bessel_i_scaled(int n, double x);

// log(e^{-x} I_n(x)); usable far below the double underflow threshold of
// the scaled value itself. Returns -inf for I_n(0), n >= 1.
double log_bessel_i_scaled(int n, double x);

// Regularized incomplete gamma functions P(m, x) = gamma(m, x) / (m-1)!
// and Q(m, x) = 1 - P(m, x), for integer order m >= 1 and x >= 0.
double regularized_lower_gamma(int m, double x);
double regularized_upper_gamma(int m, double x);

// Generalized Marcum Q-function of integer order m >= 1 on the amplitude
// convention: Q_m(a, b) = Pr(X > b^2) where X is noncentral chi-square
// with 2m degrees of freedom and noncentrality a^2. marcum_q_complement
// returns 1 - Q_m(a, b) with full relative accuracy in the lower tail;
// both entry points are exposed so callers never form 1 - (1 - eps).
double marcum_q(int m, double a, double b);
double marcum_q_complement(int m, double a, double b);

// CDF / survival function of the noncentral chi-square distribution with
// even dof = 2m and noncentrality lambda >= 0, evaluated at x >= 0.
double noncentral_chi2_cdf(int dof, double lambda, double x);
double noncentral_chi2_sf(int dof, double lambda, double x);

// Laguerre polynomial L_k(x) by the three-term recurrence. Overflows to
// +/-inf for large |x| and k; use the signed-log form there.
double laguerre(int k, double x);

// Sign and natural log of |L_k(x)|, immune to overflow. sign == 0 encodes
// an exact zero (log_abs is then -inf).
struct SignedLog {
  double log_abs;
  int sign;
};
SignedLog laguerre_log(int k, double x);

// All orders 0..k_max in one recurrence pass.
std::vector<SignedLog> laguerre_log_seq(int k_max, double x);

namespace detail {
// P(s, x) and Q(s, x) for real s > 0 (series / continued fraction).
void gamma_pq(double s, double x, double* p, double* q);
// Both tails of the noncentral chi-square with 2m dof at noncentrality
// 2L and argument 2X; each output is relatively accurate when small.
void noncentral_pq(int m, double L, double X, double* p, double* q);
}  // namespace detail

}  // namespace wetsim::specfun
