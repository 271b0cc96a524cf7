// SPDX-License-Identifier: Apache-2.0
//
// wetsim: outage analysis for wireless energy transfer from antenna arrays
// Copyright (C) 2026 the wetsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "wetsim/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace wetsim::quad {

namespace {

// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on the
// Legendre recurrence.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
  }
}

struct Rules {
  std::vector<double> x_lo, w_lo, x_hi, w_hi;
  Rules() {
    gauss_legendre(15, x_lo, w_lo);
    gauss_legendre(31, x_hi, w_hi);
  }
};

const Rules& rules() {
  static const Rules r;
  return r;
}

struct Interval {
  double a, b, value, err;
  bool operator<(const Interval& o) const { return err < o.err; }
};

Interval evaluate(const std::function<double(double)>& f, double a, double b) {
  const Rules& r = rules();
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double lo = 0.0, hi = 0.0;
  for (size_t i = 0; i < r.x_lo.size(); ++i) lo += r.w_lo[i] * f(c + h * r.x_lo[i]);
  for (size_t i = 0; i < r.x_hi.size(); ++i) hi += r.w_hi[i] * f(c + h * r.x_hi[i]);
  lo *= h;
  hi *= h;
  return {a, b, hi, std::abs(hi - lo)};
}

}  // namespace

Result integrate_segments(const std::function<double(double)>& f,
                          const std::vector<double>& pts, double rel_tol,
                          double abs_tol, int max_intervals) {
  std::priority_queue<Interval> heap;
  double total = 0.0, err = 0.0;
  int count = 0;
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    if (!(pts[i] < pts[i + 1])) continue;
    Interval iv = evaluate(f, pts[i], pts[i + 1]);
    total += iv.value;
    err += iv.err;
    heap.push(iv);
    ++count;
  }
  while (!heap.empty() && count < max_intervals) {
    if (err <= std::max(abs_tol, rel_tol * std::abs(total))) break;
    Interval worst = heap.top();
    if (worst.err <= 0.0) break;
    heap.pop();
    double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) continue;  // interval at ulp width
    Interval left = evaluate(f, worst.a, mid);
    Interval right = evaluate(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    err += left.err + right.err - worst.err;
    heap.push(left);
    heap.push(right);
    ++count;
  }
  bool ok = err <= std::max(abs_tol, rel_tol * std::abs(total)) ||
            (heap.empty() || heap.top().err <= 0.0);
  return {total, err, ok};
}

Result integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, double abs_tol, int max_intervals) {
  return integrate_segments(f, {a, b}, rel_tol, abs_tol, max_intervals);
}

}  // namespace wetsim::quad
