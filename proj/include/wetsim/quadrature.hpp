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

#include <functional>
#include <vector>

namespace wetsim::quad {

struct Result {
  double value = 0.0;
  double abs_err = 0.0;
  bool converged = false;
};

// Globally adaptive integration on [a, b] using nested 15/31-point Gauss
// rules; the interval with the largest error estimate is bisected until
// the summed error falls below max(abs_tol, rel_tol * |value|).
Result integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-11, double abs_tol = 0.0,
                 int max_intervals = 4000);

// Same, but honoring the given interior breakpoints (sorted ascending).
Result integrate_segments(const std::function<double(double)>& f,
                          const std::vector<double>& breakpoints,
                          double rel_tol = 1e-11, double abs_tol = 0.0,
                          int max_intervals = 4000);

}  // namespace wetsim::quad
