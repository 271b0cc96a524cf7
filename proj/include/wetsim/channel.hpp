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

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "wetsim/rng.hpp"
#include "wetsim/types.hpp"

namespace wetsim::channel {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

// Statistical channel description: h ~ CN(mu, cov).
struct FadingSpec {
  Fading family = Fading::IidRayleigh;
  VectorXcd mu;
  MatrixXcd cov;
};

// Line-of-sight array response of a uniform linear array:
// [sqrt(a_0), sqrt(a_1) e^{j th_1}, ...] with th_i = 2 pi d i cos(phi),
// d in wavelengths.
VectorXcd steering_vector(int M, const std::vector<double>& alphas, double phi,
                          double d_over_lambda);

// Rician spec: mu = sqrt(beta K/(K+1)) * steering vector,
// cov = beta/(K+1) I. K = 0 degenerates to i.i.d. Rayleigh.
FadingSpec rician_spec(const SystemParams& p);

// Exponential correlation model: [R]_{ij} = r^{j-i} for i <= j, conjugated
// below the diagonal. Rejects |r| > 1.
MatrixXcd exp_correlation_matrix(int M, std::complex<double> r);

// Builds the spec for any supported family from the system parameters.
FadingSpec make_fading_spec(Fading family, const SystemParams& p);

// Draws h = mu + A z with A A^H = cov. The factor is precomputed once;
// sampling itself is allocation-free. Diagonal covariances take a fast
// path. Throws on covariance that is not PSD.
class ChannelSampler {
 public:
  explicit ChannelSampler(const FadingSpec& spec);

  int dim() const { return static_cast<int>(mu_.size()); }
  bool diagonal() const { return diagonal_; }

  // out must have room for dim() entries
  void sample(rng::Stream& stream, std::complex<double>* out) const;
  VectorXcd sample(rng::Stream& stream) const;

 private:
  VectorXcd mu_;
  bool diagonal_ = true;
  std::vector<double> diag_scale_;
  MatrixXcd factor_;  // dense A, column-major
};

}  // namespace wetsim::channel
