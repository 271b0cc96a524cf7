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

#include "wetsim/channel.hpp"
#include "wetsim/rng.hpp"
#include "wetsim/types.hpp"

namespace wetsim::estimator {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

// Sufficient statistic of the uplink pilot phase: y = sqrt(Eu) h + w,
// w ~ CN(0, N0 I).
struct PilotObservation {
  VectorXcd y;
  double Eu = 0.0;
  double N0 = 0.0;
};

PilotObservation observe_pilot(const VectorXcd& h, const SystemParams& p,
                               rng::Stream& stream);

struct ChannelEstimate {
  Csi kind = Csi::Perfect;
  VectorXcd h_hat;
  double err_var = 0.0;  // per-entry error variance; 0 iff kind == Perfect
};

ChannelEstimate perfect_estimate(const VectorXcd& h);

// h_hat = y / sqrt(Eu); error ~ CN(0, N0/Eu I), independent of h.
ChannelEstimate ls_estimate(const PilotObservation& obs);

// Gaussian conditional mean E[h | y]. The i.i.d. prior reduces to a scalar
// gain; correlated priors use the full matrix form.
ChannelEstimate mmse_estimate(const PilotObservation& obs,
                              const channel::FadingSpec& prior,
                              const SystemParams& p);

// LS error variance N0/Eu; MMSE error variance beta N0/(beta Eu + (K+1) N0).
double ls_error_variance(const SystemParams& p);
double mmse_error_variance(const SystemParams& p);

// Precomputed MMSE filter for tight sampling loops:
// h_hat = mu + W (y - sqrt(Eu) mu). Scalar gain when the prior covariance
// is a multiple of the identity.
class MmseFilter {
 public:
  MmseFilter(const channel::FadingSpec& prior, const SystemParams& p);
  void apply(const std::complex<double>* y, std::complex<double>* h_hat) const;
  int dim() const { return static_cast<int>(mu_.size()); }
  double err_var() const { return err_var_; }

 private:
  VectorXcd mu_;
  double sqrt_eu_;
  bool scalar_ = true;
  std::vector<double> gain_diag_;  // per-entry gain (diagonal priors)
  MatrixXcd w_;                    // full filter otherwise
  double err_var_ = 0.0;           // average per-entry error variance
};

// Conditional law of the beamforming gain Psi = h_hat^H h / ||h_hat||
// given the estimate: complex Gaussian with the mean/variance below.
struct ConditionalStats {
  std::complex<double> mean;
  double var = 0.0;
};

// LS conditioning: mean mixes ||h_hat|| with the prior mean component.
ConditionalStats ls_gain_conditional_stats(const VectorXcd& h_hat_ls,
                                           const SystemParams& p);

// MMSE conditioning: mean is exactly ||h_hat||; same variance as LS.
ConditionalStats mmse_gain_conditional_stats(const VectorXcd& h_hat_mmse,
                                             const SystemParams& p);

}  // namespace wetsim::estimator
