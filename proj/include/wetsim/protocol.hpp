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

#include "wetsim/estimator.hpp"
#include "wetsim/types.hpp"

namespace wetsim::protocol {

using Eigen::VectorXcd;

// Maximum-ratio beamforming gain Psi = h_hat^H h / ||h_hat||. Invariant to
// positive scaling of the estimate; |Psi| <= ||h|| by Cauchy-Schwarz.
std::complex<double> beamform_gain(const VectorXcd& h_hat, const VectorXcd& h);

// Harvested energy E_h = eta E_d |Psi|^2; downlink receiver noise is not
// part of the harvest model.
double harvested_energy(std::complex<double> psi, double Ed, double eta);

// Channel-inversion power control E_d = rho / ||h_hat||^2.
double adapt_downlink_energy(double h_hat_norm_sq, double rho);

// Outage: harvested energy does not cover pilot plus processing energy.
// The boundary tie counts as outage.
bool outage_event(double E_h, double Eu, double Ep);

struct HarvestOutcome {
  double E_h = 0.0;
  double E_d_used = 0.0;
  bool outage = true;
};

// Downlink half of the two-phase protocol for one coherence interval.
HarvestOutcome run_downlink(const estimator::ChannelEstimate& est,
                            const VectorXcd& h, const SystemParams& p,
                            Power power);

}  // namespace wetsim::protocol
