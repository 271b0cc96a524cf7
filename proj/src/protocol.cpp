// SPDX-License-Identifier: Apache-2.0
//
// wetsim: outage analysis for wireless energy transfer from antenna arrays
// Copyright (C) 2026 the wetsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "wetsim/protocol.hpp"

namespace wetsim::protocol {

std::complex<double> beamform_gain(const VectorXcd& h_hat, const VectorXcd& h) {
  const double norm = h_hat.norm();
  if (!(norm > 0.0)) throw invalid_argument("beamform_gain: zero-norm estimate");
  return h_hat.dot(h) / norm;
}

double harvested_energy(std::complex<double> psi, double Ed, double eta) {
  if (Ed < 0.0) throw invalid_argument("harvested_energy: Ed must be >= 0");
  if (!(eta > 0.0 && eta <= 1.0)) {
    throw invalid_argument("harvested_energy: eta must be in (0, 1]");
  }
  return eta * Ed * std::norm(psi);
}

double adapt_downlink_energy(double h_hat_norm_sq, double rho) {
  if (!(h_hat_norm_sq > 0.0)) {
    throw invalid_argument("adapt_downlink_energy: zero-norm estimate");
  }
  if (!(rho > 0.0)) throw invalid_argument("adapt_downlink_energy: rho must be > 0");
  return rho / h_hat_norm_sq;
}

bool outage_event(double E_h, double Eu, double Ep) { return E_h <= Eu + Ep; }

HarvestOutcome run_downlink(const estimator::ChannelEstimate& est,
                            const VectorXcd& h, const SystemParams& p,
                            Power power) {
  HarvestOutcome out;
  const std::complex<double> psi = beamform_gain(est.h_hat, h);
  out.E_d_used = (power == Power::Fixed)
                     ? p.Ed
                     : adapt_downlink_energy(est.h_hat.squaredNorm(), p.rho);
  out.E_h = harvested_energy(psi, out.E_d_used, p.eta);
  out.outage = outage_event(out.E_h, p.Eu, p.Ep);
  return out;
}

}  // namespace wetsim::protocol
