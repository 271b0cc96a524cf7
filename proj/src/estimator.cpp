// SPDX-License-Identifier: Apache-2.0
//
// wetsim: outage analysis for wireless energy transfer from antenna arrays
// Copyright (C) 2026 the wetsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "wetsim/estimator.hpp"

#include <cmath>

namespace wetsim::estimator {

PilotObservation observe_pilot(const VectorXcd& h, const SystemParams& p,
                               rng::Stream& stream) {
  p.validate();
  PilotObservation obs;
  obs.Eu = p.Eu;
  obs.N0 = p.N0;
  const double se = std::sqrt(p.Eu), sn = std::sqrt(p.N0);
  obs.y.resize(h.size());
  for (Eigen::Index i = 0; i < h.size(); ++i) {
    obs.y(i) = se * h(i) + sn * stream.cnormal();
  }
  return obs;
}

ChannelEstimate perfect_estimate(const VectorXcd& h) {
  return {Csi::Perfect, h, 0.0};
}

ChannelEstimate ls_estimate(const PilotObservation& obs) {
  if (obs.Eu <= 0.0) throw invalid_argument("ls_estimate: Eu must be > 0");
  return {Csi::Ls, obs.y / std::sqrt(obs.Eu), obs.N0 / obs.Eu};
}

double ls_error_variance(const SystemParams& p) { return p.N0 / p.Eu; }

double mmse_error_variance(const SystemParams& p) {
  return p.beta * p.N0 / (p.beta * p.Eu + (p.K + 1.0) * p.N0);
}

ChannelEstimate mmse_estimate(const PilotObservation& obs,
                              const channel::FadingSpec& prior,
                              const SystemParams& p) {
  MmseFilter filt(prior, p);
  ChannelEstimate est;
  est.kind = Csi::Mmse;
  est.h_hat.resize(prior.mu.size());
  filt.apply(obs.y.data(), est.h_hat.data());
  est.err_var = filt.err_var();
  return est;
}

MmseFilter::MmseFilter(const channel::FadingSpec& prior, const SystemParams& p)
    : mu_(prior.mu), sqrt_eu_(std::sqrt(p.Eu)) {
  const int M = static_cast<int>(prior.mu.size());
  const bool diag = prior.cov.isDiagonal(0.0);
  if (diag) {
    scalar_ = true;
    gain_diag_.resize(M);
    double tr_err = 0.0;
    for (int i = 0; i < M; ++i) {
      const double c = prior.cov(i, i).real();  // prior variance per entry
      const double denom = p.Eu * c + p.N0;
      gain_diag_[i] = std::sqrt(p.Eu) * c / denom;
      tr_err += c * p.N0 / denom;
    }
    err_var_ = tr_err / M;
    return;
  }
  scalar_ = false;
  // W = sqrt(Eu) C (Eu C + N0 I)^{-1}; error covariance C - sqrt(Eu) W C
  MatrixXcd A = p.Eu * prior.cov + p.N0 * MatrixXcd::Identity(M, M);
  w_ = sqrt_eu_ * prior.cov * A.inverse();
  const MatrixXcd err = prior.cov - sqrt_eu_ * w_ * prior.cov;
  err_var_ = err.trace().real() / M;
}

void MmseFilter::apply(const std::complex<double>* y, std::complex<double>* out) const {
  const int M = dim();
  if (scalar_) {
    for (int i = 0; i < M; ++i) {
      out[i] = mu_(i) + gain_diag_[i] * (y[i] - sqrt_eu_ * mu_(i));
    }
    return;
  }
  thread_local std::vector<std::complex<double>> d;
  d.resize(M);
  for (int i = 0; i < M; ++i) d[i] = y[i] - sqrt_eu_ * mu_(i);
  for (int i = 0; i < M; ++i) out[i] = mu_(i);
  for (int j = 0; j < M; ++j) {
    const std::complex<double> dj = d[j];
    const std::complex<double>* col = w_.col(j).data();
    for (int i = 0; i < M; ++i) out[i] += col[i] * dj;
  }
}

ConditionalStats ls_gain_conditional_stats(const VectorXcd& h_hat_ls,
                                           const SystemParams& p) {
  p.validate();
  const double norm = h_hat_ls.norm();
  if (!(norm > 0.0)) {
    throw invalid_argument("conditional stats: zero-norm estimate");
  }
  const double D = p.beta * p.Eu + (p.K + 1.0) * p.N0;
  const VectorXcd mu = channel::rician_spec(p).mu;
  const std::complex<double> hm = h_hat_ls.dot(mu);  // h_hat^H mu
  ConditionalStats out;
  out.mean = (p.beta * p.Eu / D) * norm + ((p.K + 1.0) * p.N0 / D) * hm / norm;
  out.var = p.beta * p.N0 / D;
  return out;
}

ConditionalStats mmse_gain_conditional_stats(const VectorXcd& h_hat_mmse,
                                             const SystemParams& p) {
  p.validate();
  const double norm = h_hat_mmse.norm();
  if (!(norm > 0.0)) {
    throw invalid_argument("conditional stats: zero-norm estimate");
  }
  const double D = p.beta * p.Eu + (p.K + 1.0) * p.N0;
  return {norm, p.beta * p.N0 / D};
}

}  // namespace wetsim::estimator
