// SPDX-License-Identifier: Apache-2.0
//
// wetsim: outage analysis for wireless energy transfer from antenna arrays
// Copyright (C) 2026 the wetsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "wetsim/channel.hpp"

#include <cmath>

namespace wetsim::channel {

VectorXcd steering_vector(int M, const std::vector<double>& alphas, double phi,
                          double d_over_lambda) {
  if (M < 1) throw invalid_argument("steering_vector: M must be >= 1");
  if (!alphas.empty() && static_cast<int>(alphas.size()) != M) {
    throw invalid_argument("steering_vector: alphas must have M entries");
  }
  VectorXcd v(M);
  const double phase_step = 2.0 * M_PI * d_over_lambda * std::cos(phi);
  for (int i = 0; i < M; ++i) {
    const double a = alphas.empty() ? 1.0 : alphas[i];
    if (a <= 0.0) throw invalid_argument("steering_vector: alphas must be > 0");
    const double th = phase_step * i;
    v(i) = std::sqrt(a) * std::complex<double>(std::cos(th), std::sin(th));
  }
  return v;
}

FadingSpec rician_spec(const SystemParams& p) {
  p.validate();
  FadingSpec s;
  s.family = Fading::Rician;
  const double mu_scale = std::sqrt(p.beta * p.K / (p.K + 1.0));
  s.mu = mu_scale * steering_vector(p.M, p.alphas, p.phi, p.spacing);
  s.cov = (p.beta / (p.K + 1.0)) * MatrixXcd::Identity(p.M, p.M);
  return s;
}

MatrixXcd exp_correlation_matrix(int M, std::complex<double> r) {
  if (M < 1) throw invalid_argument("exp_correlation_matrix: M must be >= 1");
  if (std::abs(r) > 1.0 + 1e-15) {
    throw invalid_argument("exp_correlation_matrix: |r| must be <= 1");
  }
  MatrixXcd R(M, M);
  for (int i = 0; i < M; ++i) {
    R(i, i) = 1.0;
    std::complex<double> acc = 1.0;
    for (int j = i + 1; j < M; ++j) {
      acc *= r;
      R(i, j) = acc;
      R(j, i) = std::conj(acc);
    }
  }
  return R;
}

FadingSpec make_fading_spec(Fading family, const SystemParams& p) {
  p.validate();
  FadingSpec s;
  s.family = family;
  switch (family) {
    case Fading::IidRayleigh:
      s.mu = VectorXcd::Zero(p.M);
      s.cov = p.beta * MatrixXcd::Identity(p.M, p.M);
      break;
    case Fading::Rician:
      s = rician_spec(p);
      break;
    case Fading::InidRayleigh: {
      if (static_cast<int>(p.betas.size()) != p.M) {
        throw invalid_argument("i.n.i.d. fading needs M per-antenna path losses");
      }
      s.mu = VectorXcd::Zero(p.M);
      s.cov = MatrixXcd::Zero(p.M, p.M);
      for (int i = 0; i < p.M; ++i) {
        if (p.betas[i] <= 0.0) throw invalid_argument("per-antenna path loss must be > 0");
        s.cov(i, i) = p.betas[i];
      }
      break;
    }
    case Fading::CorrelatedRayleigh: {
      // nonzero K with correlation is representable for the simulator
      const double vscale = p.beta / (p.K + 1.0);
      s.mu = (p.K > 0.0)
                 ? VectorXcd(std::sqrt(p.beta * p.K / (p.K + 1.0)) *
                             steering_vector(p.M, p.alphas, p.phi, p.spacing))
                 : VectorXcd(VectorXcd::Zero(p.M));
      s.cov = vscale * exp_correlation_matrix(p.M, p.corr);
      break;
    }
  }
  return s;
}

ChannelSampler::ChannelSampler(const FadingSpec& spec) : mu_(spec.mu) {
  const int M = static_cast<int>(spec.mu.size());
  if (spec.cov.rows() != M || spec.cov.cols() != M) {
    throw invalid_argument("ChannelSampler: covariance dimension mismatch");
  }
  diagonal_ = spec.cov.isDiagonal(0.0);
  if (diagonal_) {
    diag_scale_.resize(M);
    for (int i = 0; i < M; ++i) {
      const double v = spec.cov(i, i).real();
      if (v < 0.0) throw invalid_argument("ChannelSampler: negative variance");
      diag_scale_[i] = std::sqrt(v);
    }
    return;
  }
  Eigen::LLT<MatrixXcd> llt(spec.cov);
  if (llt.info() == Eigen::Success) {
    factor_ = llt.matrixL();
    return;
  }
  // semi-definite boundary (e.g. |r| = 1): eigen-decomposition fallback
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(spec.cov);
  if (es.info() != Eigen::Success) {
    throw invalid_argument("ChannelSampler: covariance factorization failed");
  }
  const double tol = 1e-12 * std::max(1e-300, es.eigenvalues().cwiseAbs().maxCoeff());
  Eigen::VectorXd ev = es.eigenvalues();
  for (int i = 0; i < M; ++i) {
    if (ev(i) < -tol) {
      throw invalid_argument("ChannelSampler: covariance is not PSD");
    }
    ev(i) = std::sqrt(std::max(0.0, ev(i)));
  }
  factor_ = es.eigenvectors() * ev.asDiagonal();
}

void ChannelSampler::sample(rng::Stream& stream, std::complex<double>* out) const {
  const int M = dim();
  if (diagonal_) {
    for (int i = 0; i < M; ++i) out[i] = mu_(i) + diag_scale_[i] * stream.cnormal();
    return;
  }
  // z then dense multiply; draws are consumed in entry order either way
  thread_local std::vector<std::complex<double>> z;
  z.resize(M);
  for (int i = 0; i < M; ++i) z[i] = stream.cnormal();
  for (int i = 0; i < M; ++i) out[i] = mu_(i);
  for (int j = 0; j < M; ++j) {
    const std::complex<double> zj = z[j];
    const std::complex<double>* col = factor_.col(j).data();
    for (int i = 0; i < M; ++i) out[i] += col[i] * zj;
  }
}

VectorXcd ChannelSampler::sample(rng::Stream& stream) const {
  VectorXcd h(dim());
  sample(stream, h.data());
  return h;
}

}  // namespace wetsim::channel
