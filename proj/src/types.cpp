// SPDX-License-Identifier: Apache-2.0
//
// wetsim: outage analysis for wireless energy transfer from antenna arrays
// Copyright (C) 2026 the wetsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "wetsim/types.hpp"

#include <algorithm>
#include <cmath>

namespace wetsim {

double SystemParams::alpha_sum() const {
  if (alphas.empty()) return static_cast<double>(M);
  double s = 0.0;
  for (double a : alphas) s += a;
  return s;
}

void SystemParams::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (M < 1) throw invalid_argument("M must be >= 1");
  if (!positive(Eu)) throw invalid_argument("Eu must be > 0");
  if (!positive(Ed)) throw invalid_argument("Ed must be > 0");
  if (!positive(Ep)) throw invalid_argument("Ep must be > 0");
  if (!positive(rho)) throw invalid_argument("rho must be > 0");
  if (!positive(N0)) throw invalid_argument("N0 must be > 0");
  if (!positive(beta)) throw invalid_argument("beta must be > 0");
  if (!(std::isfinite(eta) && eta > 0.0 && eta <= 1.0)) {
    throw invalid_argument("eta must be in (0, 1]");
  }
  if (!(std::isfinite(K) && K >= 0.0)) throw invalid_argument("K must be >= 0");
  if (!alphas.empty()) {
    if (static_cast<int>(alphas.size()) != M) {
      throw invalid_argument("alphas must have M entries");
    }
    for (double a : alphas) {
      if (!positive(a)) throw invalid_argument("alphas must be > 0");
    }
  }
  if (!std::isfinite(phi)) throw invalid_argument("phi must be finite");
  if (!positive(spacing)) throw invalid_argument("spacing must be > 0");
  if (!(std::abs(corr) <= 1.0 + 1e-15)) throw invalid_argument("|corr| must be <= 1");
  if (!betas.empty()) {
    for (double b : betas) {
      if (!positive(b)) throw invalid_argument("betas must be > 0");
    }
  }
}

const char* to_string(Csi c) {
  switch (c) {
    case Csi::Perfect: return "perfect";
    case Csi::Ls: return "ls";
    case Csi::Mmse: return "mmse";
  }
  return "?";
}

const char* to_string(Fading f) {
  switch (f) {
    case Fading::IidRayleigh: return "rayleigh";
    case Fading::Rician: return "rician";
    case Fading::InidRayleigh: return "inid";
    case Fading::CorrelatedRayleigh: return "correlated";
  }
  return "?";
}

const char* to_string(Power p) {
  return p == Power::Fixed ? "fixed" : "adapt";
}

const char* to_string(Method m) {
  switch (m) {
    case Method::ClosedForm: return "closed-form";
    case Method::Quadrature: return "quadrature";
    case Method::ExpectationMc: return "expectation-mc";
    case Method::ProtocolMc: return "protocol-mc";
  }
  return "?";
}

bool parse_csi(const std::string& s, Csi& out) {
  if (s == "perfect") out = Csi::Perfect;
  else if (s == "ls") out = Csi::Ls;
  else if (s == "mmse") out = Csi::Mmse;
  else return false;
  return true;
}

bool parse_fading(const std::string& s, Fading& out) {
  if (s == "rayleigh") out = Fading::IidRayleigh;
  else if (s == "rician") out = Fading::Rician;
  else if (s == "inid") out = Fading::InidRayleigh;
  else if (s == "correlated") out = Fading::CorrelatedRayleigh;
  else return false;
  return true;
}

bool parse_power(const std::string& s, Power& out) {
  if (s == "fixed") out = Power::Fixed;
  else if (s == "adapt") out = Power::Adapt;
  else return false;
  return true;
}

}  // namespace wetsim
