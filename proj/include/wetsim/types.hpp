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

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace wetsim {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad or inconsistent input parameters.
class invalid_argument : public error {
 public:
  using error::error;
};

// The requested scenario has no analytic expression; use the simulator.
class no_closed_form : public error {
 public:
  using error::error;
};

// An analytic expression exists but its validity condition is violated at
// the given parameters; use the simulator.
class formula_invalid : public no_closed_form {
 public:
  using no_closed_form::no_closed_form;
};

// The expression is valid but cannot be evaluated to the accuracy contract
// at the given parameters (e.g. near-equal per-antenna path losses).
class ill_conditioned : public no_closed_form {
 public:
  using no_closed_form::no_closed_form;
};

// Internal numerical routine failed to converge or certify its accuracy.
class numeric_failure : public error {
 public:
  using error::error;
};

// All scalar link parameters. Energies are in Joule, path loss and antenna
// gains are linear (not dB), angles in radian, spacing in wavelengths.
struct SystemParams {
  int M = 30;             // base-station antenna count
  double Eu = 1e-8;       // uplink pilot energy
  double Ed = 1e-3;       // downlink transmit energy (fixed-Ed scenarios)
  double rho = 2.204e-7;  // power-control parameter (adaptation scenarios)
  double Ep = 1e-7;       // sensor processing energy
  double eta = 0.5;       // harvesting efficiency, in (0, 1]
  double N0 = 1e-20;      // noise spectral density
  double beta = 1e-5;     // distance-dependent path loss, linear
  double K = 0.0;         // Rician factor (0 = Rayleigh)
  std::vector<double> alphas;       // per-antenna LoS gains; empty = all 1
  double phi = 1.0471975511965977;  // angle of departure (pi/3)
  double spacing = 0.5;             // antenna spacing d / lambda
  std::complex<double> corr = 0.0;  // adjacent-antenna correlation r
  std::vector<double> betas;        // per-antenna path loss (i.n.i.d. only)

  double alpha_sum() const;
  double threshold() const { return Eu + Ep; }  // outage threshold energy
  void validate() const;                        // throws invalid_argument
};

enum class Csi { Perfect, Ls, Mmse };
enum class Fading { IidRayleigh, Rician, InidRayleigh, CorrelatedRayleigh };
enum class Power { Fixed, Adapt };

struct ScenarioSpec {
  Csi csi = Csi::Perfect;
  Fading fading = Fading::IidRayleigh;
  Power power = Power::Fixed;
};

enum class Method { ClosedForm, Quadrature, ExpectationMc, ProtocolMc };

struct OutageEstimate {
  double p = 0.0;
  Method method = Method::ClosedForm;
  double std_err = 0.0;       // 0 for deterministic methods
  long long n_samples = 0;    // 0 for deterministic methods
  long long n_events = -1;    // outage count (protocol MC only)
  bool below_resolution = false;
};

const char* to_string(Csi c);
const char* to_string(Fading f);
const char* to_string(Power p);
const char* to_string(Method m);

bool parse_csi(const std::string& s, Csi& out);
bool parse_fading(const std::string& s, Fading& out);
bool parse_power(const std::string& s, Power& out);

}  // namespace wetsim
