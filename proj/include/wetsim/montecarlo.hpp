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

#include <cstdint>
#include <vector>

#include "wetsim/channel.hpp"
#include "wetsim/types.hpp"

namespace wetsim::montecarlo {

struct McConfig {
  long long n_trials = 1000000;
  uint64_t seed = 1;
  int threads = 0;          // 0 = hardware concurrency
  long long batch = 65536;  // trials per work chunk (scheduling only)
};

// Full two-phase protocol simulation: channel draw, pilot, estimate,
// beamform (optionally with channel-inversion power control), harvest,
// outage count. Every trial's randomness is addressed by (seed, trial
// index), so the outage count is bit-exact for a fixed (seed, n_trials)
// regardless of thread count or batch size.
//
// Fewer than 20 outage events marks the estimate below_resolution.
OutageEstimate simulate_outage(const ScenarioSpec& sc, const SystemParams& p,
                               const channel::FadingSpec& spec,
                               const McConfig& mc);

// Convenience overload deriving the fading spec from the scenario.
OutageEstimate simulate_outage(const ScenarioSpec& sc, const SystemParams& p,
                               const McConfig& mc);

enum class Axis { M, Ed, Eu, K, r, beta, rho, Ep };

struct SweepPoint {
  double x = 0.0;
  OutageEstimate estimate;
};

// One simulation per grid value, same seed discipline at every point
// (common random numbers across the grid).
std::vector<SweepPoint> sweep(const ScenarioSpec& sc, const SystemParams& p,
                              Axis axis, const std::vector<double>& grid,
                              const McConfig& mc);

// Applies one axis value to a parameter copy (used by sweep and the CLI).
SystemParams with_axis_value(const SystemParams& p, Axis axis, double value);

bool parse_axis(const std::string& s, Axis& out);
const char* to_string(Axis a);

}  // namespace wetsim::montecarlo
