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

#include "wetsim/types.hpp"

namespace wetsim::analytic {

// Options for the expectation-based evaluations (LS with a line-of-sight
// component), which sample the estimate from its exact Gaussian marginal.
struct ExpectationOptions {
  long long n_outer = 200000;
  uint64_t seed = 0x5eedd1ce;
};

// Perfect CSI, fixed Ed. K = 0 reduces to the regularized-gamma form.
OutageEstimate outage_perfect_rician_fixed(const SystemParams& p);

// Perfect CSI with channel-inversion power control: outage is 0 or 1
// depending on whether eta rho covers the threshold energy.
OutageEstimate outage_perfect_adapt(const SystemParams& p);

// LS or MMSE estimation, i.i.d. Rayleigh, fixed Ed: the shared closed
// form (Laguerre series, assembled in the log domain). Serves both
// estimators identically.
OutageEstimate outage_rayleigh_est_fixed(const SystemParams& p);

// LS estimation with a line-of-sight component: expectation of a
// conditional Marcum tail over the estimate's marginal.
OutageEstimate outage_ls_rician_fixed(const SystemParams& p,
                                      const ExpectationOptions& opt = {});
OutageEstimate outage_ls_rician_adapt(const SystemParams& p,
                                      const ExpectationOptions& opt = {});

// MMSE estimation with a line-of-sight component: single quadrature over
// the estimate-norm density (scaled-Bessel integrand).
OutageEstimate outage_mmse_rician_fixed(const SystemParams& p);
OutageEstimate outage_mmse_rician_adapt(const SystemParams& p);

// LS / MMSE estimation, i.i.d. Rayleigh, power adaptation: closed forms
// with their stated validity bounds on rho (formula_invalid below them).
OutageEstimate outage_ls_rayleigh_adapt(const SystemParams& p);
OutageEstimate outage_mmse_rayleigh_adapt(const SystemParams& p);

// Perfect CSI over independent, non-identically distributed Rayleigh
// branches, fixed Ed. Requires pairwise-distinct per-antenna path losses;
// refuses (ill_conditioned) when the partial-fraction form cannot hold
// the accuracy contract.
OutageEstimate outage_inid_perfect_fixed(const SystemParams& p);

// Table dispatch. Throws no_closed_form for cells without an analytic
// expression (spatially correlated fading; estimated-CSI i.n.i.d. cells)
// and formula_invalid outside a validity bound.
OutageEstimate analytic_outage(const ScenarioSpec& sc, const SystemParams& p,
                               const ExpectationOptions& opt = {});

}  // namespace wetsim::analytic
