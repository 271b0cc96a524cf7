// SPDX-License-Identifier: Apache-2.0
//
// wetsim: outage analysis for wireless energy transfer from antenna arrays
// Copyright (C) 2026 the wetsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "wetsim/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "wetsim/channel.hpp"
#include "wetsim/quadrature.hpp"
#include "wetsim/rng.hpp"
#include "wetsim/specfun.hpp"

namespace wetsim::analytic {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

// Streaming log-sum-exp of positive terms given by their logs.
class LogSum {
 public:
  void add(double l) {
    if (l == -kInf) return;
    if (l <= max_) {
      sum_ += std::exp(l - max_);
      return;
    }
    sum_ = sum_ * std::exp(max_ - l) + 1.0;
    max_ = l;
  }
  double log() const { return (sum_ == 0.0) ? -kInf : max_ + std::log(sum_); }
  double max_log() const { return max_; }

 private:
  double max_ = -kInf;
  double sum_ = 0.0;
};

OutageEstimate closed(double p) {
  return {clamp01(p), Method::ClosedForm, 0.0, 0, -1, false};
}

}  // namespace

// ---------------------------------------------------------------------------
// Perfect CSI

OutageEstimate outage_perfect_rician_fixed(const SystemParams& p) {
  p.validate();
  const double kappa = p.threshold() / (p.eta * p.beta * p.Ed);
  if (p.K == 0.0) {
    return closed(specfun::regularized_lower_gamma(p.M, kappa));
  }
  const double a = std::sqrt(2.0 * p.K * p.alpha_sum());
  const double b = std::sqrt(2.0 * (p.K + 1.0) * kappa);
  return closed(specfun::marcum_q_complement(p.M, a, b));
}

OutageEstimate outage_perfect_adapt(const SystemParams& p) {
  p.validate();
  return closed(p.rho >= p.threshold() / p.eta ? 0.0 : 1.0);
}

// ---------------------------------------------------------------------------
// Estimated CSI, i.i.d. Rayleigh, fixed Ed (shared LS/MMSE closed form)

OutageEstimate outage_rayleigh_est_fixed(const SystemParams& p) {
  p.validate();
  if (p.K != 0.0) {
    throw invalid_argument("outage_rayleigh_est_fixed: requires K = 0");
  }
  const double q = p.N0 / (p.beta * p.Eu + p.N0);
  const double t = p.Eu * p.threshold() / (p.eta * p.Ed * p.N0);
  const double kappa = p.threshold() / (p.eta * p.beta * p.Ed);
  const double log_c = std::log1p(-q);               // beta Eu / (beta Eu + N0)
  const double log_eps_last = -std::log1p(-q) ;      // 1 + N0/(beta Eu) = 1/(1-q)
  const double log_q = std::log(q);

  // head sum k = 0..M-1 with the end-correction weight
  const auto lag = specfun::laguerre_log_seq(p.M - 1, -t);  // all positive
  LogSum head;
  for (int k = 0; k < p.M; ++k) {
    double l = k * log_q + lag[k].log_abs;
    if (k == p.M - 1) l += log_eps_last;
    head.add(l);
  }
  const double one_minus_p = std::exp(std::min(0.0, log_c - kappa + head.log()));
  const double p_direct = 1.0 - one_minus_p;
  if (p_direct >= 1e-3) return closed(p_direct);

  // lower-tail route: p = c e^{-kappa} ( sum_{k>=M} q^k L_k(-t)
  //                                      - (N0/(beta Eu)) q^{M-1} L_{M-1}(-t) ),
  // which follows from sum_{k>=0} q^k L_k(-t) = e^{kappa} / c.
  double lm1 = 1.0, l = 1.0 + t, offset = 0.0;  // L_0, L_1 at x = -t
  double log_lkm1 = 0.0;                        // log L_{M-1}
  if (p.M == 1) log_lkm1 = 0.0;
  for (int j = 1; j < p.M; ++j) {
    const double lp1 = ((2.0 * j + 1.0 + t) * l - j * lm1) / (j + 1.0);
    lm1 = l;
    l = lp1;
    if (l > 1e270) {
      l *= 1e-270;
      lm1 *= 1e-270;
      offset += std::log(1e270);
    }
  }
  // here lm1 = L_{M-1}, l = L_M (scaled by e^{-offset})
  log_lkm1 = std::log(lm1) + offset;
  LogSum tail;
  double best = -kInf;
  bool converged = false;
  for (long long k = p.M; k < 300000000LL; ++k) {
    const double lterm = k * log_q + std::log(l) + offset;
    tail.add(lterm);
    best = std::max(best, lterm);
    if (lterm < best - 42.0) {
      converged = true;
      break;
    }
    const double lp1 = ((2.0 * k + 1.0 + t) * l - k * lm1) / (k + 1.0);
    lm1 = l;
    l = lp1;
    if (l > 1e270) {
      l *= 1e-270;
      lm1 *= 1e-270;
      offset += std::log(1e270);
    }
  }
  if (!converged) {
    throw numeric_failure(
        "outage_rayleigh_est_fixed: series tail did not converge to the "
        "accuracy contract at these parameters");
  }
  const double log_tail = tail.log();
  const double log_corr = std::log(q / (1.0 - q)) + (p.M - 1) * log_q + log_lkm1;
  if (log_corr >= log_tail) return closed(0.0);
  const double log_p =
      log_c - kappa + log_tail + std::log1p(-std::exp(log_corr - log_tail));
  return closed(std::exp(log_p));
}

// ---------------------------------------------------------------------------
// LS with line-of-sight: expectation over the estimate's Gaussian marginal

namespace {

OutageEstimate ls_rician_expectation(const SystemParams& p, Power power,
                                     const ExpectationOptions& opt) {
  p.validate();
  if (p.K <= 0.0) {
    throw invalid_argument("LS line-of-sight evaluation requires K > 0");
  }
  if (opt.n_outer < 2) throw invalid_argument("n_outer must be >= 2");
  const double D = p.beta * p.Eu + (p.K + 1.0) * p.N0;
  const double sig = std::sqrt(D / (p.Eu * (p.K + 1.0)));  // marginal std/entry
  const channel::VectorXcd mu = channel::rician_spec(p).mu;
  const double mean_ls_w = p.beta * p.Eu / D;       // weight on ||h_hat||
  const double mean_mu_w = (p.K + 1.0) * p.N0 / D;  // weight on h_hat^H mu term
  const double var = p.beta * p.N0 / D;
  const double b_fixed =
      std::sqrt(2.0 * p.threshold() * D / (p.eta * p.beta * p.Ed * p.N0));
  const double b_adapt_scale =
      std::sqrt(2.0 * p.threshold() * D / (p.eta * p.beta * p.rho * p.N0));

  std::vector<std::complex<double>> hhat(p.M);
  double acc = 0.0, acc2 = 0.0;
  for (long long i = 0; i < opt.n_outer; ++i) {
    rng::Stream stream(opt.seed, static_cast<uint64_t>(i),
                       rng::kDomainEstimateDraw);
    double norm2 = 0.0;
    std::complex<double> hm = 0.0;
    for (int j = 0; j < p.M; ++j) {
      const std::complex<double> v = mu(j) + sig * stream.cnormal();
      norm2 += std::norm(v);
      hm += std::conj(v) * mu(j);
    }
    const double norm = std::sqrt(norm2);
    const std::complex<double> mean = mean_ls_w * norm + mean_mu_w * hm / norm;
    const double a = std::sqrt(2.0 * std::norm(mean) / var);
    const double b = (power == Power::Fixed) ? b_fixed : b_adapt_scale * norm;
    const double v = specfun::marcum_q_complement(1, a, b);
    acc += v;
    acc2 += v * v;
  }
  const double n = static_cast<double>(opt.n_outer);
  const double mean_p = acc / n;
  const double var_p = std::max(0.0, acc2 / n - mean_p * mean_p) * n / (n - 1.0);
  OutageEstimate out;
  out.p = clamp01(mean_p);
  out.method = Method::ExpectationMc;
  out.std_err = std::sqrt(var_p / n);
  out.n_samples = opt.n_outer;
  return out;
}

}  // namespace

OutageEstimate outage_ls_rician_fixed(const SystemParams& p,
                                      const ExpectationOptions& opt) {
  return ls_rician_expectation(p, Power::Fixed, opt);
}

OutageEstimate outage_ls_rician_adapt(const SystemParams& p,
                                      const ExpectationOptions& opt) {
  return ls_rician_expectation(p, Power::Adapt, opt);
}

// ---------------------------------------------------------------------------
// MMSE with line-of-sight: single quadrature over the estimate-norm density

namespace {

OutageEstimate mmse_rician_quadrature(const SystemParams& p, Power power) {
  p.validate();
  if (p.K <= 0.0) {
    throw invalid_argument("MMSE line-of-sight evaluation requires K > 0");
  }
  const double D = p.beta * p.Eu + (p.K + 1.0) * p.N0;
  const double suma = p.alpha_sum();
  const double lam = D / (p.beta * p.beta * p.Eu);
  const double c = 2.0 * lam * std::sqrt(p.beta * p.K * (p.K + 1.0) * suma);
  const double lam0 = 2.0 * D / (p.beta * p.N0);
  const double sqrt_lam0 = std::sqrt(lam0);
  const double kp1 = p.K + 1.0;
  const double center = std::sqrt(p.K * p.beta * suma / kp1);
  const double sigma = 1.0 / std::sqrt(2.0 * lam * kp1);
  const double log_norm = std::log(2.0 * lam) + 0.5 * (p.M + 1) * std::log(kp1) -
                          0.5 * (p.M - 1) * std::log(p.K * p.beta * suma);
  const int order = p.M - 1;

  auto log_f = [&](double y) -> double {
    if (y <= 0.0) return -kInf;
    const double d = std::sqrt(kp1) * y - std::sqrt(p.K * p.beta * suma);
    return log_norm + p.M * std::log(y) - lam * d * d +
           specfun::log_bessel_i_scaled(order, c * y);
  };

  const double b_fixed = std::sqrt(lam0 * p.threshold() / (p.eta * p.Ed));
  const double b_adapt = std::sqrt(lam0 * p.threshold() / (p.eta * p.rho));
  auto inner = [&](double y) -> double {
    const double b = (power == Power::Fixed) ? b_fixed : b_adapt * y;
    return specfun::marcum_q_complement(1, sqrt_lam0 * y, b);
  };

  // localize the density bump, then integrate f * inner in scaled form
  double lo = std::max(sigma * 1e-12, center - 14.0 * sigma);
  double hi = center + (14.0 + 2.0 * std::sqrt(static_cast<double>(p.M))) * sigma;
  double lmax = -kInf;
  for (int i = 0; i <= 400; ++i) {
    lmax = std::max(lmax, log_f(lo + (hi - lo) * i / 400.0));
  }
  for (int i = 0; i < 600 && log_f(hi) > lmax - 46.0; ++i) hi += 2.0 * sigma;
  for (int i = 0; i < 600 && lo > sigma * 1e-12 && log_f(lo) > lmax - 46.0; ++i) {
    lo = std::max(sigma * 1e-12, lo - 2.0 * sigma);
  }

  std::vector<double> pts;
  for (int i = 0; i <= 12; ++i) pts.push_back(lo + (hi - lo) * i / 12.0);
  if (power == Power::Fixed) {
    const double y_step = b_fixed / sqrt_lam0;  // inner tail switches here
    if (y_step > lo && y_step < hi) pts.push_back(y_step);
  }
  std::sort(pts.begin(), pts.end());

  const double shift = lmax;
  auto integrand = [&](double y) -> double {
    const double lf = log_f(y);
    if (lf - shift < -745.0) return 0.0;
    const double w = inner(y);
    return (w == 0.0) ? 0.0 : std::exp(lf - shift) * w;
  };
  auto res = quad::integrate_segments(integrand, pts, 1e-10, 1e-320, 8000);
  if (!res.converged) {
    throw numeric_failure("MMSE quadrature did not converge");
  }
  OutageEstimate out;
  out.p = clamp01(res.value * std::exp(shift));
  out.method = Method::Quadrature;
  return out;
}

}  // namespace

OutageEstimate outage_mmse_rician_fixed(const SystemParams& p) {
  return mmse_rician_quadrature(p, Power::Fixed);
}

OutageEstimate outage_mmse_rician_adapt(const SystemParams& p) {
  return mmse_rician_quadrature(p, Power::Adapt);
}

// ---------------------------------------------------------------------------
// Estimated CSI, i.i.d. Rayleigh, power adaptation (closed forms)

namespace {

struct AdaptConstants {
  long double kap, mu, a2, b2, p;
};

// chi = u - sqrt(u^2 - 1) for u derived from (a^2, b^2, extra), written
// so that small u - 1 never cancels.
struct Chi {
  long double chi, one_minus_chi2;
};

Chi chi_from(long double a2, long double b2, long double extra) {
  const long double a = sqrtl(a2), b = sqrtl(b2);
  const long double ab2 = 2.0L * a * b;
  const long double delta = ((a - b) * (a - b) + extra) / ab2;  // u - 1
  const long double s = sqrtl(delta * (delta + 2.0L));          // sqrt(u^2-1)
  const long double chi = 1.0L + delta - s;
  const long double one_minus = s - delta;  // 1 - chi
  return {chi, one_minus * (2.0L + delta - s)};
}

double adapt_closed_form(int M, const AdaptConstants& cst) {
  const Chi c1 = chi_from(cst.a2, cst.b2, 0.0L);
  const Chi c2 = chi_from(cst.a2, cst.b2, 2.0L * cst.p);
  const long double x2 = c2.chi, d2 = c2.one_minus_chi2;
  const long double ratio = d2 / (x2 * x2);

  long double total = 0.0L;
  // outer factor (2/mu)^{n-1} x2^{3n-2} / (1-x2^2)^{2n-1}
  long double outer = x2 / d2;
  for (int n = 1; n <= M; ++n) {
    // inner sum over c with binomials by multiplicative recurrence
    long double b_big = 1.0L;  // C(2n-c-2, n-1) at c = 0 -> C(2n-2, n-1)
    for (int i = 1; i <= n - 1; ++i) b_big *= (static_cast<long double>(n - 1 + i)) / i;
    long double b_nm1 = 1.0L;  // C(n-1, c)
    long double b_n = 1.0L;    // C(n, c)
    long double rpow = 1.0L;   // ratio^c
    long double inner = 0.0L;
    for (int cc = 0; cc <= n - 1; ++cc) {
      inner += b_big * rpow * (cst.kap * b_nm1 - x2 * b_n);
      if (cc == n - 1) break;
      b_big *= static_cast<long double>(n - cc - 1) / (2 * n - cc - 2);
      b_nm1 *= static_cast<long double>(n - 1 - cc) / (cc + 1);
      b_n *= static_cast<long double>(n - cc) / (cc + 1);
      rpow *= ratio;
    }
    total += outer * inner;
    outer *= (2.0L / cst.mu) * x2 * x2 * x2 / (d2 * d2);
  }
  total -= c1.chi * (cst.kap - c1.chi) / c1.one_minus_chi2;
  double out = static_cast<double>(total);
  if (out < -1e-6 || out > 1.0 + 1e-6) {
    throw numeric_failure(
        "adaptation closed form lost precision at these parameters");
  }
  return clamp01(out);
}

}  // namespace

OutageEstimate outage_ls_rayleigh_adapt(const SystemParams& p) {
  p.validate();
  if (p.K != 0.0) {
    throw invalid_argument("outage_ls_rayleigh_adapt: requires K = 0");
  }
  const long double bEu = static_cast<long double>(p.beta) * p.Eu;
  const long double ratio = (bEu + p.N0) / bEu;
  const long double bound = static_cast<long double>(p.threshold()) / p.eta * ratio * ratio;
  if (p.rho < static_cast<double>(bound)) {
    throw formula_invalid(
        "rho below the validity bound of the LS adaptation closed form; "
        "use the protocol simulator");
  }
  const long double root = sqrtl(static_cast<long double>(p.threshold()) / (p.eta * p.rho));
  AdaptConstants cst;
  cst.kap = ratio * root;
  cst.mu = 2.0L * (bEu + p.N0) / p.N0 * root;
  cst.a2 = 2.0L * p.Eu / p.N0 * bEu / (bEu + p.N0);
  cst.b2 = 2.0L * (bEu + p.N0) / p.N0 * p.threshold() / (p.eta * p.beta * p.rho);
  cst.p = static_cast<long double>(p.Eu) / (bEu + p.N0);
  if (p.M > 150) {
    throw numeric_failure("adaptation closed form limited to M <= 150");
  }
  return closed(adapt_closed_form(p.M, cst));
}

OutageEstimate outage_mmse_rayleigh_adapt(const SystemParams& p) {
  p.validate();
  if (p.K != 0.0) {
    throw invalid_argument("outage_mmse_rayleigh_adapt: requires K = 0");
  }
  if (p.rho < p.threshold() / p.eta) {
    throw formula_invalid(
        "rho below the validity bound of the MMSE adaptation closed form; "
        "use the protocol simulator");
  }
  const long double bEu = static_cast<long double>(p.beta) * p.Eu;
  const long double root = sqrtl(static_cast<long double>(p.threshold()) / (p.eta * p.rho));
  AdaptConstants cst;
  cst.kap = root;
  cst.mu = 2.0L * bEu / p.N0 * root;
  cst.a2 = 2.0L * (bEu + p.N0) / (p.beta * p.N0);
  cst.b2 = 2.0L * (bEu + p.N0) / p.N0 * p.threshold() / (p.eta * p.beta * p.rho);
  cst.p = (bEu + p.N0) / (static_cast<long double>(p.beta) * bEu);
  if (p.M > 150) {
    throw numeric_failure("adaptation closed form limited to M <= 150");
  }
  return closed(adapt_closed_form(p.M, cst));
}

// ---------------------------------------------------------------------------
// Perfect CSI over i.n.i.d. branches (partial-fraction form)

OutageEstimate outage_inid_perfect_fixed(const SystemParams& p) {
  p.validate();
  if (static_cast<int>(p.betas.size()) != p.M) {
    throw invalid_argument("i.n.i.d. evaluation needs M per-antenna path losses");
  }
  for (int j = 0; j < p.M; ++j) {
    for (int k = j + 1; k < p.M; ++k) {
      const double gap = std::abs(p.betas[j] - p.betas[k]) /
                         std::max(p.betas[j], p.betas[k]);
      if (gap <= 1e-6) {
        throw ill_conditioned(
            "near-equal per-antenna path losses; the partial-fraction form "
            "is numerically explosive, use the protocol simulator");
      }
    }
  }
  const long double tau = static_cast<long double>(p.threshold()) / p.eta / p.Ed;
  long double sum = 0.0L, max_abs = 0.0L;
  for (int j = 0; j < p.M; ++j) {
    const long double bj = p.betas[j];
    long double term = -expm1l(-tau / bj);
    for (int i = 0; i < p.M - 1; ++i) term *= bj;
    for (int k = 0; k < p.M; ++k) {
      if (k != j) term /= (bj - static_cast<long double>(p.betas[k]));
    }
    sum += term;
    max_abs = std::max(max_abs, fabsl(term));
  }
  // forward-error estimate of the alternating partial-fraction sum
  const long double denom = std::max(fabsl(sum), static_cast<long double>(1e-300));
  if (max_abs / denom * 1e-18L * p.M > 1e-4L) {
    throw ill_conditioned(
        "partial-fraction cancellation exceeds the accuracy contract; "
        "use the protocol simulator");
  }
  return closed(static_cast<double>(sum));
}

// ---------------------------------------------------------------------------

OutageEstimate analytic_outage(const ScenarioSpec& sc, const SystemParams& p,
                               const ExpectationOptions& opt) {
  p.validate();
  if (sc.fading == Fading::CorrelatedRayleigh && std::abs(p.corr) > 0.0) {
    throw no_closed_form(
        "no analytic expression for spatially correlated fading; use the "
        "protocol simulator");
  }
  if (sc.fading == Fading::InidRayleigh) {
    if (sc.csi == Csi::Perfect && sc.power == Power::Fixed) {
      return outage_inid_perfect_fixed(p);
    }
    throw no_closed_form(
        "i.n.i.d. fading only has an analytic form for perfect CSI at fixed "
        "Ed; use the protocol simulator");
  }
  if (sc.fading == Fading::IidRayleigh && p.K != 0.0) {
    throw invalid_argument("fading=rayleigh requires K = 0; use fading=rician");
  }
  const bool rician = sc.fading == Fading::Rician && p.K > 0.0;
  if (sc.power == Power::Fixed) {
    switch (sc.csi) {
      case Csi::Perfect:
        return outage_perfect_rician_fixed(p);
      case Csi::Ls:
        return rician ? outage_ls_rician_fixed(p, opt)
                      : outage_rayleigh_est_fixed(p);
      case Csi::Mmse:
        return rician ? outage_mmse_rician_fixed(p)
                      : outage_rayleigh_est_fixed(p);
    }
  } else {
    switch (sc.csi) {
      case Csi::Perfect:
        return outage_perfect_adapt(p);
      case Csi::Ls:
        return rician ? outage_ls_rician_adapt(p, opt)
                      : outage_ls_rayleigh_adapt(p);
      case Csi::Mmse:
        return rician ? outage_mmse_rician_adapt(p)
                      : outage_mmse_rayleigh_adapt(p);
    }
  }
  throw invalid_argument("unknown scenario");
}

}  // namespace wetsim::analytic
