// SPDX-License-Identifier: Apache-2.0
//
// wetsim: outage analysis for wireless energy transfer from antenna arrays
// Copyright (C) 2026 the wetsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "wetsim/rng.hpp"

#include <cmath>

namespace wetsim::rng {

namespace {
constexpr uint32_t kMul0 = 0xD2511F53u;
constexpr uint32_t kMul1 = 0xCD9E8D57u;
constexpr uint32_t kWeyl0 = 0x9E3779B9u;
constexpr uint32_t kWeyl1 = 0xBB67AE85u;

inline void round_once(std::array<uint32_t, 4>& x, const std::array<uint32_t, 2>& k) {
  const uint64_t p0 = static_cast<uint64_t>(kMul0) * x[0];
  const uint64_t p1 = static_cast<uint64_t>(kMul1) * x[2];
  const uint32_t hi0 = static_cast<uint32_t>(p0 >> 32), lo0 = static_cast<uint32_t>(p0);
  const uint32_t hi1 = static_cast<uint32_t>(p1 >> 32), lo1 = static_cast<uint32_t>(p1);
  x = {hi1 ^ x[1] ^ k[0], lo1, hi0 ^ x[3] ^ k[1], lo0};
}
}  // namespace

std::array<uint32_t, 4> philox4x32(const std::array<uint32_t, 4>& counter,
                                   const std::array<uint32_t, 2>& key) {
  std::array<uint32_t, 4> x = counter;
  std::array<uint32_t, 2> k = key;
  for (int r = 0; r < 10; ++r) {
    round_once(x, k);
    k[0] += kWeyl0;
    k[1] += kWeyl1;
  }
  return x;
}

Stream::Stream(uint64_t seed, uint64_t stream, uint32_t domain)
    : key_{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32)},
      base_{static_cast<uint32_t>(stream), static_cast<uint32_t>(stream >> 32),
            domain, 0} {}

void Stream::refill() {
  std::array<uint32_t, 4> ctr = base_;
  ctr[3] = block_++;
  buf_ = philox4x32(ctr, key_);
  buf_pos_ = 0;
}

double Stream::uniform() {
  if (buf_pos_ >= 4) refill();
  const uint64_t hi = buf_[buf_pos_], lo = buf_[buf_pos_ + 1];
  buf_pos_ += 2;
  const uint64_t bits = (hi << 32) | lo;
  return ((bits >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
}

double Stream::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return normal_spare_;
  }
  const double u1 = uniform(), u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * M_PI * u2;
  normal_spare_ = r * std::sin(t);
  have_spare_ = true;
  return r * std::cos(t);
}

std::complex<double> Stream::cnormal() {
  const double u1 = uniform(), u2 = uniform();
  const double r = std::sqrt(-std::log(u1));  // scaled for variance 1/2 per part
  const double t = 2.0 * M_PI * u2;
  return {r * std::cos(t), r * std::sin(t)};
}

}  // namespace wetsim::rng
