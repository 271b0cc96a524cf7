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

#include <array>
#include <complex>
#include <cstdint>

namespace wetsim::rng {

// Philox4x32-10 counter-based block cipher (Salmon et al., SC'11 constants).
// Pure function of (counter, key): any draw is addressable, which is what
// makes Monte Carlo results independent of thread layout.
std::array<uint32_t, 4> philox4x32(const std::array<uint32_t, 4>& counter,
                                   const std::array<uint32_t, 2>& key);

// One logical random stream, identified by (seed, stream, domain). Blocks
// within a stream are consumed sequentially; streams never collide because
// the tuple is embedded in the counter/key words:
//   key     = (seed_lo, seed_hi)
//   counter = (stream_lo, stream_hi, domain, block_index)
// Uniform doubles use 53 bits and lie in (0, 1]; normals come from the
// Box-Muller transform, two per block.
class Stream {
 public:
  Stream(uint64_t seed, uint64_t stream, uint32_t domain);

  double uniform();                    // (0, 1]
  double normal();                     // standard normal
  std::complex<double> cnormal();      // CN(0, 1): Re, Im ~ N(0, 1/2)

 private:
  void refill();
  std::array<uint32_t, 2> key_;
  std::array<uint32_t, 4> base_;
  uint32_t block_ = 0;
  std::array<uint32_t, 4> buf_{};
  int buf_pos_ = 4;       // uint32 lanes consumed
  double normal_spare_ = 0.0;
  bool have_spare_ = false;
};

// Stream domains used by the simulator; fixed so that a given trial sees
// identical channel draws no matter which estimator or phase runs.
inline constexpr uint32_t kDomainChannel = 0;
inline constexpr uint32_t kDomainPilotNoise = 1;
inline constexpr uint32_t kDomainEstimateDraw = 2;

}  // namespace wetsim::rng
