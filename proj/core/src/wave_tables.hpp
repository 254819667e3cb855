// Copyright 2026 The uniwkb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UNIWKB_SRC_WAVE_TABLES_HPP_
#define UNIWKB_SRC_WAVE_TABLES_HPP_

#include <memory>
#include <vector>

#include "uniwkb/airy.hpp"
#include "uniwkb/spectrum.hpp"
#include "uniwkb/wavefunction.hpp"

namespace uniwkb::detail {

// Cumulative integrals of the log-derivative on an increasing node grid.
struct RegionTable {
  std::vector<double> q;
  std::vector<complex> cum;
};

struct WaveTables {
  // Inner region: cum = int_q^{q_minus} (Y(t0) - kappa/q') dq'.
  RegionTable inner;
  // Allowed region: cum = int_{q_minus}^q Y_eps dq'.
  RegionTable allowed;
  // Outer region: cum = int_{q_plus}^q Y(0) dq'.
  RegionTable outer;
  double kappa = 0.0;
  double q_floor = 0.0;
  double q_cut = 0.0;
  double log_amplitude = 0.0;
  double phase_at_q_plus = 0.0;
};

std::shared_ptr<const WaveTables> build_wave_tables(const Eigenstate& st);

// Sample at q (rather than x) for integrals carried out in q.
WaveSample sample_at_q(const Eigenstate& st, double q);

// 0, every cached node below q_end, and q_end.
std::vector<double> quadrature_breaks(const Eigenstate& st, double q_end);

}  // namespace uniwkb::detail

#endif  // UNIWKB_SRC_WAVE_TABLES_HPP_
