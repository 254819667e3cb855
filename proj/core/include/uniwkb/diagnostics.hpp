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

#ifndef UNIWKB_DIAGNOSTICS_HPP_
#define UNIWKB_DIAGNOSTICS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uniwkb/spectrum.hpp"

namespace uniwkb {

struct DiagnosticsRecord {
  double k = 0.0;
  int l = 0;
  int n = 0;
  double e_app = 0.0;        // <H>
  double e_prime_app = 0.0;  // sqrt(<H^2>)
  double d = 0.0;
  double v = 0.0;
  double e_ex = 0.0;
  double delta_e = 0.0;
  double e_spectral = 0.0;   // root of the quantization condition
  double slope_jump = 0.0;   // largest relative dPsi/dq jump at q_minus, q_plus
};

/// The integrals behind every metric, from a single pass over the state.
struct StateMoments {
  double norm = 0.0;       // <psi|psi>
  double h1 = 0.0;         // <psi|H psi>
  double h2 = 0.0;         // <H psi|H psi>
  double kinetic = 0.0;    // int psi'^2 + l(l+1) psi^2 / x^2
  double potential = 0.0;  // int (k/2) x^k psi^2
};

StateMoments state_moments(const Eigenstate& st);

double expectation_e(const Eigenstate& st);
double expectation_e_prime(const Eigenstate& st);
/// e_app / e'_app - 1.
double discrepancy(const Eigenstate& st);
/// <kinetic + centrifugal> / <(k/2) x^k> - 1.
double virial_error(const Eigenstate& st);
/// e_app / e_ex - 1; throws DomainError when e_ex == 0.
double energy_error(double e_app, double e_ex);
double energy_error(const Eigenstate& st, double e_ex);

/// Every metric for a normalized state against a known exact energy.
DiagnosticsRecord diagnose(const Eigenstate& st, double e_ex);

/// Solve, normalize and diagnose level (k, l, n) with the default
/// substitution; e_ex comes from best_reference.
DiagnosticsRecord table1_row(double k, int l, int n);

/// One printed row of the embedded reference table; empty cells are absent.
struct Table1Entry {
  double k = 0.0;
  int l = 0;
  int n = 0;
  std::optional<double> v;
  std::optional<double> d;
  std::optional<double> e_ex;
  std::optional<double> delta_e;
  std::optional<double> delta_e_loba;
};

std::vector<Table1Entry> parse_table1_csv(std::string_view text);
/// The 26 embedded rows.
const std::vector<Table1Entry>& table1_reference();

struct TableTolerances {
  double relative = 0.10;   // v, d, delta_e
  double e_ex_abs = 1e-4;
  double zero_abs = 1e-8;   // cells printed as exactly zero
};

struct CellComparison {
  std::string name;
  double computed = 0.0;
  double reference = 0.0;
  double deviation = 0.0;  // relative, or absolute for zero and e_ex cells
  bool pass = false;
};

std::vector<CellComparison> compare_row(const DiagnosticsRecord& rec,
                                        const Table1Entry& ref,
                                        const TableTolerances& tol = {});

}  // namespace uniwkb

#endif  // UNIWKB_DIAGNOSTICS_HPP_
