// Copyright 2026 The mbqc-control Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Closed-form timing model of the photonic clock and the controller's clock
// phases. All quantities are SI: seconds, hertz, metres, degrees.

#include <string>
#include <vector>

namespace mbqc::timing {

inline constexpr double kSpeedOfLight = 299792458.0;

struct PhotonicParams {
  double n_eff = 2.4;
  double c = kSpeedOfLight;
};

struct ClockPlan {
  double f_p = 150e6;
  double phase_s = 220.0;
  double phase_r = 300.0;

  double period() const { return 1.0 / f_p; }
  /// Throws ContractViolation unless f_p > 0 and 0 < phase_s < phase_r < 360.
  void validate() const;
};

struct TimingBudget {
  double t_co = 0.0;        // input clock-to-out
  double t_su = 0.0;        // output setup
  double t_internal = 0.0;  // X_s -> X_r logic
  double hold = 0.0;        // required margin after X_r before the next X_p
};

/// 1 / f_p; throws ContractViolation for f_p <= 0.
double period(double f_p);
/// c / (n_eff f_p): fibre needed to hold one photonic period.
double delay_line_length(double f_p, const PhotonicParams& params = {});
/// 1 / f_p - t_logic; throws InfeasibleBudget when t_logic >= 1 / f_p.
double analog_budget(double f_p, double t_logic);

struct LegalityCheck {
  std::string name;
  double required = 0.0;
  double available = 0.0;
  double margin() const { return available - required; }
  bool ok = false;
};

struct LegalityReport {
  std::vector<LegalityCheck> checks;
  bool ok() const;
};

/// (a) X_s after the input settles:    phase_s/360 T >= t_co
/// (b) X_s -> X_r window:              (phase_r - phase_s)/360 T >= t_internal, and > 0
/// (c) X_r before the next X_p:         T - phase_r/360 T >= hold
/// (d) analog delays fit the slack:     t_co + t_su <= T - t_internal
LegalityReport phase_legality(const ClockPlan& plan, const TimingBudget& budget);

/// 4N + 4 pins, or 2N when byproducts are shifted out serially.
unsigned long pin_count(unsigned long n_rows, bool serial_byproducts = false);

}  // namespace mbqc::timing
