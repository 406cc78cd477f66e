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

#include "mbqc/timing.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mbqc/error.hpp"

namespace mbqc::timing {

void ClockPlan::validate() const {
  if (!(f_p > 0.0) || !std::isfinite(f_p)) throw ContractViolation("photonic frequency must be positive");
  if (!(0.0 < phase_s && phase_s < phase_r && phase_r < 360.0)) {
    throw ContractViolation("clock phases must satisfy 0 < phase_s < phase_r < 360");
  }
}

double period(double f_p) {
  if (!(f_p > 0.0) || !std::isfinite(f_p)) {
    throw ContractViolation("frequency must be positive, got " + std::to_string(f_p));
  }
  return 1.0 / f_p;
}

double delay_line_length(double f_p, const PhotonicParams& params) {
  if (!(params.n_eff >= 1.0)) throw ContractViolation("mode index must be >= 1");
  return params.c * period(f_p) / params.n_eff;
}

double analog_budget(double f_p, double t_logic) {
  const double t = period(f_p);
  if (t_logic < 0.0) throw ContractViolation("logic time must be non-negative");
  if (t_logic >= t) {
    throw InfeasibleBudget("logic time " + std::to_string(t_logic * 1e9) + " ns leaves no analog budget in a " +
                           std::to_string(t * 1e9) + " ns period");
  }
  return t - t_logic;
}

bool LegalityReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const LegalityCheck& c) { return c.ok; });
}

LegalityReport phase_legality(const ClockPlan& plan, const TimingBudget& b) {
  const double t = period(plan.f_p);
  const double xs = plan.phase_s / 360.0 * t;
  const double xr = plan.phase_r / 360.0 * t;
  LegalityReport rep;
  auto add = [&](std::string name, double required, double available, bool extra = true) {
    LegalityCheck c{std::move(name), required, available};
    c.ok = c.margin() >= 0.0 && extra;
    rep.checks.push_back(std::move(c));
  };
  add("input_settle", b.t_co, xs);
  add("internal_window", b.t_internal, xr - xs, xr > xs);
  add("reset_before_next_cycle", b.hold, t - xr);
  add("analog_slack", b.t_co + b.t_su, t - b.t_internal);
  return rep;
}

unsigned long pin_count(unsigned long n_rows, bool serial_byproducts) {
  if (n_rows == 0) throw ContractViolation("pin_count needs at least one row");
  return serial_byproducts ? 2 * n_rows : 4 * n_rows + 4;
}

}  // namespace mbqc::timing
