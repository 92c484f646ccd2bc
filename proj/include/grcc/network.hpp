#pragma once

#include "grcc/types.hpp"

namespace grcc {

// Injection shift factors of the DC power-flow model. Row l gives the
// sensitivity of the flow on branch l (positive in its from->to direction)
// to per-unit injections. Injections at the slack bus have zero effect by
// convention; load columns carry the negated sensitivity since loads
// withdraw power.
struct ShiftFactors {
  MatrixXd m_g;   // lines x generators
  MatrixXd m_w;   // lines x wind farms
  MatrixXd m_d;   // lines x buses (negated injection sensitivity)
  int slack_bus = -1;
};

ShiftFactors build_shift_factors(const PowerCase& pc, int slack_bus);

// Slack resolution order: explicit config override, else the case's slack.
inline ShiftFactors build_shift_factors(const PowerCase& pc, const StudyConfig& cfg) {
  return build_shift_factors(pc, cfg.slack_bus != -1 ? cfg.slack_bus : pc.slack_bus());
}

}  // namespace grcc
