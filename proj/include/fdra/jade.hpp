#ifndef FDRA_JADE_HPP
#define FDRA_JADE_HPP

#include "fdra/sched_core.hpp"

namespace fdra {

// Candidate produced by scanning RBs inward from one end of the free window.
struct JadeCandidate {
  int ue = -1;
  bool from_start = true;
  int n_rbs = 0;
  int rb_start = 0;
  int64_t rate = 0;  // cumulative rate over the candidate range, capped at the payload
};

// Accumulates RBs one at a time from the chosen window end until the
// cumulative rate covers the UE's payload or the window is exhausted. Every
// cumulative-rate evaluation counts as one metric call.
JadeCandidate scan_direction(SlotState& state, int ue, bool from_start);

// One allocation step: scan both directions for every remaining UE, keep the
// direction needing fewer RBs (ties go to the front), then pick the UE with
// the largest candidate rate (ties go to the lowest UE index).
SchedulerDecision jade_step(SlotState& state);

// Joint allocation with dual ends: greedy payload-exhaustive scheduling that
// compares both ends of the free window to exploit frequency diversity.
class JadeScheduler final : public Scheduler {
 public:
  std::optional<SchedulerDecision> step(SlotState& state) override;
  std::string name() const override { return "jade"; }
};

}  // namespace fdra

#endif
