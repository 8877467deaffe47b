#ifndef FDRA_SCHED_CORE_HPP
#define FDRA_SCHED_CORE_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fdra/link_model.hpp"

namespace fdra {

// One scheduling decision: a UE and a contiguous RB range.
struct Allocation {
  int ue = -1;
  int rb_start = 0;
  int rb_count = 0;
  int final_mcs = 0;
  int64_t delivered_tbs = 0;
};

struct ComplexityCounter {
  int64_t metric_calls = 0;      // TBS / cumulative-rate evaluations
  int64_t allocation_steps = 0;
};

// Contiguous free region [first, last]; allocations are only granted flush
// against one of its ends, so the free region stays a single interval.
struct RbWindow {
  int first = 0;
  int last = -1;
  bool empty() const { return first > last; }
  int size() const { return empty() ? 0 : last - first + 1; }
};

struct SlotState {
  std::vector<int> remaining_ues;  // ascending UE indices with pending payload
  RbWindow window;
  std::vector<int64_t> payloads;   // L_k at slot start, indexed by UE
  const LinkGrid* grid = nullptr;
  // when CSI is delayed, delivery is scored against this newer grid
  const LinkGrid* actual_grid = nullptr;
  int slot = 0;
  int total_rbs = 0;
  ComplexityCounter counters;

  static SlotState make(const LinkGrid& grid, std::vector<int64_t> payloads, int slot);

  bool is_remaining(int ue) const;
  void remove_ue(int ue);
  // payload as seen by schedulers: 0 once the UE has been served this slot
  int64_t payload_of(int ue) const;
  int num_ues() const { return static_cast<int>(payloads.size()); }
};

struct SchedulerDecision {
  int ue = -1;
  int rb_start = 0;
  int rb_count = 0;
};

class Scheduler {
 public:
  virtual ~Scheduler() = default;
  // nullopt means the scheduler declines and the slot ends
  virtual std::optional<SchedulerDecision> step(SlotState& state) = 0;
  virtual std::string name() const = 0;
};

struct SlotResult {
  std::vector<Allocation> allocations;
  int64_t sum_tbs = 0;
  double resource_utilization = 0.0;
  ComplexityCounter counters;
};

// Largest MCS whose flattened rate over the range does not exceed the summed
// per-RB rate, using the minimum rank over the range; capped by the largest
// per-RB MCS in the range.
int final_mcs_over(const LinkGrid& grid, int ue, int rb_start, int rb_count);

int64_t sum_metric(const std::vector<Allocation>& allocations);

// Validates the decision (known UE, in-window, flush against a window end),
// computes the final MCS and delivered TBS, and shrinks the window. Contract
// violations throw; nothing is silently clipped. Counts one metric call.
Allocation apply_decision(SlotState& state, const SchedulerDecision& d);

// Runs allocation steps until no UE or RB remains or the scheduler declines.
SlotResult run_slot(SlotState& state, Scheduler& scheduler);

// One CSV row per allocation plus a per-slot summary row (step = -1).
void write_slot_csv_header(std::ostream& out);
void write_slot_csv(std::ostream& out, int slot, const SlotResult& result, int total_rbs);

}  // namespace fdra

#endif
