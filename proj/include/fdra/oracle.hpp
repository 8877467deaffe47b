#ifndef FDRA_ORACLE_HPP
#define FDRA_ORACLE_HPP

#include "fdra/sched_core.hpp"

namespace fdra {

struct OracleLimits {
  int max_ues = 3;
  int max_rbs = 8;
};

struct OracleResult {
  std::vector<Allocation> allocations;
  int64_t optimum = 0;
  int64_t evaluated = 0;  // scored interval assignments
};

// Exact solver by exhaustive enumeration of disjoint contiguous RB intervals
// assigned to distinct UEs (a UE may also receive nothing). Intervals may sit
// anywhere inside the window, so the result dominates every window-flush
// scheduler. Scoring matches apply_decision: final MCS flattening and payload
// cap. Deterministic: UEs by index, intervals by (start, length), first
// maximizer kept.
OracleResult optimal_allocation(const SlotState& state, OracleLimits limits = {});

}  // namespace fdra

#endif
