#include "fdra/sched_core.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace fdra {

SlotState SlotState::make(const LinkGrid& grid, std::vector<int64_t> payloads, int slot) {
  if (static_cast<int>(payloads.size()) != grid.num_ues)
    throw std::invalid_argument("payload vector size must match grid UE count");
  SlotState st;
  st.payloads = std::move(payloads);
  st.grid = &grid;
  st.slot = slot;
  st.total_rbs = grid.num_rbs;
  st.window = RbWindow{0, grid.num_rbs - 1};
  for (int k = 0; k < grid.num_ues; ++k) {
    if (st.payloads[k] < 0) throw std::invalid_argument("negative payload");
    if (st.payloads[k] > 0) st.remaining_ues.push_back(k);
  }
  return st;
}

bool SlotState::is_remaining(int ue) const {
  return std::binary_search(remaining_ues.begin(), remaining_ues.end(), ue);
}

void SlotState::remove_ue(int ue) {
  auto it = std::lower_bound(remaining_ues.begin(), remaining_ues.end(), ue);
  if (it == remaining_ues.end() || *it != ue)
    throw std::logic_error("UE not in remaining set");
  remaining_ues.erase(it);
}

int64_t SlotState::payload_of(int ue) const {
  if (ue < 0 || ue >= num_ues()) throw std::out_of_range("ue out of range");
  return is_remaining(ue) ? payloads[ue] : 0;
}

namespace {

struct RangeStats {
  int ri_eff;
  int mcs_max;
  int64_t rate_sum;
};

RangeStats range_stats(const LinkGrid& grid, int ue, int rb_start, int rb_count) {
  RangeStats s{SeTable::kMaxRank, 0, 0};
  for (int b = rb_start; b < rb_start + rb_count; ++b) {
    s.ri_eff = std::min(s.ri_eff, grid.ri_at(ue, b));
    s.mcs_max = std::max(s.mcs_max, grid.mcs_at(ue, b));
    s.rate_sum += grid.rate_at(ue, b);
  }
  return s;
}

}  // namespace

int final_mcs_over(const LinkGrid& grid, int ue, int rb_start, int rb_count) {
  if (rb_count < 1) throw std::invalid_argument("final MCS over empty RB range");
  if (ue < 0 || ue >= grid.num_ues) throw std::out_of_range("ue out of range");
  if (rb_start < 0 || rb_start + rb_count > grid.num_rbs)
    throw std::out_of_range("RB range outside BWP");
  const RangeStats s = range_stats(grid, ue, rb_start, rb_count);
  for (int m = s.mcs_max; m >= 1; --m) {
    if (grid.table->rate_for(m, s.ri_eff, rb_count) <= s.rate_sum) return m;
  }
  return 0;
}

int64_t sum_metric(const std::vector<Allocation>& allocations) {
  int64_t sum = 0;
  for (const Allocation& a : allocations) sum += a.delivered_tbs;
  return sum;
}

Allocation apply_decision(SlotState& state, const SchedulerDecision& d) {
  if (!state.is_remaining(d.ue))
    throw std::logic_error("scheduler selected a UE outside the remaining set");
  if (state.window.empty()) throw std::logic_error("allocation with empty RB window");
  if (d.rb_count < 1 || d.rb_count > state.window.size())
    throw std::logic_error("RB count outside the remaining window");
  const int rb_end = d.rb_start + d.rb_count - 1;
  if (d.rb_start < state.window.first || rb_end > state.window.last)
    throw std::logic_error("RB range outside the remaining window");
  const bool at_front = d.rb_start == state.window.first;
  const bool at_back = rb_end == state.window.last;
  if (!at_front && !at_back)
    throw std::logic_error("RB range must be flush against a window end");

  const int mcs = final_mcs_over(*state.grid, d.ue, d.rb_start, d.rb_count);
  state.counters.metric_calls += 1;
  const RangeStats s = range_stats(*state.grid, d.ue, d.rb_start, d.rb_count);
  int64_t capacity = state.grid->table->rate_for(mcs, s.ri_eff, d.rb_count);
  if (state.actual_grid) {
    // stale CSI: the link only carries what the true channel supports
    int64_t actual = 0;
    for (int b = d.rb_start; b <= rb_end; ++b) actual += state.actual_grid->rate_at(d.ue, b);
    capacity = std::min(capacity, actual);
  }
  const int64_t tbs = std::min(capacity, state.payloads[d.ue]);

  if (at_front)
    state.window.first += d.rb_count;
  else
    state.window.last -= d.rb_count;
  state.remove_ue(d.ue);
  state.counters.allocation_steps += 1;

  return Allocation{d.ue, d.rb_start, d.rb_count, mcs, tbs};
}

SlotResult run_slot(SlotState& state, Scheduler& scheduler) {
  SlotResult res;
  while (!state.remaining_ues.empty() && !state.window.empty()) {
    auto d = scheduler.step(state);
    if (!d) break;
    res.allocations.push_back(apply_decision(state, *d));
  }
  res.sum_tbs = sum_metric(res.allocations);
  int consumed = 0;
  for (const Allocation& a : res.allocations) consumed += a.rb_count;
  res.resource_utilization =
      state.total_rbs == 0 ? 0.0 : static_cast<double>(consumed) / state.total_rbs;
  res.counters = state.counters;
  return res;
}

void write_slot_csv_header(std::ostream& out) {
  out << "slot,step,ue,rb_start,rb_count,mcs,tbs,utilization,metric_calls\n";
}

void write_slot_csv(std::ostream& out, int slot, const SlotResult& result, int total_rbs) {
  int step = 0;
  int consumed = 0;
  for (const Allocation& a : result.allocations) {
    out << slot << ',' << step++ << ',' << a.ue << ',' << a.rb_start << ','
        << a.rb_count << ',' << a.final_mcs << ',' << a.delivered_tbs << ",,\n";
    consumed += a.rb_count;
  }
  char util[32];
  std::snprintf(util, sizeof util, "%.6f",
                total_rbs == 0 ? 0.0 : static_cast<double>(consumed) / total_rbs);
  out << slot << ",-1,-1,-1," << consumed << ",-1," << result.sum_tbs << ','
      << util << ',' << result.counters.metric_calls << '\n';
}

}  // namespace fdra
