#include "fdra/jade.hpp"

#include <algorithm>
#include <stdexcept>

namespace fdra {

JadeCandidate scan_direction(SlotState& state, int ue, bool from_start) {
  if (state.window.empty()) throw std::logic_error("scan over empty window");
  const LinkGrid& grid = *state.grid;
  const int64_t need = state.payload_of(ue);
  const int window_size = state.window.size();

  int64_t cum = 0;
  int n = 0;
  int b = from_start ? state.window.first : state.window.last;
  while (true) {
    cum += grid.rate_at(ue, b);
    state.counters.metric_calls += 1;
    ++n;
    if (cum >= need || n == window_size) break;
    b += from_start ? 1 : -1;
  }

  JadeCandidate c;
  c.ue = ue;
  c.from_start = from_start;
  c.n_rbs = n;
  c.rb_start = from_start ? state.window.first : state.window.last - n + 1;
  c.rate = std::min(cum, need);
  return c;
}

SchedulerDecision jade_step(SlotState& state) {
  if (state.remaining_ues.empty() || state.window.empty())
    throw std::logic_error("jade step on exhausted slot");

  JadeCandidate best;
  bool have_best = false;
  for (int ue : state.remaining_ues) {
    const JadeCandidate start = scan_direction(state, ue, true);
    const JadeCandidate end = scan_direction(state, ue, false);
    const JadeCandidate& chosen = start.n_rbs <= end.n_rbs ? start : end;
    if (!have_best || chosen.rate > best.rate) {
      best = chosen;
      have_best = true;
    }
  }
  return SchedulerDecision{best.ue, best.rb_start, best.n_rbs};
}

std::optional<SchedulerDecision> JadeScheduler::step(SlotState& state) {
  if (state.remaining_ues.empty() || state.window.empty()) return std::nullopt;
  return jade_step(state);
}

}  // namespace fdra
