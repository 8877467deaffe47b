#include "fdra/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fdra {

namespace {

struct Search {
  const SlotState* state;
  std::vector<int> ues;
  int win_first, win_size;
  uint32_t occupied = 0;  // bit b set = window offset b taken
  std::vector<Allocation> current, best;
  int64_t current_sum = 0, best_sum = -1;
  int64_t evaluated = 0;

  void recurse(size_t ue_pos) {
    if (ue_pos == ues.size()) {
      ++evaluated;
      if (current_sum > best_sum) {
        best_sum = current_sum;
        best = current;
      }
      return;
    }
    const int ue = ues[ue_pos];
    recurse(ue_pos + 1);  // this UE gets nothing
    for (int start = 0; start < win_size; ++start) {
      uint32_t range_mask = 0;
      for (int len = 1; start + len <= win_size; ++len) {
        range_mask |= 1u << (start + len - 1);
        if (occupied & range_mask) break;  // longer ranges from here collide too
        const int rb_start = win_first + start;
        const int mcs = final_mcs_over(*state->grid, ue, rb_start, len);
        int ri_eff = SeTable::kMaxRank;
        for (int b = rb_start; b < rb_start + len; ++b)
          ri_eff = std::min(ri_eff, state->grid->ri_at(ue, b));
        const int64_t capacity = state->grid->table->rate_for(mcs, ri_eff, len);
        const int64_t tbs = std::min(capacity, state->payloads[ue]);

        occupied |= range_mask;
        current.push_back(Allocation{ue, rb_start, len, mcs, tbs});
        current_sum += tbs;
        recurse(ue_pos + 1);
        current_sum -= tbs;
        current.pop_back();
        occupied &= ~range_mask;
      }
    }
  }
};

}  // namespace

OracleResult optimal_allocation(const SlotState& state, OracleLimits limits) {
  const int k = static_cast<int>(state.remaining_ues.size());
  const int w = state.window.size();
  if (k > limits.max_ues || w > limits.max_rbs) {
    const double per_ue = 1.0 + 0.5 * w * (w + 1);
    throw std::invalid_argument(
        "oracle instance too large: K=" + std::to_string(k) + " B=" + std::to_string(w) +
        " would enumerate ~" + std::to_string(static_cast<long long>(std::pow(per_ue, k))) +
        " assignments");
  }

  Search s;
  s.state = &state;
  s.ues = state.remaining_ues;
  s.win_first = state.window.first;
  s.win_size = w;
  s.recurse(0);

  OracleResult res;
  res.allocations = std::move(s.best);
  res.optimum = std::max<int64_t>(s.best_sum, 0);
  res.evaluated = s.evaluated;
  return res;
}

}  // namespace fdra
