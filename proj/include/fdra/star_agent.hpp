#ifndef FDRA_STAR_AGENT_HPP
#define FDRA_STAR_AGENT_HPP

#include <cstdint>
#include <vector>

#include "fdra/qnet.hpp"
#include "fdra/sched_core.hpp"

namespace fdra {

struct StarConfig {
  // payloads enter the state divided by this (largest configured packet size)
  double payload_norm = 16664.0;
  // per-RB quality mcs*ri divided by this (largest possible product)
  double quality_norm = 108.0;
  // actions per UE = 2 * half_width + 1; RB count offsets in [-w, +w]
  int half_width = 2;

  int actions_per_ue() const { return 2 * half_width + 1; }
  int num_actions(int num_ues) const { return actions_per_ue() * num_ues; }
};

// Flat state of length K*(B+1): per UE, the normalized remaining payload
// followed by per-RB quality over the remaining window. A UE with nothing
// left to schedule this slot contributes a block of -1 sentinels, as do
// already-consumed RB positions.
std::vector<float> encode_state(const SlotState& state, const StarConfig& cfg);

// Wideband RB demand per UE: n_wb = ceil(payload / wideband per-RB rate).
struct WbInfo {
  int wb_mcs = 0;
  int wb_ri = 1;
  int64_t per_rb_rate = 0;
  int n_wb = 0;
};
std::vector<WbInfo> wideband_infos(const SlotState& state);

struct DecodedAction {
  int ue = -1;
  int n_rbs = 0;
  bool clamped = false;
};

// Action a selects UE a / actions_per_ue and RB count n_wb + a % actions_per_ue
// - half_width, clamped into [1, window size]. Decoding a masked action is a
// contract violation.
DecodedAction decode_action(int a, const SlotState& state, const std::vector<WbInfo>& wb,
                            const StarConfig& cfg);

// valid iff the target UE still has payload this slot and RBs remain
std::vector<uint8_t> valid_action_mask(const SlotState& state, const StarConfig& cfg);

// argmax over valid entries; -1 when nothing is valid; ties -> lowest index
int masked_argmax(const Eigen::VectorXf& q, const std::vector<uint8_t>& mask);

// Greedy Q-network scheduler. Takes RBs from the window front and spends
// exactly one metric call per allocation step (the final-MCS evaluation
// inside apply_decision).
class StarScheduler final : public Scheduler {
 public:
  StarScheduler(QNetwork net, StarConfig cfg);

  std::optional<SchedulerDecision> step(SlotState& state) override;
  std::string name() const override { return "star"; }

  int64_t clamp_events() const { return clamp_events_; }
  const QNetwork& net() const { return net_; }

 private:
  QNetwork net_;
  StarConfig cfg_;
  int64_t clamp_events_ = 0;
};

}  // namespace fdra

#endif
