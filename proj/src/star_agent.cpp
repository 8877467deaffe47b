#include "fdra/star_agent.hpp"

#include <algorithm>
#include <stdexcept>

namespace fdra {

std::vector<float> encode_state(const SlotState& state, const StarConfig& cfg) {
  const int k_count = state.num_ues();
  const int b_count = state.total_rbs;
  std::vector<float> s(static_cast<size_t>(k_count) * (b_count + 1), -1.0f);
  for (int k = 0; k < k_count; ++k) {
    const int64_t payload = state.payload_of(k);
    if (payload <= 0) continue;
    const size_t base = static_cast<size_t>(k) * (b_count + 1);
    s[base] = static_cast<float>(payload / cfg.payload_norm);
    for (int b = state.window.first; b <= state.window.last; ++b)
      s[base + 1 + b] = static_cast<float>(state.grid->quality(k, b) / cfg.quality_norm);
  }
  return s;
}

std::vector<WbInfo> wideband_infos(const SlotState& state) {
  std::vector<WbInfo> out(state.num_ues());
  for (int k = 0; k < state.num_ues(); ++k) {
    const int64_t payload = state.payload_of(k);
    if (payload <= 0) continue;
    WbInfo& info = out[k];
    const auto [wb_mcs, wb_ri] = wideband_summary(*state.grid, k);
    info.wb_mcs = wb_mcs;
    info.wb_ri = wb_ri;
    info.per_rb_rate = state.grid->table->per_rb_rate(wb_mcs, wb_ri);
    if (info.per_rb_rate > 0)
      info.n_wb = static_cast<int>((payload + info.per_rb_rate - 1) / info.per_rb_rate);
    else
      info.n_wb = std::max(1, state.window.size());  // undecodable wideband: ask for everything
  }
  return out;
}

DecodedAction decode_action(int a, const SlotState& state, const std::vector<WbInfo>& wb,
                            const StarConfig& cfg) {
  const int per = cfg.actions_per_ue();
  if (a < 0 || a >= cfg.num_actions(state.num_ues()))
    throw std::out_of_range("action index out of range");
  const int ue = a / per;
  const int offset = a % per;
  if (state.payload_of(ue) <= 0 || state.window.empty())
    throw std::logic_error("decoded a masked action");
  const int raw = wb[ue].n_wb + offset - cfg.half_width;
  const int n = std::clamp(raw, 1, state.window.size());
  return DecodedAction{ue, n, n != raw};
}

std::vector<uint8_t> valid_action_mask(const SlotState& state, const StarConfig& cfg) {
  const int per = cfg.actions_per_ue();
  std::vector<uint8_t> mask(cfg.num_actions(state.num_ues()), 0);
  if (state.window.empty()) return mask;
  for (int k = 0; k < state.num_ues(); ++k) {
    if (state.payload_of(k) > 0)
      std::fill_n(mask.begin() + static_cast<size_t>(k) * per, per, uint8_t{1});
  }
  return mask;
}

int masked_argmax(const Eigen::VectorXf& q, const std::vector<uint8_t>& mask) {
  if (static_cast<size_t>(q.size()) != mask.size())
    throw std::invalid_argument("mask length must match q length");
  int best = -1;
  float best_q = 0.0f;
  for (int i = 0; i < q.size(); ++i) {
    if (!mask[i]) continue;
    if (best < 0 || q[i] > best_q) {
      best = i;
      best_q = q[i];
    }
  }
  return best;
}

StarScheduler::StarScheduler(QNetwork net, StarConfig cfg)
    : net_(std::move(net)), cfg_(cfg) {}

std::optional<SchedulerDecision> StarScheduler::step(SlotState& state) {
  const auto mask = valid_action_mask(state, cfg_);
  const auto s = encode_state(state, cfg_);
  if (static_cast<int>(s.size()) != net_.input_size())
    throw std::runtime_error("state dimension does not match network input");
  if (cfg_.num_actions(state.num_ues()) != net_.output_size())
    throw std::runtime_error("action count does not match network output");

  const Eigen::VectorXf x =
      Eigen::Map<const Eigen::VectorXf>(s.data(), static_cast<Eigen::Index>(s.size()));
  const Eigen::VectorXf q = net_.forward(x);
  const int a = masked_argmax(q, mask);
  if (a < 0) return std::nullopt;

  const auto wb = wideband_infos(state);
  const DecodedAction d = decode_action(a, state, wb, cfg_);
  if (d.clamped) ++clamp_events_;
  return SchedulerDecision{d.ue, state.window.first, d.n_rbs};
}

}  // namespace fdra
