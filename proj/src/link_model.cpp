#include "fdra/link_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fdra/rng.hpp"

namespace fdra {

void LinkModelConfig::validate() const {
  if (coherence_rbs < 1) throw std::invalid_argument("coherence_rbs must be >= 1");
  if (slot_correlation < 0.0 || slot_correlation > 1.0)
    throw std::invalid_argument("slot_correlation must be in [0, 1]");
  if (snr_std_db < 0.0 || fading_std_db < 0.0)
    throw std::invalid_argument("SNR std deviations must be >= 0");
}

LinkModel::LinkModel(const LinkModelConfig& cfg, int num_ues, int num_rbs,
                     const SeTable& table)
    : cfg_(cfg), num_ues_(num_ues), num_rbs_(num_rbs), table_(&table) {
  cfg_.validate();
  if (num_ues < 0 || num_rbs < 0) throw std::invalid_argument("negative grid size");
  num_blocks_ = num_rbs == 0 ? 0 : (num_rbs + cfg_.coherence_rbs - 1) / cfg_.coherence_rbs;
  large_scale_db_.resize(num_ues_);
  for (int k = 0; k < num_ues_; ++k) {
    large_scale_db_[k] =
        cfg_.snr_mean_db +
        cfg_.snr_std_db * counter_normal(cfg_.seed, "large_scale", {static_cast<uint64_t>(k)});
  }
  fading_z_.assign(static_cast<size_t>(num_ues_) * num_blocks_, 0.0);
  rank_z_.assign(static_cast<size_t>(num_ues_) * num_blocks_, 0.0);
  grid_.num_ues = num_ues_;
  grid_.num_rbs = num_rbs_;
  grid_.table = table_;
  grid_.mcs.assign(static_cast<size_t>(num_ues_) * num_rbs_, 0);
  grid_.ri.assign(static_cast<size_t>(num_ues_) * num_rbs_, 1);
  grid_.rate.assign(static_cast<size_t>(num_ues_) * num_rbs_, 0);
}

void LinkModel::step_chain(int slot) {
  const double rho = cfg_.slot_correlation;
  const double innov = std::sqrt(std::max(0.0, 1.0 - rho * rho));
  for (int k = 0; k < num_ues_; ++k) {
    for (int blk = 0; blk < num_blocks_; ++blk) {
      const size_t i = static_cast<size_t>(k) * num_blocks_ + blk;
      const auto keys = {static_cast<uint64_t>(k), static_cast<uint64_t>(blk),
                         static_cast<uint64_t>(slot)};
      const double ef = counter_normal(cfg_.seed, "fading", keys);
      const double er = counter_normal(cfg_.seed, "rank", keys);
      if (slot == 0) {
        fading_z_[i] = ef;
        rank_z_[i] = er;
      } else {
        fading_z_[i] = rho * fading_z_[i] + innov * ef;
        rank_z_[i] = rho * rank_z_[i] + innov * er;
      }
    }
  }
}

void LinkModel::rebuild_grid() {
  for (int k = 0; k < num_ues_; ++k) {
    for (int blk = 0; blk < num_blocks_; ++blk) {
      const size_t i = static_cast<size_t>(k) * num_blocks_ + blk;
      const double snr_db = large_scale_db_[k] + cfg_.fading_std_db * fading_z_[i];
      const int mcs = table_->mcs_for_snr_db(snr_db);
      // map the rank chain through the normal CDF to a near-uniform rank draw
      const double u = 0.5 * std::erfc(-rank_z_[i] * 0.7071067811865475244);
      const int ri = 1 + std::min(3, static_cast<int>(u * 4.0));
      const int64_t rate = table_->per_rb_rate(mcs, ri);
      const int b_lo = blk * cfg_.coherence_rbs;
      const int b_hi = std::min(num_rbs_, b_lo + cfg_.coherence_rbs);
      for (int b = b_lo; b < b_hi; ++b) {
        const int j = grid_.idx(k, b);
        grid_.mcs[j] = mcs;
        grid_.ri[j] = ri;
        grid_.rate[j] = rate;
      }
    }
  }
}

const LinkGrid& LinkModel::advance_to(int slot) {
  if (slot < current_slot_)
    throw std::invalid_argument("link model cannot step backwards");
  while (current_slot_ < slot) {
    ++current_slot_;
    step_chain(current_slot_);
  }
  rebuild_grid();
  return grid_;
}

LinkGrid generate_link_grid(const LinkModelConfig& cfg, int num_ues, int num_rbs,
                            const SeTable& table, int slot) {
  LinkModel model(cfg, num_ues, num_rbs, table);
  return model.advance_to(slot);
}

std::pair<int, int> wideband_summary(const LinkGrid& grid, int ue) {
  const int b_count = grid.num_rbs;
  if (b_count == 0) return {0, 1};
  bool any_zero = false;
  double log_sum = 0.0;
  double ri_sum = 0.0;
  int mcs_lo = SeTable::kNumMcs, mcs_hi = 0;
  int ri_lo = SeTable::kMaxRank, ri_hi = 1;
  for (int b = 0; b < b_count; ++b) {
    const int64_t r = grid.rate_at(ue, b);
    if (r == 0)
      any_zero = true;
    else
      log_sum += std::log(static_cast<double>(r));
    ri_sum += grid.ri_at(ue, b);
    mcs_lo = std::min(mcs_lo, grid.mcs_at(ue, b));
    mcs_hi = std::max(mcs_hi, grid.mcs_at(ue, b));
    ri_lo = std::min(ri_lo, grid.ri_at(ue, b));
    ri_hi = std::max(ri_hi, grid.ri_at(ue, b));
  }
  const double geo = any_zero ? 0.0 : std::exp(log_sum / b_count);
  int wb_ri = static_cast<int>(std::llround(ri_sum / b_count));
  wb_ri = std::clamp(wb_ri, ri_lo, ri_hi);

  int wb_mcs = 0;
  for (int m = grid.table->max_mcs(); m >= 0; --m) {
    if (static_cast<double>(grid.table->per_rb_rate(m, wb_ri)) <= geo) {
      wb_mcs = m;
      break;
    }
  }
  wb_mcs = std::clamp(wb_mcs, mcs_lo, mcs_hi);
  return {wb_mcs, wb_ri};
}

}  // namespace fdra
