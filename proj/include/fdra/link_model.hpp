#ifndef FDRA_LINK_MODEL_HPP
#define FDRA_LINK_MODEL_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "fdra/se_table.hpp"

namespace fdra {

// Per-UE, per-RB link quality for one slot.
struct LinkGrid {
  int num_ues = 0;
  int num_rbs = 0;
  std::vector<int> mcs;       // K*B, row-major by UE
  std::vector<int> ri;        // rank in [1, 4]
  std::vector<int64_t> rate;  // bits per slot on that RB
  const SeTable* table = nullptr;

  int idx(int ue, int rb) const { return ue * num_rbs + rb; }
  int mcs_at(int ue, int rb) const { return mcs[idx(ue, rb)]; }
  int ri_at(int ue, int rb) const { return ri[idx(ue, rb)]; }
  int64_t rate_at(int ue, int rb) const { return rate[idx(ue, rb)]; }
  // quality used in agent states
  int quality(int ue, int rb) const { return mcs_at(ue, rb) * ri_at(ue, rb); }
};

struct LinkModelConfig {
  uint64_t seed = 1;
  int coherence_rbs = 10;        // quality is block-constant over this many RBs
  double snr_mean_db = 14.0;     // per-UE large-scale SNR distribution
  double snr_std_db = 4.0;
  double fading_std_db = 4.0;    // per-block small-scale component
  double slot_correlation = 0.9; // AR(1) coefficient across slots

  void validate() const;
};

// Synthetic frequency-selective link: lognormal large-scale SNR per UE plus a
// per-coherence-block fading term evolving as AR(1) across slots. Grids are a
// pure function of (config, K, B, slot).
class LinkModel {
 public:
  LinkModel(const LinkModelConfig& cfg, int num_ues, int num_rbs, const SeTable& table);

  // Steps the fading chain forward as needed; slot must be >= current_slot().
  const LinkGrid& advance_to(int slot);
  const LinkGrid& current() const { return grid_; }
  int current_slot() const { return current_slot_; }

 private:
  void step_chain(int slot);
  void rebuild_grid();

  LinkModelConfig cfg_;
  int num_ues_, num_rbs_, num_blocks_;
  const SeTable* table_;
  std::vector<double> large_scale_db_;  // per UE
  std::vector<double> fading_z_;        // per (ue, block), standard normal
  std::vector<double> rank_z_;          // per (ue, block)
  LinkGrid grid_;
  int current_slot_ = -1;
};

LinkGrid generate_link_grid(const LinkModelConfig& cfg, int num_ues, int num_rbs,
                            const SeTable& table, int slot);

// Wideband (whole-BWP) summary for one UE: geometric mean of per-RB rates
// mapped back to the largest MCS not exceeding it, rank = rounded mean rank.
// Both components are clamped to the per-RB extremes of the row.
std::pair<int, int> wideband_summary(const LinkGrid& grid, int ue);

}  // namespace fdra

#endif
