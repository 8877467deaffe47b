#ifndef FDRA_SE_TABLE_HPP
#define FDRA_SE_TABLE_HPP

#include <array>
#include <cstdint>
#include <string>

namespace fdra {

// Modulation-and-coding ladder: maps an MCS index in [0, 27] to spectral
// efficiency (bits per resource element). Index 0 carries nothing. Loaded from
// a versioned CSV so experiment outputs can record which ladder produced them.
class SeTable {
 public:
  static constexpr int kNumMcs = 28;
  static constexpr int kMaxRank = 4;
  // 12 subcarriers * 14 symbols * 0.9 usable fraction
  static constexpr double kResourceElementsPerRb = 12.0 * 14.0 * 0.9;

  static SeTable load(const std::string& csv_path);
  // Resolution order: explicit path arg, FDRA_SE_TABLE env var, built-in default path.
  static SeTable load_default(const std::string& explicit_path = "");

  double se(int mcs) const;
  int max_mcs() const { return kNumMcs - 1; }

  // bits per slot on one RB; 0 for mcs 0
  int64_t per_rb_rate(int mcs, int ri) const;
  // bits per slot over num_rbs RBs; linear in num_rbs
  int64_t rate_for(int mcs, int ri, int num_rbs) const;

  // SNR (dB) above which `mcs` is decodable: 10*log10(2^se - 1)
  double snr_threshold_db(int mcs) const;
  int mcs_for_snr_db(double snr_db) const;

  uint64_t checksum() const { return checksum_; }
  std::string checksum_hex() const;
  const std::string& source_path() const { return source_path_; }

 private:
  SeTable() = default;
  std::array<double, kNumMcs> se_{};
  std::array<int64_t, kNumMcs * kMaxRank> per_rb_{};  // [mcs * kMaxRank + (ri-1)]
  std::array<double, kNumMcs> snr_threshold_db_{};
  uint64_t checksum_ = 0;
  std::string source_path_;
};

}  // namespace fdra

#endif
