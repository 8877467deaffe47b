#include "fdra/se_table.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "fdra/rng.hpp"

namespace fdra {

SeTable SeTable::load(const std::string& csv_path) {
  std::ifstream in(csv_path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open se table: " + csv_path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string bytes = buf.str();

  SeTable t;
  t.checksum_ = fnv1a64(bytes);
  t.source_path_ = csv_path;

  std::istringstream lines(bytes);
  std::string line;
  int expected = 0;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("mcs_index", 0) == 0) continue;  // header row
    std::istringstream row(line);
    std::string idx_str, se_str;
    if (!std::getline(row, idx_str, ',') || !std::getline(row, se_str, ','))
      throw std::runtime_error("malformed se table row: " + line);
    int idx = std::stoi(idx_str);
    double se = std::stod(se_str);
    if (idx != expected) throw std::runtime_error("se table indices must be 0..27 in order");
    if (idx >= kNumMcs) throw std::runtime_error("se table has too many rows");
    t.se_[idx] = se;
    ++expected;
  }
  if (expected != kNumMcs) throw std::runtime_error("se table must have exactly 28 rows");
  if (t.se_[0] != 0.0) throw std::runtime_error("se table entry 0 must be 0");
  for (int m = 1; m < kNumMcs; ++m) {
    if (t.se_[m] <= t.se_[m - 1])
      throw std::runtime_error("se table must be strictly increasing from index 1");
  }

  for (int m = 0; m < kNumMcs; ++m) {
    for (int ri = 1; ri <= kMaxRank; ++ri) {
      t.per_rb_[m * kMaxRank + (ri - 1)] =
          static_cast<int64_t>(std::floor(ri * t.se_[m] * kResourceElementsPerRb));
    }
    t.snr_threshold_db_[m] =
        m == 0 ? -1e30 : 10.0 * std::log10(std::exp2(t.se_[m]) - 1.0);
  }
  return t;
}

SeTable SeTable::load_default(const std::string& explicit_path) {
  if (!explicit_path.empty()) return load(explicit_path);
  if (const char* env = std::getenv("FDRA_SE_TABLE")) return load(env);
#ifdef FDRA_DEFAULT_SE_TABLE
  return load(FDRA_DEFAULT_SE_TABLE);
#else
  return load("data/se_table.csv");
#endif
}

double SeTable::se(int mcs) const {
  if (mcs < 0 || mcs >= kNumMcs) throw std::out_of_range("mcs out of range");
  return se_[mcs];
}

int64_t SeTable::per_rb_rate(int mcs, int ri) const {
  if (mcs < 0 || mcs >= kNumMcs) throw std::out_of_range("mcs out of range");
  if (ri < 1 || ri > kMaxRank) throw std::out_of_range("ri out of range");
  return per_rb_[mcs * kMaxRank + (ri - 1)];
}

int64_t SeTable::rate_for(int mcs, int ri, int num_rbs) const {
  if (num_rbs < 0) throw std::out_of_range("num_rbs must be >= 0");
  return num_rbs * per_rb_rate(mcs, ri);
}

double SeTable::snr_threshold_db(int mcs) const {
  if (mcs < 0 || mcs >= kNumMcs) throw std::out_of_range("mcs out of range");
  return snr_threshold_db_[mcs];
}

int SeTable::mcs_for_snr_db(double snr_db) const {
  int m = 0;
  while (m + 1 < kNumMcs && snr_db >= snr_threshold_db_[m + 1]) ++m;
  return m;
}

std::string SeTable::checksum_hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(checksum_));
  return buf;
}

}  // namespace fdra
