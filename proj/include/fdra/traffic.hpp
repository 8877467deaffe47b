#ifndef FDRA_TRAFFIC_HPP
#define FDRA_TRAFFIC_HPP

#include <cstdint>
#include <deque>
#include <string>

namespace fdra {

// Periodic fixed-size packet source with a hard scheduling deadline.
struct TrafficModel {
  std::string name;
  int64_t packet_size_bits = 0;
  int delay_threshold_slots = 2;  // 1 ms at 0.5 ms slots
  int arrival_period = 1;
  int arrival_offset = 0;

  void validate() const;

  // URLLC presets
  static TrafficModel rdd();  // remote driving downlink, 16664-bit packets
  static TrafficModel pd2();  // power distribution grid, 2000-bit packets
  static TrafficModel by_name(const std::string& name);
};

struct Packet {
  int64_t remaining_bits;
  int64_t original_bits;
  int arrival_slot;
};

// Per-UE packet queue with head-of-line deadline enforcement. A packet that
// cannot be finished before its HoL delay exceeds the threshold is removed
// whole; partially transmitted bits of a dropped packet count for nothing.
class UeQueue {
 public:
  explicit UeQueue(int ue, bool partial_credit = false)
      : ue_(ue), partial_credit_(partial_credit) {}

  // Expires overdue packets, then appends the new arrival if this slot is an
  // arrival instant. Slot indices must be strictly increasing across calls.
  void advance_slot(const TrafficModel& model, int slot);

  // Applies scheduled bits to the HoL packet, spilling into later packets.
  void consume(int64_t bits);

  int ue() const { return ue_; }
  const std::deque<Packet>& pending() const { return pending_; }
  int64_t pending_bits() const;
  int64_t pending_original_bits() const;
  // slots since the head packet arrived; -1 when empty
  int hol_delay(int current_slot) const;

  int64_t delivered_bits() const { return delivered_bits_; }
  int delivered_packets() const { return delivered_packets_; }
  int dropped_packets() const { return dropped_packets_; }
  int64_t dropped_bits() const { return dropped_bits_; }
  int generated_packets() const { return generated_packets_; }
  int64_t generated_bits() const { return generated_bits_; }

 private:
  int ue_;
  bool partial_credit_;
  std::deque<Packet> pending_;
  int last_slot_ = -1;
  int64_t delivered_bits_ = 0;
  int delivered_packets_ = 0;
  int dropped_packets_ = 0;
  int64_t dropped_bits_ = 0;
  int generated_packets_ = 0;
  int64_t generated_bits_ = 0;
};

}  // namespace fdra

#endif
