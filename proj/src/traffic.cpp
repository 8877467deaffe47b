#include "fdra/traffic.hpp"

#include <algorithm>
#include <stdexcept>

namespace fdra {

void TrafficModel::validate() const {
  if (packet_size_bits <= 0) throw std::invalid_argument("packet size must be > 0");
  if (delay_threshold_slots < 1) throw std::invalid_argument("delay threshold must be >= 1 slot");
  if (arrival_period < 1) throw std::invalid_argument("arrival period must be >= 1");
  if (arrival_offset < 0) throw std::invalid_argument("arrival offset must be >= 0");
}

TrafficModel TrafficModel::rdd() {
  return TrafficModel{"rdd", 16664, 2, 1, 0};
}

TrafficModel TrafficModel::pd2() {
  return TrafficModel{"pd2", 2000, 2, 1, 0};
}

TrafficModel TrafficModel::by_name(const std::string& name) {
  if (name == "rdd") return rdd();
  if (name == "pd2") return pd2();
  throw std::invalid_argument("unknown traffic model: " + name);
}

void UeQueue::advance_slot(const TrafficModel& model, int slot) {
  if (slot <= last_slot_) throw std::invalid_argument("slot index must strictly increase");
  last_slot_ = slot;

  while (!pending_.empty() &&
         slot - pending_.front().arrival_slot > model.delay_threshold_slots) {
    ++dropped_packets_;
    dropped_bits_ += pending_.front().original_bits;
    pending_.pop_front();
  }

  if (slot >= model.arrival_offset &&
      (slot - model.arrival_offset) % model.arrival_period == 0) {
    pending_.push_back({model.packet_size_bits, model.packet_size_bits, slot});
    ++generated_packets_;
    generated_bits_ += model.packet_size_bits;
  }
}

void UeQueue::consume(int64_t bits) {
  if (bits < 0) throw std::invalid_argument("cannot consume negative bits");
  while (bits > 0 && !pending_.empty()) {
    Packet& head = pending_.front();
    const int64_t used = std::min(bits, head.remaining_bits);
    head.remaining_bits -= used;
    bits -= used;
    if (partial_credit_) delivered_bits_ += used;
    if (head.remaining_bits == 0) {
      if (!partial_credit_) delivered_bits_ += head.original_bits;
      ++delivered_packets_;
      pending_.pop_front();
    }
  }
  // leftover bits beyond all pending traffic are wasted capacity
}

int64_t UeQueue::pending_bits() const {
  int64_t sum = 0;
  for (const Packet& p : pending_) sum += p.remaining_bits;
  return sum;
}

int64_t UeQueue::pending_original_bits() const {
  int64_t sum = 0;
  for (const Packet& p : pending_) sum += p.original_bits;
  return sum;
}

int UeQueue::hol_delay(int current_slot) const {
  if (pending_.empty()) return -1;
  return current_slot - pending_.front().arrival_slot;
}

}  // namespace fdra
