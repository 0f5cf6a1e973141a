#ifndef EHSEC_ASSIGNMENT_HPP_
#define EHSEC_ASSIGNMENT_HPP_

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

namespace ehsec {

// Binary sensor-by-slot matrix: entry (k, j) is 1 when sensor k transmits
// in slot j of the current frame.
class Assignment {
 public:
  Assignment() = default;
  Assignment(int n_sensors, int n_slots)
      : n_sensors_(n_sensors),
        n_slots_(n_slots),
        cells_(static_cast<std::size_t>(n_sensors) * n_slots, 0) {}

  int n_sensors() const { return n_sensors_; }
  int n_slots() const { return n_slots_; }

  bool at(int sensor, int slot) const { return cells_[offset(sensor, slot)]; }
  void set(int sensor, int slot, bool on) {
    cells_[offset(sensor, slot)] = on ? 1 : 0;
  }

  // Packets sent by one sensor this frame.
  int packets(int sensor) const {
    int n = 0;
    for (int j = 0; j < n_slots_; ++j) n += at(sensor, j);
    return n;
  }

  // Total packets this frame, summed over sensors.
  int objective_slots() const {
    return std::accumulate(cells_.begin(), cells_.end(), 0);
  }

  // Row-major cells; used for lexicographic tie-breaking.
  const std::vector<std::uint8_t>& cells() const { return cells_; }

  bool operator==(const Assignment&) const = default;

 private:
  std::size_t offset(int sensor, int slot) const {
    return static_cast<std::size_t>(sensor) * n_slots_ + slot;
  }

  int n_sensors_ = 0;
  int n_slots_ = 0;
  std::vector<std::uint8_t> cells_;
};

}  // namespace ehsec

#endif  // EHSEC_ASSIGNMENT_HPP_
