#ifndef COEXIST_KERNEL_SIM_TIME_HPP
#define COEXIST_KERNEL_SIM_TIME_HPP

#include <cmath>
#include <compare>
#include <cstdint>
#include <ostream>

namespace coexist {

/// Simulation clock value / duration in integer nanoseconds.
///
/// Every duration used by the protocols (9 us slots, 16 us SIFS, 25/34/43/79
/// us defers, 0.5/1 ms NR slots, 8 ms COT) is exactly representable, so the
/// clock never drifts.
class SimTime {
 public:
  constexpr SimTime() = default;

  static constexpr SimTime from_ns(std::int64_t v) { return SimTime(v); }
  static constexpr SimTime from_us(std::int64_t v) { return SimTime(v * 1000); }
  static constexpr SimTime from_ms(std::int64_t v) {
    return SimTime(v * 1000000);
  }
  static constexpr SimTime from_s(std::int64_t v) {
    return SimTime(v * 1000000000);
  }
  /// For config values like duration_s=30.5; rounds to the nearest tick.
  static SimTime from_seconds(double v) {
    return SimTime(static_cast<std::int64_t>(std::llround(v * 1e9)));
  }
  static SimTime from_us_f(double v) {
    return SimTime(static_cast<std::int64_t>(std::llround(v * 1e3)));
  }

  constexpr std::int64_t ns() const { return ticks_; }
  constexpr double us_f() const { return static_cast<double>(ticks_) * 1e-3; }
  constexpr double ms_f() const { return static_cast<double>(ticks_) * 1e-6; }
  constexpr double s_f() const { return static_cast<double>(ticks_) * 1e-9; }

  friend constexpr auto operator<=>(SimTime, SimTime) = default;

  constexpr SimTime operator+(SimTime o) const {
    return SimTime(ticks_ + o.ticks_);
  }
  constexpr SimTime operator-(SimTime o) const {
    return SimTime(ticks_ - o.ticks_);
  }
  constexpr SimTime& operator+=(SimTime o) {
    ticks_ += o.ticks_;
    return *this;
  }
  constexpr SimTime& operator-=(SimTime o) {
    ticks_ -= o.ticks_;
    return *this;
  }
  constexpr SimTime operator*(std::int64_t k) const {
    return SimTime(ticks_ * k);
  }
  /// Whole quotient of two durations (e.g. slots elapsed).
  constexpr std::int64_t operator/(SimTime o) const {
    return ticks_ / o.ticks_;
  }
  constexpr SimTime operator%(SimTime o) const {
    return SimTime(ticks_ % o.ticks_);
  }

  static constexpr SimTime max() {
    return SimTime(INT64_MAX);
  }

 private:
  constexpr explicit SimTime(std::int64_t t) : ticks_(t) {}
  std::int64_t ticks_ = 0;
};

constexpr SimTime operator*(std::int64_t k, SimTime t) { return t * k; }

inline std::ostream& operator<<(std::ostream& os, SimTime t) {
  return os << t.ns() << "ns";
}

}  // namespace coexist

#endif  // COEXIST_KERNEL_SIM_TIME_HPP
