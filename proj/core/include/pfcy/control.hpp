#pragma once

#include <stdexcept>
#include <string>

namespace pfcy {

class TimeoutError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Process-wide wall-clock budget and progress reporting. Long computations call
// control::check() at safe points; it throws TimeoutError once the budget is
// spent.
namespace control {

// Seconds from now; zero or negative clears the limit.
void set_time_limit(double seconds);
double time_remaining();  // +inf when unlimited
void check();

// Heartbeat lines go to stderr, at most one per interval.
void set_heartbeat(bool enabled, double interval_seconds = 5.0);
void heartbeat(const std::string& message);

}  // namespace control

}  // namespace pfcy
