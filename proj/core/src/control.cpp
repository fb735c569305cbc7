#include "pfcy/control.hpp"

#include <chrono>
#include <iostream>
#include <limits>

namespace pfcy::control {

namespace {
using Clock = std::chrono::steady_clock;
bool g_limited = false;
Clock::time_point g_deadline;
bool g_heartbeat = false;
double g_interval = 5.0;
Clock::time_point g_last_beat;
Clock::time_point g_start = Clock::now();
}  // namespace

void set_time_limit(double seconds) {
  g_limited = seconds > 0;
  if (g_limited)
    g_deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds));
}

double time_remaining() {
  if (!g_limited) return std::numeric_limits<double>::infinity();
  return std::chrono::duration<double>(g_deadline - Clock::now()).count();
}

void check() {
  if (g_limited && Clock::now() >= g_deadline) throw TimeoutError("time budget exhausted");
}

void set_heartbeat(bool enabled, double interval_seconds) {
  g_heartbeat = enabled;
  g_interval = interval_seconds;
  g_last_beat = Clock::now() - std::chrono::hours(1);
}

void heartbeat(const std::string& message) {
  if (!g_heartbeat) return;
  auto now = Clock::now();
  if (std::chrono::duration<double>(now - g_last_beat).count() < g_interval) return;
  g_last_beat = now;
  double t = std::chrono::duration<double>(now - g_start).count();
  std::cerr << "[" << static_cast<long long>(t) << "s] " << message << std::endl;
}

}  // namespace pfcy::control
