#include "matchmonoid/config.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <string>
#include <thread>

#include "matchmonoid/errors.hpp"

namespace matchmonoid::config {

namespace {

std::size_t initial_cap() {
  if (const char* env = std::getenv("MATCHMONOID_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1024;
}

std::atomic<std::size_t> g_cap{0};
std::atomic<std::size_t> g_budget{1000000};
std::atomic<unsigned> g_workers{0};
// Deadline as nanoseconds on the steady clock; 0 means "none".
std::atomic<long long> g_deadline_ns{0};

long long now_ns() {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

}  // namespace

std::size_t element_cap() {
  std::size_t cap = g_cap.load(std::memory_order_relaxed);
  if (cap == 0) {
    cap = initial_cap();
    g_cap.store(cap, std::memory_order_relaxed);
  }
  return cap;
}

void set_element_cap(std::size_t cap) {
  if (cap == 0) fail(Errc::bad_parameter, "element cap must be positive");
  g_cap.store(cap, std::memory_order_relaxed);
}

std::size_t closure_budget() { return g_budget.load(std::memory_order_relaxed); }

void set_closure_budget(std::size_t budget) {
  if (budget == 0) fail(Errc::bad_parameter, "closure budget must be positive");
  g_budget.store(budget, std::memory_order_relaxed);
}

unsigned workers() {
  unsigned w = g_workers.load(std::memory_order_relaxed);
  if (w == 0) {
    w = std::thread::hardware_concurrency();
    if (w == 0) w = 1;
    g_workers.store(w, std::memory_order_relaxed);
  }
  return w;
}

void set_workers(unsigned count) {
  if (count == 0) fail(Errc::bad_parameter, "worker count must be positive");
  g_workers.store(count, std::memory_order_relaxed);
}

void set_timeout_seconds(double seconds) {
  if (seconds <= 0) fail(Errc::bad_parameter, "timeout must be positive");
  g_deadline_ns.store(now_ns() + static_cast<long long>(seconds * 1e9),
                      std::memory_order_relaxed);
}

void clear_timeout() { g_deadline_ns.store(0, std::memory_order_relaxed); }

void check_deadline() {
  long long dl = g_deadline_ns.load(std::memory_order_relaxed);
  if (dl != 0 && now_ns() > dl) fail(Errc::timeout, "wall-clock budget exhausted");
}

}  // namespace matchmonoid::config
