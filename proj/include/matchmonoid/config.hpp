#ifndef MATCHMONOID_CONFIG_HPP
#define MATCHMONOID_CONFIG_HPP

#include <cstddef>

namespace matchmonoid::config {

// Maximum number of elements a poset may hold. Defaults to 1024; the
// MATCHMONOID_CAP environment variable (read once at first use) or
// set_element_cap override it.
std::size_t element_cap();
void set_element_cap(std::size_t cap);

// Maximum number of distinct endofunction tables a monoid closure may hold.
std::size_t closure_budget();
void set_closure_budget(std::size_t budget);

// Worker count for the parallel kernels. Results never depend on it.
unsigned workers();
void set_workers(unsigned count);

// Optional wall-clock deadline for long-running enumerations. Zero clears it.
void set_timeout_seconds(double seconds);
void clear_timeout();
// Throws Error(timeout) once the deadline has passed. Cheap; called from
// inner loops.
void check_deadline();

}  // namespace matchmonoid::config

#endif
