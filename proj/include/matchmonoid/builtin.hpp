#pragma once

#include <string>

#include "matchmonoid/poset.hpp"

namespace matchmonoid {

// Builds a poset from the builtin mini-grammar:
//   chain:N | divisors:N | bruhat:N | involutions:N | product:(SPEC,SPEC,...)
// product nests arbitrarily. ParseError on malformed specs; range and cap
// errors surface from the underlying constructors.
PosetPtr builtin_poset(const std::string& spec);

}  // namespace matchmonoid
