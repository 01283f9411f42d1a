#pragma once

#include <string>

#include "gnum/prime_system.hpp"

namespace gnum {

// Parses a system definition document:
// {"kind": "discrete" | "continuous" | "builtin",
//  "label": "...",
//  "primes": [2, 3, 5],
//  "density": {"u": [...], "rho": [...]},   dPi/du samples
//  "atoms": [[u, w], ...],
//  "builtin": {"name": "ex42", "params": {"k": 3}}}
PrimeSystem system_from_json(const std::string& text);

// Resolves "builtin:name", "builtin:name?key=value&key=value",
// "primes:2,3,5" or a path to a JSON definition file.
PrimeSystem load_system(const std::string& spec);

}  // namespace gnum
