#pragma once

#include <cstdint>
#include <string>

namespace charpdyn {

// Limits for the exhaustive parts of the exact algorithms. Everything is
// still exact under these caps; hitting one raises CapExceeded instead of
// silently approximating.
struct Caps {
  int64_t enumeration = int64_t(1) << 20;  // largest field enumerated exhaustively
  int64_t param_degree = 4096;             // max parameter-degree d^(n-1) of iterate polynomials
  int max_iter = 64;                       // local-height iteration budget
  int ext_factor = 4;                      // max constant-field extension degree for root sampling
  int64_t root_tuples = 200000;            // max interpolation tuples tried in rational_roots
};

// Parse overrides of the form "enum=1048576,pardeg=4096,maxiter=64,ext=4,tuples=200000".
// Unknown keys raise ParseError; absent keys keep the base value.
Caps caps_from_string(const std::string& s, const Caps& base = Caps{});

// Same, reading the CHARP_DYN_CAPS environment variable (no-op when unset).
Caps caps_from_env(const Caps& base = Caps{});

}  // namespace charpdyn
