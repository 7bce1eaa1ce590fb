#pragma once

#include <stdexcept>

namespace charpdyn {

// Malformed textual input (field specs, element expressions, places).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured resource limit was hit; see Caps.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Arithmetic between elements of structurally different fields.
struct FieldMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace charpdyn
