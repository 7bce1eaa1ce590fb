#include "charpdyn/caps.hpp"

#include <cstdlib>

#include "charpdyn/errors.hpp"

namespace charpdyn {

Caps caps_from_string(const std::string& s, const Caps& base) {
  Caps caps = base;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t end = s.find(',', pos);
    if (end == std::string::npos) end = s.size();
    std::string item = s.substr(pos, end - pos);
    pos = end + 1;
    if (item.empty()) continue;
    size_t eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("caps: expected key=value, got '" + item + "'");
    std::string key = item.substr(0, eq);
    int64_t value;
    try {
      size_t used = 0;
      value = std::stoll(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ParseError("caps: bad value in '" + item + "'");
    }
    if (value <= 0) throw ParseError("caps: value must be positive in '" + item + "'");
    if (key == "enum")
      caps.enumeration = value;
    else if (key == "pardeg")
      caps.param_degree = value;
    else if (key == "maxiter")
      caps.max_iter = static_cast<int>(value);
    else if (key == "ext")
      caps.ext_factor = static_cast<int>(value);
    else if (key == "tuples")
      caps.root_tuples = value;
    else
      throw ParseError("caps: unknown key '" + key + "'");
  }
  return caps;
}

Caps caps_from_env(const Caps& base) {
  const char* raw = std::getenv("CHARP_DYN_CAPS");
  if (raw == nullptr) return base;
  return caps_from_string(raw, base);
}

}  // namespace charpdyn
