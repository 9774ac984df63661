#include "spincount/caps.hpp"

#include <cstdlib>
#include <string>

#include "spincount/error.hpp"

namespace spincount {

Caps default_caps() {
  Caps caps;
  if (const char* env = std::getenv("SPINCOUNT_BRUTE_CAP"); env && *env) {
    int v = 0;
    try {
      std::size_t pos = 0;
      v = std::stoi(env, &pos);
      if (env[pos] != '\0') throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw InputError(std::string("SPINCOUNT_BRUTE_CAP is not an integer: ") + env);
    }
    if (v < 0 || v > 62) throw InputError("SPINCOUNT_BRUTE_CAP out of range");
    caps.z_exact_vars = v;
    caps.near_assignment_vars = v;
  }
  return caps;
}

}  // namespace spincount
