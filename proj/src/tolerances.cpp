#include "krein/tolerances.hpp"

namespace krein {

ToleranceConfig& tolerances() {
  static ToleranceConfig config;
  return config;
}

} // namespace krein
