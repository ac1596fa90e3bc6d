#pragma once

#include <stdexcept>
#include <string>

namespace sxx {

enum class errc {
  invalid_argument = 1,
  finite_temperature_required,
  zero_temperature_required,
  degenerate_ground_state,
  no_solution,
  internal,
};

// Library-wide exception carrying a stable error code (mirrored 1:1 by the
// C API status enum).
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace sxx
