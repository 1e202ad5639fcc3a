#pragma once

#include <stdexcept>
#include <string>

namespace ainf {

// exit 1 at the CLI
struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// a triangulation that fails to be maximal shows up as an unattained sup/inf
struct invalid_triangulation : validation_error {
  using validation_error::validation_error;
};

// exit 2
struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// exit 3
struct cap_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ainf
