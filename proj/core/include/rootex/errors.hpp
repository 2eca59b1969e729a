#pragma once

#include <stdexcept>

namespace rootex {

// Bad user input: missing or malformed files, parameters outside their
// documented range, start points outside the volume. The CLI maps this
// to exit code 2; every other exception exits 1.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rootex
