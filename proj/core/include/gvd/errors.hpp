#pragma once

#include <stdexcept>
#include <string>

namespace gvd {

// Caller handed us an input that violates a documented precondition.
struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal invariant was violated. Either a perturbation failure that the
// caller may retry with a fresh seed, or a genuine bug.
struct InvariantBreach : std::logic_error {
  using std::logic_error::logic_error;
};

// Perturbation produced a tie somewhere it must not. Retry with seed+1.
struct TieDetected : InvariantBreach {
  using InvariantBreach::InvariantBreach;
};

#define GVD_CHECK_INPUT(cond, msg)            \
  do {                                        \
    if (!(cond)) throw ::gvd::InvalidInput(msg); \
  } while (0)

#define GVD_CHECK(cond, msg)                     \
  do {                                           \
    if (!(cond)) throw ::gvd::InvariantBreach(msg); \
  } while (0)

}  // namespace gvd
