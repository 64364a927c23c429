#pragma once

#include <stdexcept>

namespace lusym {

// A mathematical precondition does not hold: wrong family, bad parity,
// malformed partition or symbol.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An enumeration was asked to go past its configured bound.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The theta-bar map was requested where tau is negative.
struct UndefinedMapError : std::domain_error {
  using std::domain_error::domain_error;
};

// A formula produced a value it never should (non-exact division,
// theta-bar landing outside the target family).
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace lusym
