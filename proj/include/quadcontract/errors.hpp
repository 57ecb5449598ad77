#pragma once

#include <stdexcept>
#include <string>

namespace quadcontract {

// Base class for every error this library throws.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Construction / validation
struct NotSimple : Error { using Error::Error; };
struct NotTriangulation : Error { using Error::Error; };
struct Disconnected : Error { using Error::Error; };
struct OrderTooSmall : Error { using Error::Error; };

// Accessors / rewrites
struct UnknownVertex : Error { using Error::Error; };
struct NotAnEdge : Error { using Error::Error; };
struct ResultNotSimple : Error { using Error::Error; };
struct DegreeTooSmall : Error { using Error::Error; };
struct InvalidSite : Error { using Error::Error; };
struct GuardViolated : Error { using Error::Error; };

// File formats / resource policy
struct BadHeader : Error { using Error::Error; };
struct Truncated : Error { using Error::Error; };
struct ResourceLimit : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace quadcontract
