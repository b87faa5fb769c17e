#pragma once

#include <stdexcept>
#include <string>

namespace klv {

// Status codes shared between the C++ core and the C API.
enum class Status {
  Ok = 0,
  ParseError = 1,
  PoleAtOrigin = 2,
  DivergentOmega = 3,
  RepeatedWeights = 4,
  LengthViolation = 5,
  WindowExceeded = 6,
  UnstableLimit = 7,
  InvalidArg = 8,
  Internal = 9,
};

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::ParseError: return "parse_error";
    case Status::PoleAtOrigin: return "pole_at_origin";
    case Status::DivergentOmega: return "divergent_omega";
    case Status::RepeatedWeights: return "repeated_weights";
    case Status::LengthViolation: return "length_violation";
    case Status::WindowExceeded: return "window_exceeded";
    case Status::UnstableLimit: return "unstable_limit";
    case Status::InvalidArg: return "invalid_arg";
    case Status::Internal: return "internal";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Status s, const std::string& msg) : std::runtime_error(msg), status_(s) {}
  Status status() const { return status_; }

 private:
  Status status_;
};

[[noreturn]] inline void fail(Status s, const std::string& msg) { throw Error(s, msg); }

}  // namespace klv
