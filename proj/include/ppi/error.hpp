#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ppi {

enum class Errc {
  MalformedCycle,
  RepeatedPoint,
  PointOutOfRange,
  DegreeMismatch,
  CapExceeded,
  NotASubgroup,
  NotAPGroup,
  NotNormal,
  LatticeCapExceeded,
  MemoCapExceeded,
  ParseError,
  DuplicateName,
  OrderMismatch,
  OrderOverflow,
  InvalidArgument,
};

inline const char *errc_name(Errc c) {
  switch (c) {
  case Errc::MalformedCycle: return "MalformedCycle";
  case Errc::RepeatedPoint: return "RepeatedPoint";
  case Errc::PointOutOfRange: return "PointOutOfRange";
  case Errc::DegreeMismatch: return "DegreeMismatch";
  case Errc::CapExceeded: return "CapExceeded";
  case Errc::NotASubgroup: return "NotASubgroup";
  case Errc::NotAPGroup: return "NotAPGroup";
  case Errc::NotNormal: return "NotNormal";
  case Errc::LatticeCapExceeded: return "LatticeCapExceeded";
  case Errc::MemoCapExceeded: return "MemoCapExceeded";
  case Errc::ParseError: return "ParseError";
  case Errc::DuplicateName: return "DuplicateName";
  case Errc::OrderMismatch: return "OrderMismatch";
  case Errc::OrderOverflow: return "OrderOverflow";
  case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// All failures raised by the library carry one of the codes above.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string &what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

/// Raised when an enumeration would exceed its configured cap.
class CapExceeded : public Error {
public:
  CapExceeded(std::uint64_t size, std::uint64_t cap, Errc code = Errc::CapExceeded)
      : Error(code, "size " + std::to_string(size) + " exceeds cap " +
                        std::to_string(cap)),
        size_(size), cap_(cap) {}

  std::uint64_t size() const noexcept { return size_; }
  std::uint64_t cap() const noexcept { return cap_; }

private:
  std::uint64_t size_;
  std::uint64_t cap_;
};

} // namespace ppi
