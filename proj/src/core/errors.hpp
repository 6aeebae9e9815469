#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace surfcalc {

// Every domain error carries one of these codes; the C API and the CLI
// surface the code name verbatim so callers can see which precondition
// was violated.
enum class Errc {
  degree_mismatch,
  out_of_range,
  repeated_point,
  cap_exceeded,
  degree_too_large,
  rank_mismatch,
  strand_mismatch,
  index_out_of_range,
  length_mismatch,
  not_central,
  replay_failed,
  not_elliptic,
  not_integral,
  not_closed,
  member_missing,
  bound_exceeded,
  disconnected,
  not_ade,
  not_extended,
  unknown_label,
  not_applicable,
  not_found_within_bound,
  parse_error,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& msg);
  Errc code() const noexcept { return code_; }
  const char* name() const noexcept { return errc_name(code_); }

private:
  Errc code_;
};

class CapExceededError : public Error {
public:
  CapExceededError(std::size_t partial_count, const std::string& msg)
      : Error(Errc::cap_exceeded, msg), partial_(partial_count) {}
  std::size_t partial_count() const noexcept { return partial_; }

private:
  std::size_t partial_;
};

[[noreturn]] void fail(Errc code, const std::string& msg);

} // namespace surfcalc
