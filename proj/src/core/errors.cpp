#include "core/errors.hpp"

namespace surfcalc {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::degree_mismatch: return "DegreeMismatch";
    case Errc::out_of_range: return "OutOfRange";
    case Errc::repeated_point: return "RepeatedPoint";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::degree_too_large: return "DegreeTooLarge";
    case Errc::rank_mismatch: return "RankMismatch";
    case Errc::strand_mismatch: return "StrandMismatch";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::not_central: return "NotCentral";
    case Errc::replay_failed: return "ReplayFailed";
    case Errc::not_elliptic: return "NotElliptic";
    case Errc::not_integral: return "NotIntegral";
    case Errc::not_closed: return "NotClosed";
    case Errc::member_missing: return "MemberMissing";
    case Errc::bound_exceeded: return "BoundExceeded";
    case Errc::disconnected: return "Disconnected";
    case Errc::not_ade: return "NotADE";
    case Errc::not_extended: return "NotExtended";
    case Errc::unknown_label: return "UnknownLabel";
    case Errc::not_applicable: return "NotApplicable";
    case Errc::not_found_within_bound: return "NotFoundWithinBound";
    case Errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

Error::Error(Errc code, const std::string& msg)
    : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace surfcalc
