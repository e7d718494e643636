#ifndef MINCODE_ERRORS_HPP
#define MINCODE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mincode {

// Base class for every library error so callers can catch at one level.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct CompositeP : Error { using Error::Error; };
struct EvenP : Error { using Error::Error; };
struct Reducible : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct ZeroVector : Error { using Error::Error; };
struct ZeroColumn : Error { using Error::Error; };
struct ZeroMessage : Error { using Error::Error; };
struct SameHyperplane : Error { using Error::Error; };
struct ZeroCode : Error { using Error::Error; };
struct NotAuthorized : Error { using Error::Error; };
struct MissingShare : Error { using Error::Error; };
struct UnknownParticipant : Error { using Error::Error; };
struct AuthorizedSet : Error { using Error::Error; };
struct NotMinimal : Error { using Error::Error; };
struct FormatError : Error { using Error::Error; };

}  // namespace mincode

#endif
