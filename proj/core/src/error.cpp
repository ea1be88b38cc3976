#include "tgglines/error.hpp"

namespace tgglines {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::io: return "io";
    case ErrorCode::format: return "format";
    case ErrorCode::empty_image: return "empty_image";
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::no_convergence: return "no_convergence";
    case ErrorCode::schema: return "schema";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace tgglines
