#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tgglines {

enum class ErrorCode {
  io,                // file could not be opened, read or written
  format,            // unsupported or malformed file contents
  empty_image,       // zero width or height
  invalid_argument,  // precondition violated by the caller
  no_convergence,    // iterative stage exceeded its pass budget
  schema,            // JSON document does not match the expected schema
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tgglines
