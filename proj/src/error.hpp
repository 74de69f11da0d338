#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace watset {

enum class ErrorCode {
  EmptyInput = 1,
  MissingEmbeddings,
  UnknownWord,
  FormatError,
  InconsistentInventory,
  EmptyGold,
  InvalidArgument,
  IoError,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::MissingEmbeddings: return "MissingEmbeddings";
    case ErrorCode::UnknownWord: return "UnknownWord";
    case ErrorCode::FormatError: return "FormatError";
    case ErrorCode::InconsistentInventory: return "InconsistentInventory";
    case ErrorCode::EmptyGold: return "EmptyGold";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace watset
