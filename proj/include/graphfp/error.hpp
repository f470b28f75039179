#ifndef GRAPHFP_ERROR_HPP
#define GRAPHFP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace graphfp {

enum class ErrorKind {
  DuplicateId,
  DanglingEndpoint,
  EmptyGraph,
  Inadmissible,
  UnknownVertex,
  UnknownPath,
  SizeOutOfRange,
  SizeMismatch,
  SameVertex,
  DepthExceeded,
  TruncationRisk,
  Parse,
};

const char* to_string(ErrorKind kind);

/// Every library failure is reported as an Error carrying its kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace graphfp

#endif  // GRAPHFP_ERROR_HPP
