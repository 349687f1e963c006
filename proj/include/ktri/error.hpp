#ifndef KTRI_ERROR_HPP
#define KTRI_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ktri {

// Library errors carry a stable machine-readable code ("DIMENSION-MISMATCH",
// "NO-SUCH-COLUMN", ...) next to the human message; the CLI maps any error to
// exit status 2.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool cond, const std::string& code, const std::string& message) {
  if (!cond) fail(code, message);
}

}  // namespace ktri

#endif  // KTRI_ERROR_HPP
