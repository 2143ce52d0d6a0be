#ifndef TGX_ERROR_HPP
#define TGX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tgx {

enum class Errc {
  InvalidArgument = 1,
  Domain = 2,
  Range = 3,
  Parse = 4,
  Protocol = 5,
  Model = 6,
  Io = 7,
  Internal = 8,
};

/// Library-wide exception type carrying a stable error category.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, std::string message) {
  throw Error(code, std::move(message));
}

}  // namespace tgx

#endif
