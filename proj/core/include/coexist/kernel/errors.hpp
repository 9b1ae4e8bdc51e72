#ifndef COEXIST_KERNEL_ERRORS_HPP
#define COEXIST_KERNEL_ERRORS_HPP

#include <sstream>
#include <stdexcept>
#include <string>

namespace coexist {

/// Fatal programming error inside a run (scheduling in the past, broken
/// invariant). Aborts the run; never caught by normal control flow.
class SimAbort : public std::logic_error {
 public:
  explicit SimAbort(const std::string& what) : std::logic_error(what) {}
};

/// Bad user configuration. CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Placement calibration could not be satisfied. CLI maps this to exit code 3.
class CalibrationError : public std::runtime_error {
 public:
  explicit CalibrationError(const std::string& what)
      : std::runtime_error(what) {}
};

namespace detail {
[[noreturn]] inline void check_failed(const char* expr, const char* file,
                                      int line, const std::string& msg) {
  std::ostringstream os;
  os << "check failed: " << expr << " at " << file << ":" << line;
  if (!msg.empty()) os << " (" << msg << ")";
  throw SimAbort(os.str());
}
}  // namespace detail

}  // namespace coexist

// Always-on invariant check; active in release builds as well.
#define COEXIST_CHECK(expr)                                              \
  do {                                                                   \
    if (!(expr))                                                         \
      ::coexist::detail::check_failed(#expr, __FILE__, __LINE__, "");    \
  } while (0)

#define COEXIST_CHECK_MSG(expr, msg)                                     \
  do {                                                                   \
    if (!(expr)) {                                                       \
      std::ostringstream os_;                                            \
      os_ << msg;                                                        \
      ::coexist::detail::check_failed(#expr, __FILE__, __LINE__,         \
                                      os_.str());                        \
    }                                                                    \
  } while (0)

#endif  // COEXIST_KERNEL_ERRORS_HPP
