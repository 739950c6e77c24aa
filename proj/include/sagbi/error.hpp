#ifndef SAGBI_ERROR_HPP
#define SAGBI_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sagbi {

// Mirrors the CLI exit codes.
enum class ErrorCode {
    Usage = 1,
    Parse = 2,
    CapExceeded = 3,
    Internal = 4,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
    throw Error(code, msg);
}

}  // namespace sagbi

#endif
