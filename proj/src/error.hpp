#ifndef NETEPI_ERROR_HPP
#define NETEPI_ERROR_HPP

#include <stdexcept>
#include <string>

namespace netepi {

enum class ErrorCode {
    Parse = 1,
    Asymmetry,
    SelfLoop,
    DimensionMismatch,
    NotConnected,
    InvalidParam,
    NoBracket,
    UnstableStep,
    ConvergenceFailure,
    NonpositiveState,
    Io,
    InvalidArgument,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string msg)
        : std::runtime_error(std::move(msg)), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg)
{
    throw Error(code, msg);
}

const char* error_code_name(ErrorCode code);

} // namespace netepi

#endif
