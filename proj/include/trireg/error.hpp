#ifndef TRIREG_ERROR_HPP
#define TRIREG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace trireg {

// Status values mirrored by the C API and the CLI exit codes.
enum class ErrorCode {
    ok = 0,
    property_failed = 1,
    bad_input = 2,
    resource_cap = 3,
    internal = 4,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail_input(const std::string& msg) {
    throw Error(ErrorCode::bad_input, msg);
}

[[noreturn]] inline void fail_internal(const std::string& msg) {
    throw Error(ErrorCode::internal, msg);
}

}  // namespace trireg

#endif
