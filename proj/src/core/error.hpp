#pragma once

#include <stdexcept>
#include <string>

namespace modlap {

enum class ErrorCode {
    invalid_argument,  // bad parameter or violated precondition
    parse,             // malformed pattern, spec string, or file content
    io,                // file open/read/write failure
    range,             // index past the end of an explicit schedule, etc.
    degenerate,        // operation undefined for this input (e.g. constant series)
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace modlap
