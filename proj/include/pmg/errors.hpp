#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace pmg {

// Error buckets; the numeric value is the CLI exit code.
enum class ErrorKind { Domain = 2, InvalidSpec = 3, Io = 4 };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), kind_(kind), code_(std::move(code)) {}

    ErrorKind kind() const { return kind_; }
    const std::string& code() const { return code_; }

private:
    ErrorKind kind_;
    std::string code_;
};

[[noreturn]] inline void fail_domain(const std::string& code, const std::string& detail) {
    throw Error(ErrorKind::Domain, code, detail);
}

[[noreturn]] inline void fail_spec(const std::string& code, const std::string& detail) {
    throw Error(ErrorKind::InvalidSpec, code, detail);
}

[[noreturn]] inline void fail_io(const std::string& code, const std::string& detail) {
    throw Error(ErrorKind::Io, code, detail);
}

} // namespace pmg
