#pragma once

#include <stdexcept>
#include <string>

namespace pavcf {

enum class errc {
    invalid_argument,
    limit_exceeded,
    internal,
};

/// Library error carrying a machine-readable code next to the message.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
    throw error(code, msg);
}

} // namespace pavcf
