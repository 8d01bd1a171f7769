#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace kinv {

/// Base exception for every failure raised by the library. `kind()` is a
/// stable CamelCase tag (e.g. "NotAKnot") that the CLI prints verbatim.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(const char* kind, const std::string& what) {
    throw Error(kind, what);
}

}  // namespace kinv
