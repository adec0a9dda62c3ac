#ifndef GRAPHREG_ERROR_HPP
#define GRAPHREG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace graphreg {

// Error with a stable machine-readable code ("invalid-weight",
// "disconnected-graph", ...) plus a human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

} // namespace graphreg

#endif
