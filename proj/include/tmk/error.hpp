#ifndef TMK_ERROR_HPP
#define TMK_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace tmk {

/// Library error carrying a stable machine-readable code ("ZeroVector",
/// "DimensionMismatch", ...) alongside the human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

}  // namespace tmk

#endif
