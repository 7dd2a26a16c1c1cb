#ifndef PFT_ERROR_HPP_
#define PFT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace pft {

/// Library error carrying a short machine-readable code ("requires-deterministic",
/// "aperiodic-empty", ...) next to the human message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

} // namespace pft

#endif // PFT_ERROR_HPP_
