#pragma once

#include <stdexcept>
#include <string>

namespace regscore {

// Error taxonomy mirrored by the CLI exit codes: usage -> 1, data -> 2, budget -> 3.
class Error : public std::runtime_error {
public:
    enum class Kind { usage, data, budget, internal };

    Error(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

inline Error usage_error(const std::string& msg) { return {Error::Kind::usage, msg}; }
inline Error data_error(const std::string& msg) { return {Error::Kind::data, msg}; }
inline Error budget_error(const std::string& msg) { return {Error::Kind::budget, msg}; }

}  // namespace regscore
