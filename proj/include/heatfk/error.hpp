#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace heatfk {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Arguments outside an operation's stated domain.
class DomainError : public Error {
public:
    using Error::Error;
};

// Malformed graph or config files.
class SchemaError : public Error {
public:
    using Error::Error;
};

// Results that cannot be trusted at double precision.
class PrecisionError : public Error {
public:
    using Error::Error;
};

// A theorem checker refused to run; carries the failed clauses.
class HypothesisError : public Error {
public:
    explicit HypothesisError(std::vector<std::string> failed)
        : Error(join(failed)), failed_(std::move(failed)) {}

    const std::vector<std::string>& failed_clauses() const { return failed_; }

private:
    static std::string join(const std::vector<std::string>& items) {
        std::string out = "hypothesis audit failed:";
        for (const auto& s : items) out += " [" + s + "]";
        return out;
    }

    std::vector<std::string> failed_;
};

} // namespace heatfk
