#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cerf {

/// Failure carrying a stable, machine-readable code (e.g. "NOT_IN_SPAN").
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)), message_(message) {}

    const std::string& code() const noexcept { return code_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::string code_;
    std::string message_;
};

struct Issue {
    std::string code;
    std::string message;

    bool operator==(const Issue&) const = default;
};

/// Accumulates validation failures instead of throwing on the first one.
class ValidationReport {
public:
    void add(std::string code, std::string message) {
        issues_.push_back({std::move(code), std::move(message)});
    }
    void merge(const ValidationReport& other, const std::string& prefix = {}) {
        for (const auto& issue : other.issues_)
            issues_.push_back({issue.code, prefix + issue.message});
    }

    bool ok() const noexcept { return issues_.empty(); }
    const std::vector<Issue>& issues() const noexcept { return issues_; }
    bool has(const std::string& code) const {
        for (const auto& issue : issues_)
            if (issue.code == code) return true;
        return false;
    }

    /// Throws the first issue as an Error when the report is not clean.
    void throw_if_failed() const {
        if (!ok()) throw Error(issues_.front().code, issues_.front().message);
    }

private:
    std::vector<Issue> issues_;
};

} // namespace cerf
