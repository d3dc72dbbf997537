#pragma once

#include <stdexcept>
#include <string>

namespace bruhat {

/// Violated precondition or out-of-domain input (CLI exit code 1).
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// Enumeration exceeded a configured resource cap (CLI exit code 1).
class resource_error : public domain_error {
public:
    explicit resource_error(const std::string& what) : domain_error(what) {}
};

/// A proved invariant failed at runtime (CLI exit code 3).
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace bruhat
