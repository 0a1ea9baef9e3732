#pragma once

#include <stdexcept>
#include <string>

namespace stacksort {

// Malformed user input (bad permutation string, bad composition, hook
// endpoints off the diagram) is reported as std::invalid_argument.

// A computation refused because it would exceed a configured cap.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// An unvalidated option was requested in strict mode.
class configuration_error : public std::runtime_error {
public:
    explicit configuration_error(const std::string& what) : std::runtime_error(what) {}
};

// A numeric routine lost its certification (bracket failure, cross-check
// disagreement, a rational that should have been an integer).
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace stacksort
