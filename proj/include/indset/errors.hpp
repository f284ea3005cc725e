#pragma once

#include <stdexcept>
#include <string>

namespace indset {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// A parameter outside its documented domain (d = 0, p > 1, ...).
class invalid_parameter : public error {
public:
    using error::error;
};

/// Graph text that does not conform to the file format.
class parse_error : public error {
public:
    parse_error(const std::string& what, int line)
        : error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Request exceeds a hard resource ceiling (enumeration cap).
class capacity_error : public error {
public:
    using error::error;
};

/// The operation's theorem does not apply to this graph (e.g. Kahn on an
/// irregular graph).
class not_applicable : public error {
public:
    using error::error;
};

/// A documented precondition is violated (isolated vertices, dependent input
/// sets, ...).
class precondition_error : public error {
public:
    using error::error;
};

/// An operation that requires a bipartite graph was given an odd cycle.
class not_bipartite_error : public error {
public:
    using error::error;
};

/// Internal invariant violated; indicates corrupted inputs or a bug.
class internal_error : public error {
public:
    using error::error;
};

} // namespace indset
