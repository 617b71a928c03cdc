#pragma once

#include <stdexcept>
#include <string>

namespace itp {

// Bad or unparsable user input (graph files, instances, flags).
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, int line = -1)
        : std::runtime_error(line >= 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// A configurable guard was hit (oracle size guards, nd cap, search budgets).
// Deliberately distinct from infeasibility, which is a result, not an error.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A structural property that the algorithms guarantee was violated at runtime.
// Reaching this indicates a bug, never bad input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void check_invariant(bool ok, const std::string& what) {
    if (!ok) throw InvariantViolation(what);
}

}  // namespace itp
