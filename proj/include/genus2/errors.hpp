#pragma once

#include <stdexcept>
#include <string>

namespace genus2 {

/// Linking number is undefined at contact; thrown when two loops come
/// closer than the documented tolerance.
struct LoopsTooCloseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The projection direction for the crossing oracle hit a degeneracy
/// (parallel segment, vertex coincidence, equal depths).
struct DegenerateDirectionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Disk-piercing input is not in generic position.
struct NonGenericPositionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Scene file could not be parsed or violates a type invariant.
struct SceneFormatError : std::runtime_error {
    SceneFormatError(const std::string& what, long line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_number(line) {}
    long line_number;
};

/// Level expansion would exceed the configured component budget.
struct BudgetExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace genus2
