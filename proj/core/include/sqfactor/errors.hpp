#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sqfactor {

/// Malformed edge-list or JSON input.
class format_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller passed an argument outside an operation's domain (unknown vertex, disconnected graph, ...).
class argument_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input graph does not satisfy the structural hypotheses of a construction.
class precondition_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A derived fact that must hold under the hypotheses did not. Always a bug or a bad input that slipped past a check.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Exact search stopped before deciding.
class budget_error : public std::runtime_error {
public:
    budget_error(const std::string& what, std::uint64_t nodes_explored, std::string partial_state)
        : std::runtime_error(what), nodes_explored_(nodes_explored), partial_state_(std::move(partial_state)) {}

    std::uint64_t nodes_explored() const noexcept { return nodes_explored_; }
    const std::string& partial_state() const noexcept { return partial_state_; }

private:
    std::uint64_t nodes_explored_;
    std::string partial_state_;
};

}  // namespace sqfactor
