#pragma once

#include <stdexcept>
#include <string>

namespace gradalg {

/// Malformed input: unparseable files, bad indices, mismatched dimensions.
struct InvalidInput : std::runtime_error {
    explicit InvalidInput(const std::string& msg) : std::runtime_error(msg) {}
};

/// A mathematical axiom or verified identity failed. Carries a witness in the message.
struct CheckFailure : std::runtime_error {
    explicit CheckFailure(const std::string& msg) : std::runtime_error(msg) {}
};

/// An exhaustive enumeration would exceed the configured cap.
struct BoundExceeded : std::runtime_error {
    explicit BoundExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace gradalg
