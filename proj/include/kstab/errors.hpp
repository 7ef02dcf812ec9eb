#pragma once

#include <stdexcept>

namespace kstab {

// Malformed input text (descriptor files, rational literals embedded in
// them). Precondition violations on well-formed data use
// std::invalid_argument / std::domain_error instead.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace kstab
