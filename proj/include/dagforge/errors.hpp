#pragma once

#include <stdexcept>
#include <string>

namespace dagforge {

// File could not be opened / written.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File content is malformed; message carries the offending line or key.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace dagforge
