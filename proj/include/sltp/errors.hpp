#pragma once

#include <stdexcept>
#include <string>

namespace sltp {

// Thrown when a state that the algorithms guarantee impossible is reached.
// Callers should treat this as a bug in the library, not bad input.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// Malformed input documents (space files, molecule files, rational literals).
struct io_error : std::runtime_error {
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sltp
