#pragma once

#include <stdexcept>
#include <string>

namespace qxmap {

// Input text could not be parsed. `line` is 1-based; 0 means "no useful
// position" (e.g. coupling JSON rejected after syntactic parse).
struct parse_error : std::runtime_error {
    int line;
    std::string token;

    parse_error(int line_, const std::string& message, std::string token_ = {})
        : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + message
                                       : message),
          line(line_),
          token(std::move(token_)) {}
};

// A circuit cannot be made legal on the given coupling map.
struct mapping_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matrix work requested beyond the supported line count.
struct dimension_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qxmap
