#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace foresthopf {

// Malformed names, numbers, or interchange data.
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

// Syntax or validation failure in expression text, with a byte offset.
struct ParseError : FormatError {
    ParseError(const std::string& msg, std::size_t at)
        : FormatError(msg + " at offset " + std::to_string(at)), offset(at) {}
    std::size_t offset;
};

}  // namespace foresthopf
