#pragma once

#include <stdexcept>
#include <string>

#include "vapi/java/ast.hpp"

namespace vapi::java {

// Fatal per-file parse failure; the pipeline skips the file with a notice.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string path, int line, int col, const std::string& message)
        : std::runtime_error(path + ":" + std::to_string(line) + ":" + std::to_string(col) +
                             ": " + message),
          path_(std::move(path)), line_(line), col_(col) {}

    const std::string& path() const { return path_; }
    int line() const { return line_; }
    int col() const { return col_; }

private:
    std::string path_;
    int line_;
    int col_;
};

// Parses one Java source file into a compilation unit. Statement forms
// outside the supported subset degrade to opaque Unknown statements;
// structural problems (malformed declarations, unbalanced braces) throw.
CompilationUnit parse_source(const std::string& text, const std::string& path);

} // namespace vapi::java
