#pragma once

#include <stdexcept>
#include <string>

namespace mub {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownVertex : public Error {
public:
    explicit UnknownVertex(const std::string& label)
        : Error("unknown vertex '" + label + "'"), label_(label) {}
    const std::string& label() const noexcept { return label_; }

private:
    std::string label_;
};

// Text input that does not follow one of the file formats.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column = 0)
        : Error(format(what, line, column)), line_(line), column_(column) {}
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    static std::string format(const std::string& what, int line, int column) {
        std::string s = "line " + std::to_string(line);
        if (column > 0)
            s += ", column " + std::to_string(column);
        return s + ": " + what;
    }
    int line_;
    int column_;
};

class CoverageError : public Error {
public:
    using Error::Error;
};

class UnsupportedConstruction : public Error {
public:
    using Error::Error;
};

class SizeLimitExceeded : public Error {
public:
    using Error::Error;
};

} // namespace mub
