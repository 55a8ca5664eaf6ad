#pragma once

#include <stdexcept>
#include <string>

namespace subtile {

// Base for all toolkit errors. Code paths that answer a mathematical
// question with "no" do not throw; exceptions mean the question itself
// was malformed (bad input, violated precondition, solver failure).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class EmptyRegionError : public Error {
public:
    explicit EmptyRegionError(const std::string& what) : Error(what) {}
};

class DimensionMismatchError : public Error {
public:
    explicit DimensionMismatchError(const std::string& what) : Error(what) {}
};

// Requested multitile level below the subtiling level of the input.
class LevelExceededError : public Error {
public:
    explicit LevelExceededError(const std::string& what) : Error(what) {}
};

class NotExactMultitileError : public Error {
public:
    explicit NotExactMultitileError(const std::string& what) : Error(what) {}
};

class NonHermitianError : public Error {
public:
    explicit NonHermitianError(const std::string& what) : Error(what) {}
};

class SizeExceededError : public Error {
public:
    explicit SizeExceededError(const std::string& what) : Error(what) {}
};

// A documented operation precondition was violated (e.g. asking for fewer
// shifts than the subtiling level, where no frame can exist).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

// line 0 means "no specific line" (whole-file or non-file input).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what), line_(0) {}
    ParseError(const std::string& what, int line)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

} // namespace subtile
