#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dicolor {

// Base for all library errors. Callers that only care about "bad input"
// can catch this; the CLI maps subclasses onto exit codes.
class error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class invalid_spec_error : public error {
   public:
    using error::error;
};

// A documented precondition of an operation does not hold.
class precondition_error : public error {
   public:
    using error::error;
};

class parse_error : public error {
   public:
    parse_error(const std::string& what, std::size_t line = 0)
        : error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

   private:
    std::size_t line_;
};

// Memory / key-width / export caps.
class capacity_error : public error {
   public:
    capacity_error(const std::string& what, std::size_t count = 0) : error(what), count_(count) {}

    std::size_t count() const noexcept { return count_; }

   private:
    std::size_t count_;
};

}  // namespace dicolor
