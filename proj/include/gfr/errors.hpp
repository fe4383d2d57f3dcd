#pragma once

#include <stdexcept>
#include <string>

namespace gfr {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SelfLoopError : Error {
    explicit SelfLoopError(const std::string& v)
        : Error("self-loop on vertex '" + v + "'"), vertex(v) {}
    std::string vertex;
};

struct UnknownVertexError : Error {
    explicit UnknownVertexError(const std::string& v)
        : Error("unknown vertex '" + v + "'"), vertex(v) {}
    std::string vertex;
};

struct TooLargeError : Error {
    explicit TooLargeError(const std::string& what_) : Error(what_) {}
};

struct BadParamError : Error {
    explicit BadParamError(const std::string& what_) : Error(what_) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& what_) : Error(what_) {}
};

struct PreconditionError : Error {
    explicit PreconditionError(const std::string& hypothesis_)
        : Error("precondition violated: " + hypothesis_), hypothesis(hypothesis_) {}
    std::string hypothesis;
};

struct ParseError : Error {
    ParseError(int line_, int col_, const std::string& message_)
        : Error("parse error at " + std::to_string(line_) + ":" + std::to_string(col_) +
                ": " + message_),
          line(line_), col(col_), message(message_) {}
    int line;
    int col;
    std::string message;
};

} // namespace gfr
