#ifndef TOR3_ERRORS_HPP
#define TOR3_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tor3 {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero in prime field") {}
};

struct NotDivisible : Error {
    using Error::Error;
};

struct NotHomogeneous : Error {
    using Error::Error;
};

struct BadCharacteristic : Error {
    using Error::Error;
};

// Parser errors carry a 0-based offset into the input text.
struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(const std::string& what, std::size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct UnknownVariable : SyntaxError {
    UnknownVariable(const std::string& what, std::size_t pos) : SyntaxError(what, pos) {}
};

struct DegreeOutOfRange : Error {
    using Error::Error;
};

struct NotACycle : Error {
    using Error::Error;
};

struct UnboundedSocleSearch : Error {
    using Error::Error;
};

struct InvariantViolation : Error {
    using Error::Error;
};

// Wraps any pipeline-stage failure with the stage name.
struct PipelineError : Error {
    std::string stage;
    PipelineError(const std::string& stage_name, const std::string& what)
        : Error(stage_name + ": " + what), stage(stage_name) {}
};

}  // namespace tor3

#endif
