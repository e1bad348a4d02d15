// Error types shared across the workbench modules. Analysis-level negative
// verdicts (a derivation failing a check, points on different strata) are
// distinct from input/usage errors; the CLI maps the former to exit code 2
// and the latter to exit code 1.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace workbench {

class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// Input/usage errors (CLI exit 1).
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& expected, const std::string& message)
        : Error("SyntaxError", message), position_(position), expected_(expected) {}

    std::size_t position() const { return position_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

class UnknownVariableError : public Error {
public:
    UnknownVariableError(std::string name, const std::string& message)
        : Error("UnknownVariable", message), name_(std::move(name)) {}

    const std::string& variable() const { return name_; }

private:
    std::string name_;
};

struct VariableMismatchError : Error {
    explicit VariableMismatchError(const std::string& m) : Error("VariableMismatch", m) {}
};
struct InvalidDataError : Error {
    explicit InvalidDataError(const std::string& m) : Error("InvalidData", m) {}
};
struct ZeroPolynomialError : Error {
    explicit ZeroPolynomialError(const std::string& m) : Error("ZeroPolynomial", m) {}
};
struct ZeroDerivationError : Error {
    explicit ZeroDerivationError(const std::string& m) : Error("ZeroDerivation", m) {}
};
struct ZeroDenominatorError : Error {
    explicit ZeroDenominatorError(const std::string& m) : Error("ZeroDenominator", m) {}
};
struct DegreeOutOfRangeError : Error {
    explicit DegreeOutOfRangeError(const std::string& m) : Error("DegreeOutOfRange", m) {}
};
struct WrongTypeError : Error {
    explicit WrongTypeError(const std::string& m) : Error("WrongType", m) {}
};
struct SamePositionError : Error {
    explicit SamePositionError(const std::string& m) : Error("SamePosition", m) {}
};
struct PositionOutOfBlockError : Error {
    explicit PositionOutOfBlockError(const std::string& m) : Error("PositionOutOfBlock", m) {}
};
struct MissingInvariantError : Error {
    explicit MissingInvariantError(const std::string& m) : Error("MissingInvariant", m) {}
};
struct SchemaError : Error {
    SchemaError(std::string path, const std::string& m)
        : Error("SchemaError", m), path_(std::move(path)) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};
struct UnknownCommandError : Error {
    explicit UnknownCommandError(const std::string& m) : Error("UnknownCommand", m) {}
};
struct IoError : Error {
    explicit IoError(const std::string& m) : Error("IoError", m) {}
};

// Analysis-level negatives (CLI exit 2).
struct IdealNotPreservedError : Error {
    explicit IdealNotPreservedError(const std::string& m) : Error("IdealNotPreserved", m) {}
};
struct NotLndError : Error {
    explicit NotLndError(const std::string& m) : Error("NotLND", m) {}
};
struct NotOnVarietyError : Error {
    explicit NotOnVarietyError(const std::string& m) : Error("NotOnVariety", m) {}
};
struct DifferentStrataError : Error {
    explicit DifferentStrataError(const std::string& m) : Error("DifferentStrata", m) {}
};
struct EmptySupportError : Error {
    explicit EmptySupportError(const std::string& m) : Error("EmptySupport", m) {}
};
struct NumericFailureError : Error {
    explicit NumericFailureError(const std::string& m) : Error("NumericFailure", m) {}
};

}  // namespace workbench
