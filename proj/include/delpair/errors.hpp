#pragma once

#include <stdexcept>
#include <string>

namespace delpair {

// All library errors carry a stable machine-readable code alongside the
// human-readable message; the CLI maps the code into its JSON error object.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

struct ParseError : Error {
    ParseError(const std::string& msg, int line = 0, int col = 0)
        : Error("ParseError", msg), line(line), col(col) {}
    int line;
    int col;
};

struct HomogeneityError : Error {
    explicit HomogeneityError(const std::string& msg) : Error("HomogeneityError", msg) {}
};

struct UnsupportedRing : Error {
    explicit UnsupportedRing(const std::string& msg) : Error("UnsupportedRing", msg) {}
};

struct UnsupportedDimension : Error {
    explicit UnsupportedDimension(const std::string& msg) : Error("UnsupportedDimension", msg) {}
};

struct SingularInput : Error {
    explicit SingularInput(const std::string& msg) : Error("SingularInput", msg) {}
};

struct IntegralityViolation : Error {
    explicit IntegralityViolation(const std::string& msg) : Error("IntegralityViolation", msg) {}
};

struct NotModuleLinear : Error {
    explicit NotModuleLinear(const std::string& msg) : Error("NotModuleLinear", msg) {}
};

struct SpecializationPole : Error {
    explicit SpecializationPole(const std::string& msg) : Error("SpecializationPole", msg) {}
};

struct ZeroAtInfinity : Error {
    explicit ZeroAtInfinity(const std::string& msg) : Error("ZeroAtInfinity", msg) {}
};

struct ArityMismatch : Error {
    explicit ArityMismatch(const std::string& msg) : Error("ArityMismatch", msg) {}
};

struct NotCertified : Error {
    explicit NotCertified(const std::string& msg) : Error("NotCertified", msg) {}
};

struct ChartObstruction : Error {
    explicit ChartObstruction(const std::string& msg) : Error("ChartObstruction", msg) {}
};

struct InvalidAlgebra : Error {
    explicit InvalidAlgebra(const std::string& msg) : Error("InvalidAlgebra", msg) {}
};

struct InvalidSection : Error {
    explicit InvalidSection(const std::string& msg) : Error("InvalidSection", msg) {}
};

}  // namespace delpair
