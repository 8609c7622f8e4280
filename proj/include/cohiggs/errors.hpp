#pragma once

#include <stdexcept>
#include <string>

namespace cohiggs {

struct TowerDepthExceeded : std::runtime_error {
    explicit TowerDepthExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct IncompatibleExtension : std::runtime_error {
    explicit IncompatibleExtension(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : std::runtime_error {
    explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct DegreeExceeded : std::runtime_error {
    explicit DegreeExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroSection : std::runtime_error {
    explicit ZeroSection(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroInput : std::runtime_error {
    explicit ZeroInput(const std::string& what) : std::runtime_error(what) {}
};

struct NotASquare : std::runtime_error {
    explicit NotASquare(const std::string& what) : std::runtime_error(what) {}
};

struct ExcludedIndex : std::runtime_error {
    explicit ExcludedIndex(const std::string& what) : std::runtime_error(what) {}
};

struct SingularEvaluationPoint : std::runtime_error {
    explicit SingularEvaluationPoint(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct Unclassifiable : std::runtime_error {
    explicit Unclassifiable(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cohiggs
