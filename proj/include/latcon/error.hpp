#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace latcon {

// Root of every error thrown by the library. `kind()` is a stable tag the
// CLI prints in its single-line diagnostics.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class CycleError : public Error {
public:
    CycleError(int a, int b)
        : Error("CycleError", "relation is not antisymmetric: " + std::to_string(a) + " and " +
                                  std::to_string(b) + " are mutually related"),
          a_(a), b_(b) {}
    std::pair<int, int> witness() const { return {a_, b_}; }

private:
    int a_, b_;
};

class IndexError : public Error {
public:
    explicit IndexError(const std::string& what) : Error("IndexError", what) {}
};

class SizeError : public Error {
public:
    explicit SizeError(const std::string& what) : Error("SizeError", what) {}
};

class NotQuasiorderError : public Error {
public:
    explicit NotQuasiorderError(const std::string& what) : Error("NotQuasiorderError", what) {}
};

// Carries the first pair (in index order) that lacks a join or a meet.
class NotLatticeError : public Error {
public:
    NotLatticeError(int x, int y, bool missing_join)
        : Error("NotLatticeError", std::string("no ") + (missing_join ? "join" : "meet") + " for (" +
                                       std::to_string(x) + "," + std::to_string(y) + ")"),
          x_(x), y_(y), missing_join_(missing_join) {}
    NotLatticeError() : Error("NotLatticeError", "empty poset is not a lattice") {}

    std::pair<int, int> witness() const { return {x_, y_}; }
    bool missing_join() const { return missing_join_; }

private:
    int x_ = -1, y_ = -1;
    bool missing_join_ = false;
};

class IntervalError : public Error {
public:
    explicit IntervalError(const std::string& what) : Error("IntervalError", what) {}
};

class CapExceededError : public Error {
public:
    explicit CapExceededError(const std::string& what) : Error("CapExceededError", what) {}
};

class CatalogValidationError : public Error {
public:
    CatalogValidationError(const std::string& entry, const std::string& invariant)
        : Error("CatalogValidationError", entry + ": " + invariant) {}
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("ParseError", "line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

}  // namespace latcon
