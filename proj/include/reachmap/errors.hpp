#pragma once

#include <stdexcept>
#include <string>

namespace reachmap {

// Base for all domain errors. `error_class()` is the stable machine-parsable
// identifier the CLI prints; messages are free-form human text.
class Error : public std::runtime_error {
public:
    Error(std::string error_class, const std::string& message)
        : std::runtime_error(message), class_(std::move(error_class)) {}

    const std::string& error_class() const { return class_; }

private:
    std::string class_;
};

class InvalidArgumentError : public Error {
public:
    explicit InvalidArgumentError(const std::string& msg) : Error("invalid-argument", msg) {}
};

// Bad or incomplete input data (skeleton recordings, logs).
class IngestionError : public Error {
public:
    explicit IngestionError(const std::string& msg) : Error("ingestion", msg) {}
};

class NumericDegeneracyError : public Error {
public:
    explicit NumericDegeneracyError(const std::string& msg) : Error("numeric-degeneracy", msg) {}
};

class MissingSegmentError : public Error {
public:
    explicit MissingSegmentError(const std::string& msg) : Error("missing-segment", msg) {}
};

class InsufficientDataError : public Error {
public:
    explicit InsufficientDataError(const std::string& msg) : Error("insufficient-data", msg) {}
};

// Joint lattice would exceed the configured cap; message carries the estimate.
class LatticeTooLargeError : public Error {
public:
    LatticeTooLargeError(const std::string& msg, unsigned long long estimated_points)
        : Error("lattice-too-large", msg), estimated_points_(estimated_points) {}

    unsigned long long estimated_points() const { return estimated_points_; }

private:
    unsigned long long estimated_points_;
};

class VersionMismatchError : public Error {
public:
    explicit VersionMismatchError(const std::string& msg) : Error("version-mismatch", msg) {}
};

class CorruptFileError : public Error {
public:
    explicit CorruptFileError(const std::string& msg) : Error("corrupt-file", msg) {}
};

class ChecksumError : public Error {
public:
    explicit ChecksumError(const std::string& msg) : Error("checksum-mismatch", msg) {}
};

class IncompatibleMapsError : public Error {
public:
    explicit IncompatibleMapsError(const std::string& msg) : Error("incompatible-maps", msg) {}
};

class UndefinedBaselineError : public Error {
public:
    explicit UndefinedBaselineError(const std::string& msg) : Error("undefined-baseline", msg) {}
};

class NoCommonRegionError : public Error {
public:
    explicit NoCommonRegionError(const std::string& msg) : Error("no-common-region", msg) {}
};

class EmptySelectionError : public Error {
public:
    explicit EmptySelectionError(const std::string& msg) : Error("empty-selection", msg) {}
};

// Point set spans an affine subspace of dimension < 3; carries the rank.
class DegenerateHullError : public Error {
public:
    DegenerateHullError(const std::string& msg, int rank)
        : Error("degenerate-hull", msg), rank_(rank) {}

    int rank() const { return rank_; }

private:
    int rank_;
};

class InsufficientRegionError : public Error {
public:
    explicit InsufficientRegionError(const std::string& msg) : Error("insufficient-region", msg) {}
};

class InvalidEventError : public Error {
public:
    explicit InvalidEventError(const std::string& msg) : Error("invalid-event", msg) {}
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error("config", msg) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error("io", msg) {}
};

}  // namespace reachmap
