#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aggclone {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text: files, terms, element names.
struct ParseError : Error {
    int line = 0;
    int column = 0;

    explicit ParseError(const std::string& msg) : Error(msg) {}
    ParseError(const std::string& msg, int line_, int column_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ")"),
          line(line_), column(column_) {}
};

// The given order data does not describe a bounded lattice.
struct StructuralError : Error {
    using Error::Error;
};
struct CycleInCovers : StructuralError {
    using StructuralError::StructuralError;
};
struct NotALattice : StructuralError {
    using StructuralError::StructuralError;
};
struct NotBounded : StructuralError {
    using StructuralError::StructuralError;
};

// A configured resource limit would be exceeded.
struct SizeGuardExceeded : Error {
    using Error::Error;
};

// Precondition violation on otherwise well-formed values.
struct DomainError : Error {
    using Error::Error;
};
struct NotAggregation : DomainError {
    using DomainError::DomainError;
};
struct LatticeMismatch : DomainError {
    using DomainError::DomainError;
};

// Resource limits shared by table construction, enumeration and closure.
struct Limits {
    std::size_t max_lattice_size = 4096;
    // Cells per function table; also caps the total cell count visited by
    // naive enumeration (candidate tables times cells per table).
    std::size_t max_cells = 1'000'000;
    // Output tables per enumeration or closure run.
    std::size_t max_tables = 100'000;
};

} // namespace aggclone
