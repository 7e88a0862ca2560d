#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyargmax {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input vector has (numerically) zero variance: no unique maximizer can be
// amplified and the standardization step would divide by ~0.
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

class InvalidParamsError : public Error {
public:
    using Error::Error;
};

// Plaintext argument outside the domain an approximation is defined on.
class RangeError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class WidthMismatchError : public Error {
public:
    using Error::Error;
};

class BadRotationError : public Error {
public:
    using Error::Error;
};

// A calibrated value interval leaves the guaranteed domain of a polynomial
// approximation (or the configured ciphertext bound).
class RangeProofViolation : public Error {
public:
    using Error::Error;
};

// Variance collapsed somewhere along a differentiated forward pass.
class SingularityError : public Error {
public:
    using Error::Error;
};

class BadSpecError : public Error {
public:
    using Error::Error;
};

class FormatError : public Error {
public:
    FormatError(const std::string& msg, std::size_t byte_offset)
        : Error(msg + " (byte offset " + std::to_string(byte_offset) + ")"),
          offset_(byte_offset) {}

    std::size_t byte_offset() const { return offset_; }

private:
    std::size_t offset_ = 0;
};

class NonFiniteError : public Error {
public:
    NonFiniteError(const std::string& msg, std::size_t vector_index)
        : Error(msg + " (vector " + std::to_string(vector_index) + ")"),
          index_(vector_index) {}

    std::size_t vector_index() const { return index_; }

private:
    std::size_t index_ = 0;
};

}  // namespace polyargmax
