#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace recdiv {

// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptyInput : public Error {
public:
    EmptyInput() : Error("empty input: expected a decimal number") {}
};

class NonDigitCharacter : public Error {
public:
    NonDigitCharacter(char c, std::size_t position)
        : Error("non-digit character '" + std::string(1, c) + "' at index " +
                std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class ChunkZero : public Error {
public:
    ChunkZero() : Error("chunk size must be at least 1") {}
};

class ChunkOutOfRange : public Error {
public:
    explicit ChunkOutOfRange(unsigned chunk, unsigned max)
        : Error("chunk " + std::to_string(chunk) + " out of range [1, " +
                std::to_string(max) + "]") {}
};

class NotCoprimeToTen : public Error {
public:
    explicit NotCoprimeToTen(std::uint64_t m)
        : Error("modulus " + std::to_string(m) + " shares a factor with 10") {}
};

class TrivialModulus : public Error {
public:
    TrivialModulus() : Error("modulus 1 has no witness multiplier; divisibility by 1 is always true") {}
};

class ModulusOutOfRange : public Error {
public:
    explicit ModulusOutOfRange(const std::string& what) : Error(what) {}
};

class ModulusTooLargeForScan : public Error {
public:
    explicit ModulusTooLargeForScan(std::uint64_t m, std::uint64_t max)
        : Error("modulus " + std::to_string(m) + " exceeds brute-force scan bound " +
                std::to_string(max)) {}
};

class LimitTooLarge : public Error {
public:
    explicit LimitTooLarge(std::uint64_t limit, std::uint64_t max)
        : Error("limit " + std::to_string(limit) + " exceeds maximum " + std::to_string(max)) {}
};

class UnsupportedModulus : public Error {
public:
    explicit UnsupportedModulus(std::uint64_t m)
        : Error("modulus " + std::to_string(m) +
                " is divisible by 2 or 5; factor those out and test the parts separately") {}
};

class ZeroInput : public Error {
public:
    ZeroInput() : Error("input must be at least 1") {}
};

class InvalidMultiplier : public Error {
public:
    explicit InvalidMultiplier(const std::string& what) : Error(what) {}
};

}  // namespace recdiv
