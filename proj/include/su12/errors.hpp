#pragma once

#include <stdexcept>
#include <string>

namespace su12 {

// Arithmetic on series/matrices of different truncation orders.
class OrderMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Inverse requested for an element that is not a unit.
class NonUnit : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidGenus : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class LengthMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An operation was called outside its domain (unstable input, zero scale, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class SearchOverflow : public std::length_error {
public:
    using std::length_error::length_error;
};

} // namespace su12
