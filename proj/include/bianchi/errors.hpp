#pragma once

#include <stdexcept>
#include <string>

namespace bianchi {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// d is not a squarefree positive integer.
class InvalidDiscriminant : public Error {
public:
    using Error::Error;
};

// Malformed rational or JSON input.
class ParseError : public Error {
public:
    using Error::Error;
};

class NotCoprime : public Error {
public:
    using Error::Error;
};

class NotPositiveDefinite : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

// An exact inequality that must hold by construction was violated.
class CheckFailure : public Error {
public:
    using Error::Error;
};

} // namespace bianchi
