#pragma once

#include <stdexcept>
#include <string>

namespace bbpe {

// Base class for all toolkit errors. CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class MalformedTokenError : public Error {
public:
    using Error::Error;
};

class MalformedLineError : public Error {
public:
    using Error::Error;
};

class DuplicateTokenError : public Error {
public:
    using Error::Error;
};

class VocabOverflowError : public Error {
public:
    using Error::Error;
};

class InvalidUtf8Error : public Error {
public:
    using Error::Error;
};

class OrphanTrailingError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace bbpe
