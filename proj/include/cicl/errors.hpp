#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cicl {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad arguments to an operation (violated precondition).
class ArgumentError : public Error {
public:
    using Error::Error;
};

// Malformed input data; carries the 1-based line number of the offending line.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Structurally valid input that violates a domain invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

// All answers of a post share one score; no preference signal to pair on.
class NoSignalError : public Error {
public:
    using Error::Error;
};

// Evaluator-based pairing found no passing or no failing candidate.
class NoContrastError : public Error {
public:
    using Error::Error;
};

// A post cannot yield a constraint task (too few eligible words); skip it.
class TaskSkipError : public Error {
public:
    using Error::Error;
};

// Provider failed after exhausting retries; carries the last status seen.
class ProviderError : public Error {
public:
    explicit ProviderError(const std::string& message, int last_status = 0)
        : Error(message), last_status_(last_status) {}
    int last_status() const { return last_status_; }

private:
    int last_status_;
};

// Provider returned empty or unusable text.
class DegenerateOutputError : public Error {
public:
    using Error::Error;
};

// Judge reply contained no parseable number.
class JudgeParseError : public Error {
public:
    using Error::Error;
};

// Embedding with zero norm; cosine undefined.
class DegenerateEmbeddingError : public Error {
public:
    using Error::Error;
};

// Experiment configuration is inconsistent or incomplete.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Filesystem trouble (unreadable input, unwritable output directory).
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace cicl
