#pragma once

#include <stdexcept>
#include <string>

namespace afsi {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. `line` is 1-based and refers to the physical line.
class ParseError : public Error {
public:
    ParseError(std::string role, int line, std::string column, std::string message);

    const std::string& role() const noexcept { return role_; }
    int line() const noexcept { return line_; }
    const std::string& column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::string role_;
    int line_;
    std::string column_;
    std::string message_;
};

/// A series with no spread (std = 0 or max = min) was asked to be standardized.
class ZeroDispersionError : public Error {
public:
    explicit ZeroDispersionError(std::string subject)
        : Error("zero dispersion: " + subject), subject_(std::move(subject)) {}

    const std::string& subject() const noexcept { return subject_; }

private:
    std::string subject_;
};

/// Too few observations for the requested statistic.
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

/// Unknown indicator, unknown year or an indicator absent from a panel.
class LookupError : public Error {
public:
    using Error::Error;
};

/// Series with different year axes were combined.
class AxisMismatchError : public Error {
public:
    using Error::Error;
};

}  // namespace afsi
