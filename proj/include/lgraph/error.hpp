#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lgraph {

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Malformed expression text. `position` is a 0-based byte offset into the input.
class ParseError : public Error
{
public:
    ParseError(const std::string& message, std::size_t position);

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// An expression was evaluated outside its domain (log of a nonpositive
/// number, division by zero, non-finite derivative, ...).
class DomainError : public Error
{
public:
    DomainError(std::string subexpression, std::vector<double> point);

    const std::string& subexpression() const noexcept { return subexpression_; }
    const std::vector<double>& point() const noexcept { return point_; }

private:
    std::string subexpression_;
    std::vector<double> point_;
};

/// Invalid caller-supplied value (bad grid, non-symmetric matrix, bad threshold).
class ArgumentError : public Error
{
public:
    using Error::Error;
};

/// Numerical failure: eigen-solver did not converge, principal-branch violation.
class NumericError : public Error
{
public:
    using Error::Error;
};

} // namespace lgraph
