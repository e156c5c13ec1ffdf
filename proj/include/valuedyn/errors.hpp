#pragma once

#include "ids.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace valuedyn
{

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Syntax error in a model file. Lines are 1-based.
class ParseError : public Error
{
    std::size_t _line;
    std::string _reason;

public:
    ParseError( std::size_t line, std::string reason );

    [[nodiscard]] std::size_t line() const noexcept { return _line; }
    [[nodiscard]] const std::string& reason() const noexcept { return _reason; }
};

// Structurally well-formed input that violates a model invariant.
class ValidationError : public Error
{
    std::optional< std::size_t > _line;

public:
    explicit ValidationError( const std::string& what, std::optional< std::size_t > line = std::nullopt );

    [[nodiscard]] std::optional< std::size_t > line() const noexcept { return _line; }
};

// A value has more than one inherent-conflict partner.
class Condition3Violation : public ValidationError
{
    ValueId _value;
    std::vector< ValueId > _partners;

public:
    Condition3Violation( ValueId value, std::vector< ValueId > partners );

    [[nodiscard]] const ValueId& value() const noexcept { return _value; }
    [[nodiscard]] const std::vector< ValueId >& partners() const noexcept { return _partners; }
};

class UnknownId : public Error
{
    std::string _kind;
    std::string _name;

public:
    UnknownId( std::string kind, std::string name );

    [[nodiscard]] const std::string& kind() const noexcept { return _kind; }
    [[nodiscard]] const std::string& name() const noexcept { return _name; }
};

class NotExecutable : public Error
{
    StateId _state;
    ActionId _action;

public:
    NotExecutable( StateId state, ActionId action );

    [[nodiscard]] const StateId& state() const noexcept { return _state; }
    [[nodiscard]] const ActionId& action() const noexcept { return _action; }
};

class ReflexivePair : public Error
{
public:
    explicit ReflexivePair( const ValueId& value );
};

class MergeConflict : public Error
{
public:
    using Error::Error;
};

class DomainMismatch : public Error
{
public:
    using Error::Error;
};

// A trace step failed; step() is the 0-based index into the step sequence.
class TraceError : public Error
{
    std::size_t _step;
    std::string _reason;

public:
    TraceError( std::size_t step, std::string reason );

    [[nodiscard]] std::size_t step() const noexcept { return _step; }
    [[nodiscard]] const std::string& reason() const noexcept { return _reason; }
};

} // namespace valuedyn
