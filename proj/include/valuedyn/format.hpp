#pragma once

#include "model.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace valuedyn
{

// Contents of one model file.
//
// A file carries an activation model when it has an `actions:` or `states:`
// line. It carries a declared conflict base when it has `pair:` lines, or
// when it has no activation model at all (possibly with zero pairs). When both
// are present the declared pairs must equal the derived ones.
struct Document
{
    std::vector< ValueId > values;
    std::optional< ActivationModel > model;
    std::optional< ConflictBase > declared_base;
    std::vector< ValueSet > sets;

    // Throws UnknownId.
    [[nodiscard]] const ValueSet& set( std::string_view name ) const;

    // The declared base if any, otherwise the one derived from the model.
    // Derivation may throw Condition3Violation.
    [[nodiscard]] ConflictBase conflict_base() const;

    friend bool operator==( const Document&, const Document& ) = default;
};

// Throws ParseError for syntax errors, ValidationError for everything that
// parses but violates a model invariant.
[[nodiscard]] Document parse_document( std::string_view text );

// Reads and parses a file; I/O failures are reported as ValidationError.
[[nodiscard]] Document load_document( const std::string& path );

// Canonical text: values, actions, states, exec lines for actions not
// executable everywhere, one effect line per executable cell (action-major),
// pair lines, set lines. Unchanged effects are omitted.
[[nodiscard]] std::string serialize_model( const ActivationModel& model );
[[nodiscard]] std::string serialize_document( const Document& doc );

} // namespace valuedyn
