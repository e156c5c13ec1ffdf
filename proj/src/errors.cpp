#include "valuedyn/errors.hpp"
#include "valuedyn/effect.hpp"
#include "valuedyn/ids.hpp"

namespace valuedyn
{

bool is_valid_token( std::string_view token ) noexcept
{
    if ( token.empty() )
        return false;
    for ( char c : token )
    {
        const bool ok = ( c >= 'a' && c <= 'z' ) || ( c >= 'A' && c <= 'Z' ) || ( c >= '0' && c <= '9' ) || c == '_';
        if ( !ok )
            return false;
    }
    return true;
}

std::string_view to_string( Effect e ) noexcept
{
    switch ( e )
    {
    case Effect::Up:
        return "Up";
    case Effect::Down:
        return "Down";
    case Effect::Unchanged:
        break;
    }
    return "Unchanged";
}

namespace
{

std::string join_ids( const std::vector< ValueId >& ids )
{
    std::string out;
    for ( const auto& id : ids )
    {
        if ( !out.empty() )
            out += ", ";
        out += id.name();
    }
    return out;
}

std::string with_line( const std::string& what, std::optional< std::size_t > line )
{
    if ( !line )
        return what;
    return "line " + std::to_string( *line ) + ": " + what;
}

} // namespace

ParseError::ParseError( std::size_t line, std::string reason )
    : Error{ "line " + std::to_string( line ) + ": " + reason }, _line{ line }, _reason{ std::move( reason ) }
{}

ValidationError::ValidationError( const std::string& what, std::optional< std::size_t > line )
    : Error{ with_line( what, line ) }, _line{ line }
{}

Condition3Violation::Condition3Violation( ValueId value, std::vector< ValueId > partners )
    : ValidationError{ "condition 3 violated: " + value.name() + " inherently conflicts with {" + join_ids( partners ) + "}" },
      _value{ std::move( value ) }, _partners{ std::move( partners ) }
{}

UnknownId::UnknownId( std::string kind, std::string name )
    : Error{ "unknown " + kind + " '" + name + "'" }, _kind{ std::move( kind ) }, _name{ std::move( name ) }
{}

NotExecutable::NotExecutable( StateId state, ActionId action )
    : Error{ "action '" + action.name() + "' is not executable in state '" + state.name() + "'" },
      _state{ std::move( state ) }, _action{ std::move( action ) }
{}

ReflexivePair::ReflexivePair( const ValueId& value )
    : Error{ "reflexive pair (" + value.name() + ", " + value.name() + "): two distinct values required" }
{}

TraceError::TraceError( std::size_t step, std::string reason )
    : Error{ "step " + std::to_string( step ) + ": " + reason }, _step{ step }, _reason{ std::move( reason ) }
{}

} // namespace valuedyn
