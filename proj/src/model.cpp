#include "valuedyn/model.hpp"

#include <algorithm>

namespace valuedyn
{

namespace
{

template < typename Id >
std::map< Id, std::size_t > index_universe( const std::vector< Id >& ids, const char* kind )
{
    std::map< Id, std::size_t > index;
    for ( std::size_t i = 0; i < ids.size(); ++i )
    {
        if ( !is_valid_token( ids[ i ].name() ) )
            throw ValidationError{ std::string{ "invalid " } + kind + " identifier '" + ids[ i ].name() + "'" };
        if ( !index.emplace( ids[ i ], i ).second )
            throw ValidationError{ std::string{ "duplicate " } + kind + " '" + ids[ i ].name() + "'" };
    }
    return index;
}

template < typename Id >
std::optional< std::size_t > lookup( const std::map< Id, std::size_t >& index, const Id& id )
{
    if ( auto it = index.find( id ); it != index.end() )
        return it->second;
    return std::nullopt;
}

} // namespace

ActivationModel::ActivationModel( std::vector< ValueId > values,
                                  std::vector< ActionId > actions,
                                  std::vector< StateId > states,
                                  const std::map< ActionId, std::vector< StateId > >& executable,
                                  const std::vector< CellSpec >& cells )
    : _values{ std::move( values ) }, _actions{ std::move( actions ) }, _states{ std::move( states ) }
{
    _value_index = index_universe( _values, "value" );
    _action_index = index_universe( _actions, "action" );
    _state_index = index_universe( _states, "state" );

    const std::size_t n_states = _states.size();
    _executable.assign( _actions.size() * n_states, true );

    for ( const auto& [ action, allowed ] : executable )
    {
        const auto a = find_action( action );
        if ( !a )
            throw ValidationError{ "executability declared for unknown action '" + action.name() + "'" };
        std::fill_n( _executable.begin() + static_cast< std::ptrdiff_t >( *a * n_states ), n_states, false );
        for ( const auto& state : allowed )
        {
            const auto s = find_state( state );
            if ( !s )
                throw ValidationError{ "action '" + action.name() + "' declared executable in unknown state '" +
                                       state.name() + "'" };
            if ( _executable[ *a * n_states + *s ] )
                throw ValidationError{ "state '" + state.name() + "' listed twice for action '" + action.name() + "'" };
            _executable[ *a * n_states + *s ] = true;
        }
    }

    _effects.assign( _actions.size() * n_states * _values.size(), Effect::Unchanged );
    std::vector< bool > seen( _actions.size() * n_states, false );

    for ( const auto& spec : cells )
    {
        const auto s = find_state( spec.state );
        const auto a = find_action( spec.action );
        if ( !s )
            throw ValidationError{ "effect declared for unknown state '" + spec.state.name() + "'" };
        if ( !a )
            throw ValidationError{ "effect declared for unknown action '" + spec.action.name() + "'" };
        if ( !is_executable( *s, *a ) )
            throw ValidationError{ "effect declared on non-executable cell (" + spec.state.name() + ", " +
                                   spec.action.name() + ")" };
        const std::size_t slot = *a * n_states + *s;
        if ( seen[ slot ] )
            throw ValidationError{ "duplicate effect cell (" + spec.state.name() + ", " + spec.action.name() + ")" };
        seen[ slot ] = true;

        std::vector< bool > assigned( _values.size(), false );
        for ( const auto& [ value, effect ] : spec.effects )
        {
            const auto v = find_value( value );
            if ( !v )
                throw ValidationError{ "effect cell (" + spec.state.name() + ", " + spec.action.name() +
                                       ") mentions unknown value '" + value.name() + "'" };
            if ( assigned[ *v ] )
                throw ValidationError{ "value '" + value.name() + "' given twice in cell (" + spec.state.name() + ", " +
                                       spec.action.name() + ")" };
            assigned[ *v ] = true;
            _effects[ slot * _values.size() + *v ] = effect;
        }
    }

    for ( std::size_t a = 0; a < _actions.size(); ++a )
        for ( std::size_t s = 0; s < n_states; ++s )
            if ( is_executable( s, a ) )
                _cells.push_back( Cell{ s, a } );
}

std::optional< std::size_t > ActivationModel::find_value( const ValueId& v ) const { return lookup( _value_index, v ); }
std::optional< std::size_t > ActivationModel::find_action( const ActionId& a ) const { return lookup( _action_index, a ); }
std::optional< std::size_t > ActivationModel::find_state( const StateId& s ) const { return lookup( _state_index, s ); }

std::size_t ActivationModel::value_index( const ValueId& v ) const
{
    if ( auto i = find_value( v ) )
        return *i;
    throw UnknownId{ "value", v.name() };
}

std::size_t ActivationModel::action_index( const ActionId& a ) const
{
    if ( auto i = find_action( a ) )
        return *i;
    throw UnknownId{ "action", a.name() };
}

std::size_t ActivationModel::state_index( const StateId& s ) const
{
    if ( auto i = find_state( s ) )
        return *i;
    throw UnknownId{ "state", s.name() };
}

bool ActivationModel::is_executable( const StateId& s, const ActionId& a ) const
{
    return is_executable( state_index( s ), action_index( a ) );
}

std::vector< StateId > ActivationModel::executable_states( const ActionId& a ) const
{
    const std::size_t action = action_index( a );
    std::vector< StateId > out;
    for ( std::size_t s = 0; s < _states.size(); ++s )
        if ( is_executable( s, action ) )
            out.push_back( _states[ s ] );
    return out;
}

bool ActivationModel::executable_everywhere( std::size_t action ) const noexcept
{
    for ( std::size_t s = 0; s < _states.size(); ++s )
        if ( !is_executable( s, action ) )
            return false;
    return true;
}

ActivationModel::Cell ActivationModel::require_cell( const StateId& s, const ActionId& a ) const
{
    const Cell cell{ state_index( s ), action_index( a ) };
    if ( !is_executable( cell.state, cell.action ) )
        throw NotExecutable{ s, a };
    return cell;
}

Effect ActivationModel::effect_of( const StateId& s, const ActionId& a, const ValueId& v ) const
{
    const Cell cell = require_cell( s, a );
    return effect_at( cell, value_index( v ) );
}

bool operator==( const ActivationModel& lhs, const ActivationModel& rhs )
{
    // The index maps and the cell list are functions of the fields below.
    return lhs._values == rhs._values && lhs._actions == rhs._actions && lhs._states == rhs._states &&
           lhs._executable == rhs._executable && lhs._effects == rhs._effects;
}

bool ValueSet::contains( const ValueId& v ) const
{
    return std::find( members.begin(), members.end(), v ) != members.end();
}

ConflictBase::ConflictBase( std::vector< ValueId > universe, const std::vector< std::pair< ValueId, ValueId > >& pairs )
    : _universe{ std::move( universe ) }
{
    _index = index_universe( _universe, "value" );
    _partner.assign( _universe.size(), std::nullopt );

    for ( const auto& [ first, second ] : pairs )
    {
        const auto i = lookup( _index, first );
        const auto j = lookup( _index, second );
        if ( !i )
            throw ValidationError{ "pair mentions unknown value '" + first.name() + "'" };
        if ( !j )
            throw ValidationError{ "pair mentions unknown value '" + second.name() + "'" };
        if ( *i == *j )
            throw ValidationError{ "reflexive pair {" + first.name() + ", " + second.name() + "}" };
        if ( _partner[ *i ] && *_partner[ *i ] == *j )
            throw ValidationError{ "duplicate pair {" + first.name() + ", " + second.name() + "}" };
        for ( auto [ self, other ] : { std::pair{ *i, *j }, std::pair{ *j, *i } } )
        {
            if ( _partner[ self ] )
                throw Condition3Violation{ _universe[ self ], { _universe[ *_partner[ self ] ], _universe[ other ] } };
        }
        _partner[ *i ] = *j;
        _partner[ *j ] = *i;
    }
}

std::vector< std::pair< ValueId, ValueId > > ConflictBase::pairs() const
{
    std::vector< std::pair< ValueId, ValueId > > out;
    for ( std::size_t i = 0; i < _universe.size(); ++i )
        if ( _partner[ i ] && *_partner[ i ] > i )
            out.emplace_back( _universe[ i ], _universe[ *_partner[ i ] ] );
    return out;
}

std::vector< ValueId > ConflictBase::conflict_set() const
{
    std::vector< ValueId > out;
    for ( std::size_t i = 0; i < _universe.size(); ++i )
        if ( _partner[ i ] )
            out.push_back( _universe[ i ] );
    return out;
}

std::optional< ValueId > ConflictBase::complement( const ValueId& v ) const
{
    const auto i = lookup( _index, v );
    if ( !i )
        throw UnknownId{ "value", v.name() };
    if ( const auto& p = _partner[ *i ] )
        return _universe[ *p ];
    return std::nullopt;
}

} // namespace valuedyn
