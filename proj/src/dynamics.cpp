#include "valuedyn/dynamics.hpp"

namespace valuedyn
{

ValueStateVector ValueStateVector::zeros( const ActivationModel& model )
{
    std::map< ValueId, std::int64_t > levels;
    for ( const auto& v : model.values() )
        levels.emplace( v, 0 );
    return ValueStateVector{ std::move( levels ) };
}

std::int64_t ValueStateVector::at( const ValueId& v ) const
{
    if ( auto it = _levels.find( v ); it != _levels.end() )
        return it->second;
    throw UnknownId{ "value", v.name() };
}

bool ValueStateVector::matches( const ActivationModel& model ) const
{
    if ( _levels.size() != model.values().size() )
        return false;
    for ( const auto& v : model.values() )
        if ( !_levels.contains( v ) )
            return false;
    return true;
}

ValueStateVector apply_action( const ActivationModel& model, const ValueStateVector& vs, const StateId& s,
                               const ActionId& a )
{
    if ( !vs.matches( model ) )
        throw DomainMismatch{ "value state vector does not cover exactly the model's values" };
    const auto cell = model.require_cell( s, a );
    ValueStateVector next = vs;
    const auto effects = model.cell_effects( cell );
    for ( std::size_t v = 0; v < effects.size(); ++v )
    {
        const auto& id = model.values()[ v ];
        next.set( id, vs.at( id ) + delta( effects[ v ] ) );
    }
    return next;
}

std::vector< ValueStateVector > run_trace( const ActivationModel& model, const ValueStateVector& initial,
                                           std::span< const Step > steps )
{
    if ( !initial.matches( model ) )
        throw DomainMismatch{ "initial value state vector does not cover exactly the model's values" };
    std::vector< ValueStateVector > trace;
    trace.reserve( steps.size() + 1 );
    trace.push_back( initial );
    for ( std::size_t i = 0; i < steps.size(); ++i )
    {
        try
        {
            trace.push_back( apply_action( model, trace.back(), steps[ i ].state, steps[ i ].action ) );
        }
        catch ( const Error& e )
        {
            throw TraceError{ i, e.what() };
        }
    }
    return trace;
}

} // namespace valuedyn
