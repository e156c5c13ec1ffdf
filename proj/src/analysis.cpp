#include "valuedyn/analysis.hpp"

#include <algorithm>
#include <numeric>

namespace valuedyn
{

std::string_view to_string( PairRelation r ) noexcept
{
    switch ( r )
    {
    case PairRelation::Conforming:
        return "Conforming";
    case PairRelation::Conflicting:
        return "Conflicting";
    case PairRelation::BothIndifferent:
        return "BothIndifferent";
    case PairRelation::Mixed:
        break;
    }
    return "Mixed";
}

std::string_view to_string( InherentRelation r ) noexcept
{
    switch ( r )
    {
    case InherentRelation::InherentlyConflicting:
        return "InherentlyConflicting";
    case InherentRelation::InherentlyConforming:
        return "InherentlyConforming";
    case InherentRelation::Neither:
        break;
    }
    return "Neither";
}

PairRelation classify_pair( const ActivationModel& model, const StateId& s, const ActionId& a, const ValueId& v,
                            const ValueId& w )
{
    if ( v == w )
        throw ReflexivePair{ v };
    const auto cell = model.require_cell( s, a );
    return relation_of( model.effect_at( cell, model.value_index( v ) ), model.effect_at( cell, model.value_index( w ) ) );
}

InherentRelation inherent_relation_at( const ActivationModel& model, std::size_t v, std::size_t w ) noexcept
{
    bool conforming = true;
    bool conflicting = true;
    for ( const auto cell : model.cells() )
    {
        switch ( relation_of( model.effect_at( cell, v ), model.effect_at( cell, w ) ) )
        {
        case PairRelation::Conforming:
            conflicting = false;
            break;
        case PairRelation::Conflicting:
            conforming = false;
            break;
        case PairRelation::BothIndifferent:
            break;
        case PairRelation::Mixed:
            return InherentRelation::Neither;
        }
        if ( !conforming && !conflicting )
            return InherentRelation::Neither;
    }
    if ( conforming )
        return InherentRelation::InherentlyConforming;
    return InherentRelation::InherentlyConflicting;
}

InherentRelation inherent_relation( const ActivationModel& model, const ValueId& v, const ValueId& w )
{
    if ( v == w )
        throw ReflexivePair{ v };
    return inherent_relation_at( model, model.value_index( v ), model.value_index( w ) );
}

namespace
{

// partners[i] = declaration indices of every value inherently conflicting with i.
std::vector< std::vector< std::size_t > > conflict_partners( const ActivationModel& model )
{
    const std::size_t n = model.values().size();
    std::vector< std::vector< std::size_t > > partners( n );
    for ( std::size_t i = 0; i < n; ++i )
        for ( std::size_t j = i + 1; j < n; ++j )
            if ( inherent_relation_at( model, i, j ) == InherentRelation::InherentlyConflicting )
            {
                partners[ i ].push_back( j );
                partners[ j ].push_back( i );
            }
    return partners;
}

std::vector< ValueId > ids_of( const ActivationModel& model, const std::vector< std::size_t >& indices )
{
    std::vector< ValueId > out;
    out.reserve( indices.size() );
    for ( auto i : indices )
        out.push_back( model.values()[ i ] );
    return out;
}

} // namespace

ValidationReport validate( const ActivationModel& model )
{
    ValidationReport report;
    const auto& values = model.values();
    const std::size_t n = values.size();

    for ( std::size_t v = 0; v < n; ++v )
    {
        const bool activated = std::any_of( model.cells().begin(), model.cells().end(),
                                            [ & ]( auto cell ) { return model.effect_at( cell, v ) != Effect::Unchanged; } );
        if ( !activated )
            report.condition1.push_back( values[ v ] );
    }

    for ( std::size_t i = 0; i < n; ++i )
        for ( std::size_t j = i + 1; j < n; ++j )
            if ( inherent_relation_at( model, i, j ) == InherentRelation::InherentlyConforming )
                report.condition2.emplace_back( values[ i ], values[ j ] );

    const auto partners = conflict_partners( model );
    for ( std::size_t v = 0; v < n; ++v )
        if ( partners[ v ].size() >= 2 )
            report.condition3.emplace_back( values[ v ], ids_of( model, partners[ v ] ) );

    return report;
}

ConflictBase derive_conflict_base( const ActivationModel& model )
{
    const auto partners = conflict_partners( model );
    std::vector< std::pair< ValueId, ValueId > > pairs;
    for ( std::size_t v = 0; v < partners.size(); ++v )
    {
        if ( partners[ v ].size() >= 2 )
            throw Condition3Violation{ model.values()[ v ], ids_of( model, partners[ v ] ) };
        if ( partners[ v ].size() == 1 && partners[ v ].front() > v )
            pairs.emplace_back( model.values()[ v ], model.values()[ partners[ v ].front() ] );
    }
    return ConflictBase{ model.values(), pairs };
}

Normalization normalize( const ActivationModel& model )
{
    const auto& values = model.values();
    const std::size_t n = values.size();

    // Inherent conformance is effect equality on every cell, hence already an
    // equivalence; the union-find only makes the closure explicit.
    std::vector< std::size_t > parent( n );
    std::iota( parent.begin(), parent.end(), std::size_t{ 0 } );
    auto find = [ & ]( std::size_t x ) {
        while ( parent[ x ] != x )
            x = parent[ x ] = parent[ parent[ x ] ];
        return x;
    };
    for ( std::size_t i = 0; i < n; ++i )
        for ( std::size_t j = i + 1; j < n; ++j )
            if ( inherent_relation_at( model, i, j ) == InherentRelation::InherentlyConforming )
                parent[ find( j ) ] = find( i );

    std::vector< std::size_t > representative( n );
    std::iota( representative.begin(), representative.end(), std::size_t{ 0 } );
    for ( std::size_t v = 0; v < n; ++v )
    {
        auto& rep = representative[ find( v ) ];
        if ( values[ v ] < values[ rep ] )
            rep = v;
    }

    Normalization result;
    std::vector< ValueId > kept;
    for ( std::size_t v = 0; v < n; ++v )
    {
        const std::size_t rep = representative[ find( v ) ];
        result.merge_map.emplace( values[ v ], values[ rep ] );
        if ( rep == v )
            kept.push_back( values[ v ] );
    }

    std::map< ActionId, std::vector< StateId > > executable;
    for ( std::size_t a = 0; a < model.actions().size(); ++a )
        if ( !model.executable_everywhere( a ) )
            executable.emplace( model.actions()[ a ], model.executable_states( model.actions()[ a ] ) );

    std::vector< ActivationModel::CellSpec > cells;
    for ( const auto cell : model.cells() )
    {
        ActivationModel::CellSpec spec{ model.states()[ cell.state ], model.actions()[ cell.action ], {} };
        for ( std::size_t v = 0; v < n; ++v )
        {
            const std::size_t rep = representative[ find( v ) ];
            const Effect e = model.effect_at( cell, v );
            if ( e != model.effect_at( cell, rep ) )
                throw MergeConflict{ "values '" + values[ v ].name() + "' and '" + values[ rep ].name() +
                                     "' are in one class but differ in cell (" + spec.state.name() + ", " +
                                     spec.action.name() + ")" };
            if ( rep == v && e != Effect::Unchanged )
                spec.effects.emplace_back( values[ v ], e );
        }
        cells.push_back( std::move( spec ) );
    }

    result.model = ActivationModel{ std::move( kept ), model.actions(), model.states(), executable, cells };
    return result;
}

} // namespace valuedyn
