#include "valuedyn/sets.hpp"

#include <set>

namespace valuedyn
{

namespace
{

std::set< ValueId > members_of( const ConflictBase& base, const ValueSet& set )
{
    std::set< ValueId > out;
    for ( const auto& v : set.members )
    {
        if ( !base.contains( v ) )
            throw UnknownId{ "value", v.name() };
        out.insert( v );
    }
    return out;
}

// Smallest pair {v, complement(v)} with v in `from` and the complement in `to`.
std::optional< Witness > smallest_cross_pair( const ConflictBase& base, const std::set< ValueId >& from,
                                              const std::set< ValueId >& to )
{
    std::optional< Witness > best;
    for ( const auto& v : from )
    {
        const auto partner = base.complement( v );
        if ( !partner || !to.contains( *partner ) )
            continue;
        Witness candidate = v < *partner ? Witness{ v, *partner } : Witness{ *partner, v };
        if ( !best || candidate < *best )
            best = std::move( candidate );
    }
    return best;
}

} // namespace

ConsistencyResult is_consistent( const ConflictBase& base, const ValueSet& set )
{
    const auto members = members_of( base, set );
    auto witness = smallest_cross_pair( base, members, members );
    return { !witness.has_value(), std::move( witness ) };
}

ConflictResult sets_conflicting( const ConflictBase& base, const ValueSet& lhs, const ValueSet& rhs )
{
    const auto left = members_of( base, lhs );
    const auto right = members_of( base, rhs );
    auto witness = smallest_cross_pair( base, left, right );
    return { witness.has_value(), std::move( witness ) };
}

} // namespace valuedyn
