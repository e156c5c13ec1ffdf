#include "support/generators.hpp"
#include "support/laws.hpp"

#include <doctest.h>

using namespace valuedyn;
using namespace valuedyn::testing;

namespace
{

constexpr int models_per_property = 1000;

template < typename Check >
void for_random_models( std::uint64_t seed, Check check )
{
    std::mt19937_64 rng{ seed };
    for ( int i = 0; i < models_per_property; ++i )
    {
        const auto m = random_model( rng );
        const Counterexample failure = check( m, rng );
        REQUIRE_MESSAGE( !failure, "model #" << i << ": " << failure.value_or( "" ) );
    }
}

} // namespace

TEST_CASE( "symmetry of pair and inherent relations" )
{
    for_random_models( 1, []( const auto& m, auto& ) { return check_symmetry( m ); } );
}

TEST_CASE( "exclusivity under condition 1" )
{
    for_random_models( 2, []( const auto& m, auto& ) { return check_exclusivity( m ); } );
}

TEST_CASE( "inherent_relation matches the effect characterization" )
{
    for_random_models( 3, []( const auto& m, auto& ) { return check_oracle_equivalence( m ); } );
}

TEST_CASE( "observations 1-2 and proposition 1" )
{
    Coverage coverage;
    for_random_models( 4, [ & ]( const auto& m, auto& ) { return check_metatheorems( m, coverage ); } );
    // The generator plants copied and negated columns, so every premise occurs.
    CHECK( coverage.conforming_pairs > 100 );
    CHECK( coverage.conflicting_pairs > 100 );
    CHECK( coverage.shared_partners > 10 );
}

TEST_CASE( "normalization soundness and idempotence" )
{
    for_random_models( 5, []( const auto& m, auto& ) { return check_normalization( m ); } );
}

TEST_CASE( "dynamics reproduce the pair relations" )
{
    for_random_models( 6, []( const auto& m, auto& rng ) {
        for ( int k = 0; k < 3; ++k )
            if ( auto failure = check_dynamics( m, rng ) )
                return failure;
        return Counterexample{};
    } );
}

TEST_CASE( "set-level laws against the double-loop oracle" )
{
    std::mt19937_64 rng{ 7 };
    std::size_t inconsistent = 0, conflicting = 0;
    for ( int i = 0; i < 2000; ++i )
    {
        const auto [ base, universe ] = random_base( rng );
        const auto lhs = random_subset( rng, universe, "L" );
        const auto rhs = random_subset( rng, universe, "R" );
        const auto failure = check_set_laws( base, lhs, rhs );
        REQUIRE_MESSAGE( !failure, "base #" << i << ": " << failure.value_or( "" ) );
        inconsistent += !is_consistent( base, lhs ).consistent;
        conflicting += sets_conflicting( base, lhs, rhs ).conflicting;
    }
    CHECK( inconsistent > 100 );
    CHECK( conflicting > 100 );
}
