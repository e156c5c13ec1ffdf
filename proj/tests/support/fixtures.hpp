#pragma once

#include "valuedyn/model.hpp"

#include <fstream>
#include <sstream>
#include <string>

#ifndef VALUEDYN_FIXTURE_DIR
#error "VALUEDYN_FIXTURE_DIR must point at the fixtures directory"
#endif

namespace valuedyn::testing
{

inline std::string fixture_path( const std::string& name ) { return std::string{ VALUEDYN_FIXTURE_DIR } + "/" + name; }

inline std::string read_fixture( const std::string& name )
{
    std::ifstream in{ fixture_path( name ), std::ios::binary };
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Table 1, built in code so tests of the analysis do not depend on the parser.
//
//              s1               s2
//   aprime     a+ b- c- d-      a- b+ c- d+
//   adblp      c- d+            d-
inline ActivationModel table1_model()
{
    using E = Effect;
    return ActivationModel{
        { ValueId{ "a" }, ValueId{ "b" }, ValueId{ "c" }, ValueId{ "d" } },
        { ActionId{ "aprime" }, ActionId{ "adblp" } },
        { StateId{ "s1" }, StateId{ "s2" } },
        {},
        {
            { StateId{ "s1" }, ActionId{ "aprime" }, { { ValueId{ "a" }, E::Up }, { ValueId{ "b" }, E::Down }, { ValueId{ "c" }, E::Down }, { ValueId{ "d" }, E::Down } } },
            { StateId{ "s2" }, ActionId{ "aprime" }, { { ValueId{ "a" }, E::Down }, { ValueId{ "b" }, E::Up }, { ValueId{ "c" }, E::Down }, { ValueId{ "d" }, E::Up } } },
            { StateId{ "s1" }, ActionId{ "adblp" }, { { ValueId{ "c" }, E::Down }, { ValueId{ "d" }, E::Up } } },
            { StateId{ "s2" }, ActionId{ "adblp" }, { { ValueId{ "d" }, E::Down } } },
        } };
}

// Table 1 with one extra value whose column is given explicitly per cell in
// the order (s1,aprime) (s2,aprime) (s1,adblp) (s2,adblp).
inline ActivationModel table1_with( const std::string& name, Effect c1, Effect c2, Effect c3, Effect c4 )
{
    const auto base = table1_model();
    auto values = base.values();
    values.emplace_back( name );
    const Effect column[] = { c1, c2, c3, c4 };
    std::vector< ActivationModel::CellSpec > cells;
    for ( std::size_t k = 0; k < base.cells().size(); ++k )
    {
        const auto cell = base.cells()[ k ];
        ActivationModel::CellSpec spec{ base.states()[ cell.state ], base.actions()[ cell.action ], {} };
        for ( std::size_t v = 0; v < base.values().size(); ++v )
            spec.effects.emplace_back( base.values()[ v ], base.effect_at( cell, v ) );
        spec.effects.emplace_back( ValueId{ name }, column[ k ] );
        cells.push_back( std::move( spec ) );
    }
    return ActivationModel{ values, base.actions(), base.states(), {}, cells };
}

} // namespace valuedyn::testing
