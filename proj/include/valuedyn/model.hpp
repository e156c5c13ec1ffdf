#pragma once

#include "effect.hpp"
#include "errors.hpp"
#include "ids.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace valuedyn
{

// Finite universes of values, actions and states, the executability relation
// S(a), and one effect per (state, action, value) on every executable cell.
//
// Construction validates everything and the object is immutable afterwards.
// Values are addressed either by id or by their declaration index; the index
// based accessors are what the analysis routines use in their inner loops.
class ActivationModel
{
public:
    struct CellSpec
    {
        StateId state;
        ActionId action;
        std::vector< std::pair< ValueId, Effect > > effects;
    };

    // Position of an executable cell in the dense layout.
    struct Cell
    {
        std::size_t state;
        std::size_t action;

        friend bool operator==( const Cell&, const Cell& ) = default;
    };

    ActivationModel() = default;

    // Actions missing from `executable` are executable in every state.
    // Executable cells without a CellSpec have every value Unchanged, and so
    // does every value missing from a CellSpec.
    ActivationModel( std::vector< ValueId > values,
                     std::vector< ActionId > actions,
                     std::vector< StateId > states,
                     const std::map< ActionId, std::vector< StateId > >& executable,
                     const std::vector< CellSpec >& cells );

    [[nodiscard]] const std::vector< ValueId >& values() const noexcept { return _values; }
    [[nodiscard]] const std::vector< ActionId >& actions() const noexcept { return _actions; }
    [[nodiscard]] const std::vector< StateId >& states() const noexcept { return _states; }

    [[nodiscard]] std::optional< std::size_t > find_value( const ValueId& v ) const;
    [[nodiscard]] std::optional< std::size_t > find_action( const ActionId& a ) const;
    [[nodiscard]] std::optional< std::size_t > find_state( const StateId& s ) const;

    // Same as find_*, but throw UnknownId.
    [[nodiscard]] std::size_t value_index( const ValueId& v ) const;
    [[nodiscard]] std::size_t action_index( const ActionId& a ) const;
    [[nodiscard]] std::size_t state_index( const StateId& s ) const;

    [[nodiscard]] bool is_executable( const StateId& s, const ActionId& a ) const;
    [[nodiscard]] bool is_executable( std::size_t state, std::size_t action ) const noexcept
    {
        return _executable[ action * _states.size() + state ];
    }

    // S(a), in state declaration order.
    [[nodiscard]] std::vector< StateId > executable_states( const ActionId& a ) const;
    [[nodiscard]] bool executable_everywhere( std::size_t action ) const noexcept;

    // Every executable cell, action-major, then state declaration order.
    [[nodiscard]] const std::vector< Cell >& cells() const noexcept { return _cells; }

    // Effects of one executable cell, indexed by value declaration order.
    [[nodiscard]] std::span< const Effect > cell_effects( Cell cell ) const noexcept
    {
        return { _effects.data() + ( cell.action * _states.size() + cell.state ) * _values.size(),
                 _values.size() };
    }

    [[nodiscard]] Effect effect_at( Cell cell, std::size_t value ) const noexcept { return cell_effects( cell )[ value ]; }

    // Throws NotExecutable when s is not in S(a), UnknownId for unknown ids.
    [[nodiscard]] Effect effect_of( const StateId& s, const ActionId& a, const ValueId& v ) const;

    // Resolves (s, a) to an executable cell or throws as effect_of does.
    [[nodiscard]] Cell require_cell( const StateId& s, const ActionId& a ) const;

    friend bool operator==( const ActivationModel& lhs, const ActivationModel& rhs );

private:
    std::vector< ValueId > _values;
    std::vector< ActionId > _actions;
    std::vector< StateId > _states;

    std::map< ValueId, std::size_t > _value_index;
    std::map< ActionId, std::size_t > _action_index;
    std::map< StateId, std::size_t > _state_index;

    std::vector< bool > _executable;  // [action][state]
    std::vector< Effect > _effects;   // [action][state][value], Unchanged off S(a)
    std::vector< Cell > _cells;
};

// A named set of values, e.g. the values held by one agent.
struct ValueSet
{
    std::string name;
    std::vector< ValueId > members;

    [[nodiscard]] bool contains( const ValueId& v ) const;

    friend bool operator==( const ValueSet&, const ValueSet& ) = default;
};

// The inherently conflicting values together with the pairing v <-> v̄.
// Pairs are disjoint and irreflexive; complement() is an involution on the
// conflict set.
class ConflictBase
{
public:
    ConflictBase() = default;

    // Throws ValidationError for unknown or reflexive pairs and duplicates,
    // Condition3Violation when a value would get two partners.
    ConflictBase( std::vector< ValueId > universe, const std::vector< std::pair< ValueId, ValueId > >& pairs );

    [[nodiscard]] const std::vector< ValueId >& universe() const noexcept { return _universe; }

    // Each pair once, ordered by the declaration index of its earlier member.
    [[nodiscard]] std::vector< std::pair< ValueId, ValueId > > pairs() const;

    // The conflict set, in declaration order.
    [[nodiscard]] std::vector< ValueId > conflict_set() const;

    [[nodiscard]] bool contains( const ValueId& v ) const { return _index.contains( v ); }

    // Throws UnknownId for values outside the universe.
    [[nodiscard]] std::optional< ValueId > complement( const ValueId& v ) const;
    [[nodiscard]] bool in_conflict_set( const ValueId& v ) const { return complement( v ).has_value(); }

    friend bool operator==( const ConflictBase&, const ConflictBase& ) = default;

private:
    std::vector< ValueId > _universe;
    std::map< ValueId, std::size_t > _index;
    std::vector< std::optional< std::size_t > > _partner;
};

} // namespace valuedyn
