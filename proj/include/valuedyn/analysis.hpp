#pragma once

#include "model.hpp"

#include <map>
#include <string_view>
#include <utility>
#include <vector>

namespace valuedyn
{

// Relation of two values under a single (state, action) execution.
enum class PairRelation
{
    Conforming,      // both Up or both Down
    Conflicting,     // one Up, the other Down
    BothIndifferent, // both Unchanged
    Mixed,           // exactly one Unchanged
};

// Relation of two values over every executable cell of a model.
enum class InherentRelation
{
    InherentlyConflicting,
    InherentlyConforming,
    Neither,
};

[[nodiscard]] std::string_view to_string( PairRelation r ) noexcept;
[[nodiscard]] std::string_view to_string( InherentRelation r ) noexcept;

[[nodiscard]] constexpr PairRelation relation_of( Effect lhs, Effect rhs ) noexcept
{
    const bool lhs_idle = lhs == Effect::Unchanged;
    const bool rhs_idle = rhs == Effect::Unchanged;
    if ( lhs_idle && rhs_idle )
        return PairRelation::BothIndifferent;
    if ( lhs_idle || rhs_idle )
        return PairRelation::Mixed;
    return lhs == rhs ? PairRelation::Conforming : PairRelation::Conflicting;
}

// Throws ReflexivePair when v == w, NotExecutable, UnknownId.
[[nodiscard]] PairRelation classify_pair( const ActivationModel& model, const StateId& s, const ActionId& a,
                                          const ValueId& v, const ValueId& w );

// Quantifies classify_pair over every executable cell. When both universal
// statements hold (the pair is indifferent everywhere, or the model has no
// executable cell) the answer is InherentlyConforming.
[[nodiscard]] InherentRelation inherent_relation( const ActivationModel& model, const ValueId& v, const ValueId& w );

// Index-based form of inherent_relation; v != w is the caller's business.
[[nodiscard]] InherentRelation inherent_relation_at( const ActivationModel& model, std::size_t v, std::size_t w ) noexcept;

struct ValidationReport
{
    // Values that are Unchanged in every executable cell.
    std::vector< ValueId > condition1;
    // Distinct inherently conforming pairs, by declaration order.
    std::vector< std::pair< ValueId, ValueId > > condition2;
    // Values with two or more inherent-conflict partners.
    std::vector< std::pair< ValueId, std::vector< ValueId > > > condition3;

    [[nodiscard]] bool empty() const noexcept { return condition1.empty() && condition2.empty() && condition3.empty(); }

    friend bool operator==( const ValidationReport&, const ValidationReport& ) = default;
};

[[nodiscard]] ValidationReport validate( const ActivationModel& model );

// All inherently conflicting pairs. Throws Condition3Violation when some
// value has more than one partner.
[[nodiscard]] ConflictBase derive_conflict_base( const ActivationModel& model );

struct Normalization
{
    ActivationModel model;
    std::map< ValueId, ValueId > merge_map; // every original value -> its representative
};

// Collapses every class of inherently conforming values onto its
// lexicographically smallest member. Idempotent.
[[nodiscard]] Normalization normalize( const ActivationModel& model );

} // namespace valuedyn
