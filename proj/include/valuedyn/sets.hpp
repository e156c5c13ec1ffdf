#pragma once

#include "model.hpp"

#include <optional>
#include <utility>

namespace valuedyn
{

// An unordered pair {v, v̄}, stored with the lexicographically smaller id first.
using Witness = std::pair< ValueId, ValueId >;

struct ConsistencyResult
{
    bool consistent = true;
    std::optional< Witness > witness; // set iff !consistent
};

struct ConflictResult
{
    bool conflicting = false;
    std::optional< Witness > witness; // set iff conflicting
};

// A set is inconsistent iff it holds both members of some pair of the base.
// The witness is the lexicographically smallest such pair. Throws UnknownId
// for members outside the base universe.
[[nodiscard]] ConsistencyResult is_consistent( const ConflictBase& base, const ValueSet& set );

// Two sets conflict iff some pair of the base has one member in each.
[[nodiscard]] ConflictResult sets_conflicting( const ConflictBase& base, const ValueSet& lhs, const ValueSet& rhs );

} // namespace valuedyn
