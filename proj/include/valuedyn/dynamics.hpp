#pragma once

#include "model.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace valuedyn
{

// VS(v) for every value of a model. Levels are unbounded signed integers;
// only their changes carry meaning.
class ValueStateVector
{
    std::map< ValueId, std::int64_t > _levels;

public:
    ValueStateVector() = default;
    explicit ValueStateVector( std::map< ValueId, std::int64_t > levels ) : _levels{ std::move( levels ) } {}

    [[nodiscard]] static ValueStateVector zeros( const ActivationModel& model );

    [[nodiscard]] const std::map< ValueId, std::int64_t >& levels() const noexcept { return _levels; }

    // Throws UnknownId.
    [[nodiscard]] std::int64_t at( const ValueId& v ) const;
    void set( const ValueId& v, std::int64_t level ) { _levels[ v ] = level; }

    // True iff the domain is exactly the model's value universe.
    [[nodiscard]] bool matches( const ActivationModel& model ) const;

    friend bool operator==( const ValueStateVector&, const ValueStateVector& ) = default;
};

struct Step
{
    StateId state;
    ActionId action;
};

// Executes `a` in `s`: Up adds one, Down subtracts one, Unchanged leaves the
// level alone. Throws NotExecutable, UnknownId, DomainMismatch.
[[nodiscard]] ValueStateVector apply_action( const ActivationModel& model, const ValueStateVector& vs,
                                             const StateId& s, const ActionId& a );

// Returns |steps| + 1 vectors starting with `initial`. A failing step throws
// TraceError carrying its index.
[[nodiscard]] std::vector< ValueStateVector > run_trace( const ActivationModel& model, const ValueStateVector& initial,
                                                         std::span< const Step > steps );

} // namespace valuedyn
