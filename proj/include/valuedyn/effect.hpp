#pragma once

#include <cstdint>
#include <string_view>

namespace valuedyn
{

// Direction in which one execution moves a value state.
enum class Effect : std::uint8_t
{
    Up,
    Down,
    Unchanged,
};

[[nodiscard]] constexpr Effect opposite( Effect e ) noexcept
{
    switch ( e )
    {
    case Effect::Up:
        return Effect::Down;
    case Effect::Down:
        return Effect::Up;
    case Effect::Unchanged:
        break;
    }
    return Effect::Unchanged;
}

// +1, -1 or 0: the unit step applied to a value state.
[[nodiscard]] constexpr int delta( Effect e ) noexcept
{
    switch ( e )
    {
    case Effect::Up:
        return 1;
    case Effect::Down:
        return -1;
    case Effect::Unchanged:
        break;
    }
    return 0;
}

// Suffix used in model files.
[[nodiscard]] constexpr char suffix( Effect e ) noexcept
{
    switch ( e )
    {
    case Effect::Up:
        return '+';
    case Effect::Down:
        return '-';
    case Effect::Unchanged:
        break;
    }
    return '~';
}

[[nodiscard]] std::string_view to_string( Effect e ) noexcept;

} // namespace valuedyn
