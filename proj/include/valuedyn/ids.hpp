#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace valuedyn
{

// Identifier tokens: non-empty, ASCII letters, digits and '_' only.
[[nodiscard]] bool is_valid_token( std::string_view token ) noexcept;

template < typename Tag >
class BasicId
{
    std::string _name;

public:
    BasicId() = default;
    explicit BasicId( std::string name ) : _name{ std::move( name ) } {}
    explicit BasicId( const char* name ) : _name{ name } {}

    [[nodiscard]] const std::string& name() const noexcept { return _name; }

    friend auto operator<=>( const BasicId&, const BasicId& ) = default;
    friend bool operator==( const BasicId&, const BasicId& ) = default;

    friend std::ostream& operator<<( std::ostream& os, const BasicId& id ) { return os << id._name; }
};

struct ValueTag {};
struct ActionTag {};
struct StateTag {};

using ValueId = BasicId< ValueTag >;
using ActionId = BasicId< ActionTag >;
using StateId = BasicId< StateTag >;

} // namespace valuedyn

template < typename Tag >
struct std::hash< valuedyn::BasicId< Tag > >
{
    std::size_t operator()( const valuedyn::BasicId< Tag >& id ) const noexcept
    {
        return std::hash< std::string >{}( id.name() );
    }
};
