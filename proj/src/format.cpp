#include "valuedyn/format.hpp"
#include "valuedyn/analysis.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace valuedyn
{

const ValueSet& Document::set( std::string_view name ) const
{
    for ( const auto& s : sets )
        if ( s.name == name )
            return s;
    throw UnknownId{ "set", std::string{ name } };
}

ConflictBase Document::conflict_base() const
{
    if ( declared_base )
        return *declared_base;
    if ( model )
        return derive_conflict_base( *model );
    return ConflictBase{ values, {} };
}

namespace
{

constexpr std::string_view whitespace = " \t\r\f\v";

std::string_view trim( std::string_view s )
{
    const auto first = s.find_first_not_of( whitespace );
    if ( first == std::string_view::npos )
        return {};
    const auto last = s.find_last_not_of( whitespace );
    return s.substr( first, last - first + 1 );
}

struct Line
{
    std::size_t number;
    std::string_view keyword;
    std::string_view body;
};

class Parser
{
public:
    explicit Parser( std::string_view text ) : _text{ text } {}

    Document run();

private:
    std::string_view _text;

    // Split on whitespace and/or single commas; empty elements are errors.
    static std::vector< std::string_view > list( const Line& line, std::string_view body )
    {
        std::vector< std::string_view > out;
        std::size_t i = 0;
        bool expect_item = false; // set right after a comma
        while ( true )
        {
            while ( i < body.size() && whitespace.find( body[ i ] ) != std::string_view::npos )
                ++i;
            if ( i == body.size() )
                break;
            if ( body[ i ] == ',' )
            {
                if ( out.empty() || expect_item )
                    throw ParseError{ line.number, "empty list element" };
                expect_item = true;
                ++i;
                continue;
            }
            std::size_t j = i;
            while ( j < body.size() && body[ j ] != ',' && whitespace.find( body[ j ] ) == std::string_view::npos )
                ++j;
            out.push_back( body.substr( i, j - i ) );
            expect_item = false;
            i = j;
        }
        if ( expect_item )
            throw ParseError{ line.number, "trailing comma" };
        return out;
    }

    static std::string token( const Line& line, std::string_view raw, std::string_view what )
    {
        const auto t = trim( raw );
        if ( !is_valid_token( t ) )
            throw ParseError{ line.number, "invalid " + std::string{ what } + " '" + std::string{ t } + "'" };
        return std::string{ t };
    }

    static std::vector< std::string > tokens( const Line& line, std::string_view body, std::string_view what )
    {
        std::vector< std::string > out;
        for ( auto item : list( line, body ) )
            out.push_back( token( line, item, what ) );
        return out;
    }

    // "lhs = rhs"
    static std::pair< std::string_view, std::string_view > split_assignment( const Line& line )
    {
        const auto eq = line.body.find( '=' );
        if ( eq == std::string_view::npos )
            throw ParseError{ line.number, "expected '=' in " + std::string{ line.keyword } + " line" };
        return { line.body.substr( 0, eq ), line.body.substr( eq + 1 ) };
    }
};

template < typename Id >
std::vector< Id > declare( const std::vector< std::string >& names, const Line& line, const char* kind,
                           std::set< std::string >& seen )
{
    std::vector< Id > out;
    for ( const auto& name : names )
    {
        if ( !seen.insert( name ).second )
            throw ValidationError{ std::string{ "duplicate " } + kind + " '" + name + "'", line.number };
        out.emplace_back( name );
    }
    return out;
}

void require_known( const std::set< std::string >& universe, const std::string& name, const char* kind,
                    const Line& line )
{
    if ( !universe.contains( name ) )
        throw ValidationError{ std::string{ "unknown " } + kind + " '" + name + "'", line.number };
}

Document Parser::run()
{
    std::vector< Line > lines;
    {
        std::size_t number = 0;
        std::size_t pos = 0;
        while ( pos <= _text.size() )
        {
            auto end = _text.find( '\n', pos );
            if ( end == std::string_view::npos )
                end = _text.size();
            std::string_view raw = _text.substr( pos, end - pos );
            pos = end + 1;
            ++number;
            if ( auto hash = raw.find( '#' ); hash != std::string_view::npos )
                raw = raw.substr( 0, hash );
            raw = trim( raw );
            if ( raw.empty() )
                continue;
            const auto colon = raw.find( ':' );
            if ( colon == std::string_view::npos )
                throw ParseError{ number, "expected 'keyword:'" };
            lines.push_back( Line{ number, trim( raw.substr( 0, colon ) ), trim( raw.substr( colon + 1 ) ) } );
        }
    }

    std::optional< std::vector< std::string > > values, actions, states;
    std::vector< Line > exec_lines, effect_lines, pair_lines, set_lines;

    for ( const auto& line : lines )
    {
        auto header = [ & ]( std::optional< std::vector< std::string > >& slot, std::string_view what ) {
            if ( slot )
                throw ParseError{ line.number, "duplicate '" + std::string{ line.keyword } + ":' line" };
            slot = tokens( line, line.body, what );
        };
        if ( line.keyword == "values" )
            header( values, "value" );
        else if ( line.keyword == "actions" )
            header( actions, "action" );
        else if ( line.keyword == "states" )
            header( states, "state" );
        else if ( line.keyword == "exec" )
            exec_lines.push_back( line );
        else if ( line.keyword == "effect" )
            effect_lines.push_back( line );
        else if ( line.keyword == "pair" )
            pair_lines.push_back( line );
        else if ( line.keyword == "set" )
            set_lines.push_back( line );
        else
            throw ParseError{ line.number, "unknown keyword '" + std::string{ line.keyword } + "'" };
    }

    Document doc;
    std::set< std::string > value_names, action_names, state_names;
    const Line no_line{ 0, {}, {} };
    auto first_line = [ & ]( std::string_view keyword ) {
        for ( const auto& l : lines )
            if ( l.keyword == keyword )
                return l;
        return no_line;
    };
    if ( values )
        doc.values = declare< ValueId >( *values, first_line( "values" ), "value", value_names );
    const bool has_model = actions || states;
    std::vector< ActionId > action_ids;
    std::vector< StateId > state_ids;
    if ( actions )
        action_ids = declare< ActionId >( *actions, first_line( "actions" ), "action", action_names );
    if ( states )
        state_ids = declare< StateId >( *states, first_line( "states" ), "state", state_names );

    if ( !has_model && !exec_lines.empty() )
        throw ValidationError{ "exec line without 'actions:' and 'states:'", exec_lines.front().number };
    if ( !has_model && !effect_lines.empty() )
        throw ValidationError{ "effect line without 'actions:' and 'states:'", effect_lines.front().number };

    std::map< ActionId, std::vector< StateId > > executable;
    for ( const auto& line : exec_lines )
    {
        const auto [ lhs, rhs ] = split_assignment( line );
        const auto action = token( line, lhs, "action" );
        require_known( action_names, action, "action", line );
        std::vector< StateId > allowed;
        std::set< std::string > listed;
        for ( const auto& state : tokens( line, rhs, "state" ) )
        {
            require_known( state_names, state, "state", line );
            if ( !listed.insert( state ).second )
                throw ValidationError{ "state '" + state + "' listed twice", line.number };
            allowed.emplace_back( state );
        }
        if ( !executable.emplace( ActionId{ action }, std::move( allowed ) ).second )
            throw ValidationError{ "duplicate exec line for action '" + action + "'", line.number };
    }
    auto executable_in = [ & ]( const std::string& state, const std::string& action ) {
        auto it = executable.find( ActionId{ action } );
        if ( it == executable.end() )
            return true;
        return std::find( it->second.begin(), it->second.end(), StateId{ state } ) != it->second.end();
    };

    std::vector< ActivationModel::CellSpec > cells;
    std::set< std::pair< std::string, std::string > > seen_cells;
    for ( const auto& line : effect_lines )
    {
        const auto [ lhs, rhs ] = split_assignment( line );
        const auto comma = lhs.find( ',' );
        if ( comma == std::string_view::npos )
            throw ParseError{ line.number, "expected 'state, action' before '='" };
        const auto state = token( line, lhs.substr( 0, comma ), "state" );
        const auto action = token( line, lhs.substr( comma + 1 ), "action" );
        require_known( state_names, state, "state", line );
        require_known( action_names, action, "action", line );
        if ( !executable_in( state, action ) )
            throw ValidationError{ "effect declared on non-executable cell (" + state + ", " + action + ")",
                                   line.number };
        if ( !seen_cells.emplace( state, action ).second )
            throw ValidationError{ "duplicate effect cell (" + state + ", " + action + ")", line.number };

        ActivationModel::CellSpec spec{ StateId{ state }, ActionId{ action }, {} };
        std::set< std::string > mentioned;
        for ( auto item : list( line, rhs ) )
        {
            Effect effect{};
            switch ( item.back() )
            {
            case '+':
                effect = Effect::Up;
                break;
            case '-':
                effect = Effect::Down;
                break;
            case '~':
                effect = Effect::Unchanged;
                break;
            default:
                throw ParseError{ line.number, "effect '" + std::string{ item } + "' lacks a +, - or ~ suffix" };
            }
            const auto value = token( line, item.substr( 0, item.size() - 1 ), "value" );
            require_known( value_names, value, "value", line );
            if ( !mentioned.insert( value ).second )
                throw ValidationError{ "value '" + value + "' given twice in one cell", line.number };
            spec.effects.emplace_back( ValueId{ value }, effect );
        }
        cells.push_back( std::move( spec ) );
    }

    if ( has_model )
        doc.model = ActivationModel{ doc.values, action_ids, state_ids, executable, cells };

    if ( !pair_lines.empty() || !has_model )
    {
        std::vector< std::pair< ValueId, ValueId > > pairs;
        for ( const auto& line : pair_lines )
        {
            const auto tilde = line.body.find( '~' );
            if ( tilde == std::string_view::npos )
                throw ParseError{ line.number, "expected 'value ~ value'" };
            const auto first = token( line, line.body.substr( 0, tilde ), "value" );
            const auto second = token( line, line.body.substr( tilde + 1 ), "value" );
            require_known( value_names, first, "value", line );
            require_known( value_names, second, "value", line );
            pairs.emplace_back( ValueId{ first }, ValueId{ second } );
            try
            {
                // Construct incrementally so the offending line is reported.
                (void)ConflictBase{ doc.values, pairs };
            }
            catch ( const Condition3Violation& )
            {
                throw ValidationError{ "pair {" + first + ", " + second + "} overlaps an earlier pair", line.number };
            }
            catch ( const ValidationError& e )
            {
                throw ValidationError{ e.what(), line.number };
            }
        }
        doc.declared_base = ConflictBase{ doc.values, pairs };
    }

    if ( doc.model && doc.declared_base )
    {
        std::optional< ConflictBase > derived;
        try
        {
            derived = derive_conflict_base( *doc.model );
        }
        catch ( const Condition3Violation& e )
        {
            throw ValidationError{ std::string{ "pairs declared but the model has none to match: " } + e.what(),
                                   pair_lines.front().number };
        }
        if ( !( *derived == *doc.declared_base ) )
            throw ValidationError{ "declared pairs differ from the inherently conflicting pairs of the model",
                                   pair_lines.front().number };
    }

    std::set< std::string > set_names;
    for ( const auto& line : set_lines )
    {
        const auto [ lhs, rhs ] = split_assignment( line );
        ValueSet set{ token( line, lhs, "set name" ), {} };
        if ( !set_names.insert( set.name ).second )
            throw ValidationError{ "duplicate set '" + set.name + "'", line.number };
        std::set< std::string > listed;
        for ( const auto& member : tokens( line, rhs, "value" ) )
        {
            require_known( value_names, member, "value", line );
            if ( !listed.insert( member ).second )
                throw ValidationError{ "value '" + member + "' listed twice in set '" + set.name + "'", line.number };
            set.members.emplace_back( member );
        }
        doc.sets.push_back( std::move( set ) );
    }

    return doc;
}

template < typename Id >
void write_list( std::ostream& out, const std::vector< Id >& ids, std::string_view separator )
{
    for ( std::size_t i = 0; i < ids.size(); ++i )
        out << ( i == 0 ? " " : separator ) << ids[ i ].name();
}

void write_model( std::ostream& out, const ActivationModel& model )
{
    out << "values:";
    write_list( out, model.values(), " " );
    out << "\nactions:";
    write_list( out, model.actions(), " " );
    out << "\nstates:";
    write_list( out, model.states(), " " );
    out << '\n';

    for ( std::size_t a = 0; a < model.actions().size(); ++a )
    {
        if ( model.executable_everywhere( a ) )
            continue;
        out << "exec: " << model.actions()[ a ] << " =";
        write_list( out, model.executable_states( model.actions()[ a ] ), ", " );
        out << '\n';
    }

    for ( const auto cell : model.cells() )
    {
        out << "effect: " << model.states()[ cell.state ] << ", " << model.actions()[ cell.action ] << " =";
        const auto effects = model.cell_effects( cell );
        for ( std::size_t v = 0; v < effects.size(); ++v )
            if ( effects[ v ] != Effect::Unchanged )
                out << ' ' << model.values()[ v ] << suffix( effects[ v ] );
        out << '\n';
    }
}

} // namespace

Document parse_document( std::string_view text ) { return Parser{ text }.run(); }

Document load_document( const std::string& path )
{
    std::ifstream in{ path, std::ios::binary };
    if ( !in )
        throw ValidationError{ "cannot open '" + path + "'" };
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_document( buffer.str() );
}

std::string serialize_model( const ActivationModel& model )
{
    std::ostringstream out;
    write_model( out, model );
    return out.str();
}

std::string serialize_document( const Document& doc )
{
    std::ostringstream out;
    if ( doc.model )
        write_model( out, *doc.model );
    else
    {
        out << "values:";
        write_list( out, doc.values, " " );
        out << '\n';
    }
    if ( doc.declared_base )
        for ( const auto& [ v, w ] : doc.declared_base->pairs() )
            out << "pair: " << v << " ~ " << w << '\n';
    for ( const auto& set : doc.sets )
    {
        out << "set: " << set.name << " =";
        write_list( out, set.members, ", " );
        out << '\n';
    }
    return out.str();
}

} // namespace valuedyn
