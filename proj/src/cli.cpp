#include "valuedyn/cli.hpp"

#include "valuedyn/analysis.hpp"
#include "valuedyn/dynamics.hpp"
#include "valuedyn/format.hpp"
#include "valuedyn/sets.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>

namespace valuedyn::cli
{

namespace
{

// Bad command-line input that is not a CLI11 parse failure.
struct UsageError : Error
{
    using Error::Error;
};

std::string_view trim( std::string_view s )
{
    constexpr std::string_view ws = " \t\r\n";
    const auto first = s.find_first_not_of( ws );
    if ( first == std::string_view::npos )
        return {};
    return s.substr( first, s.find_last_not_of( ws ) - first + 1 );
}

std::vector< std::string_view > split( std::string_view s, char sep )
{
    std::vector< std::string_view > out;
    std::size_t pos = 0;
    while ( true )
    {
        const auto next = s.find( sep, pos );
        out.push_back( trim( s.substr( pos, next == std::string_view::npos ? std::string_view::npos : next - pos ) ) );
        if ( next == std::string_view::npos )
            return out;
        pos = next + 1;
    }
}

std::string braced( const ValueId& v, const ValueId& w ) { return "{" + v.name() + ", " + w.name() + "}"; }

std::string braced( const std::vector< ValueId >& ids )
{
    std::string out = "{";
    for ( std::size_t i = 0; i < ids.size(); ++i )
        out += ( i ? ", " : "" ) + ids[ i ].name();
    return out + "}";
}

const ActivationModel& require_model( const Document& doc )
{
    if ( !doc.model )
        throw UsageError{ "this command needs an activation model (actions:/states: lines)" };
    return *doc.model;
}

void print_condition3( std::ostream& out, const ValueId& v, const std::vector< ValueId >& partners )
{
    out << "condition3: " << v << " -> " << braced( partners ) << '\n';
}

int cmd_validate( const Document& doc, std::ostream& out )
{
    const auto report = validate( require_model( doc ) );
    for ( const auto& v : report.condition1 )
        out << "condition1: " << v << '\n';
    for ( const auto& [ v, w ] : report.condition2 )
        out << "condition2: " << braced( v, w ) << '\n';
    for ( const auto& [ v, partners ] : report.condition3 )
        print_condition3( out, v, partners );
    return report.empty() ? success : violation;
}

int cmd_partition( const Document& doc, std::ostream& out )
{
    const auto base = doc.conflict_base();
    out << "Vperp:";
    for ( const auto& v : base.conflict_set() )
        out << ' ' << v;
    out << '\n';
    for ( const auto& [ v, w ] : base.pairs() )
        out << "pair: " << v << " ~ " << w << '\n';
    return success;
}

int cmd_normalize( const Document& doc, const std::string& path, std::ostream& out )
{
    const auto result = normalize( require_model( doc ) );

    Document normalized;
    normalized.values = result.model.values();
    normalized.model = result.model;
    if ( doc.declared_base )
        normalized.declared_base = derive_conflict_base( result.model );
    for ( const auto& set : doc.sets )
    {
        ValueSet mapped{ set.name, {} };
        for ( const auto& v : set.members )
        {
            const auto& rep = result.merge_map.at( v );
            if ( !mapped.contains( rep ) )
                mapped.members.push_back( rep );
        }
        normalized.sets.push_back( std::move( mapped ) );
    }

    std::ofstream file{ path, std::ios::binary };
    if ( !file )
        throw UsageError{ "cannot write '" + path + "'" };
    file << serialize_document( normalized );
    if ( !file.flush() )
        throw UsageError{ "cannot write '" + path + "'" };

    for ( const auto& v : doc.values )
        if ( const auto& rep = result.merge_map.at( v ); rep != v )
            out << "merge: " << v << " -> " << rep << '\n';
    return success;
}

ValueStateVector parse_init( const ActivationModel& model, std::string_view spec )
{
    auto vs = ValueStateVector::zeros( model );
    if ( trim( spec ).empty() )
        return vs;
    std::vector< std::string > given;
    for ( auto entry : split( spec, ',' ) )
    {
        const auto eq = entry.find( '=' );
        if ( eq == std::string_view::npos )
            throw UsageError{ "init entry '" + std::string{ entry } + "' is not 'value=level'" };
        const ValueId v{ std::string{ trim( entry.substr( 0, eq ) ) } };
        const auto digits = trim( entry.substr( eq + 1 ) );
        std::int64_t level = 0;
        const auto [ end, ec ] = std::from_chars( digits.data(), digits.data() + digits.size(), level );
        if ( ec != std::errc{} || end != digits.data() + digits.size() || digits.empty() )
            throw UsageError{ "init level '" + std::string{ digits } + "' is not an integer" };
        (void)model.value_index( v );
        if ( std::find( given.begin(), given.end(), v.name() ) != given.end() )
            throw UsageError{ "init gives value '" + v.name() + "' twice" };
        given.push_back( v.name() );
        vs.set( v, level );
    }
    return vs;
}

std::vector< Step > parse_steps( std::string_view spec )
{
    std::vector< Step > steps;
    if ( trim( spec ).empty() )
        return steps;
    for ( auto entry : split( spec, ';' ) )
    {
        const auto parts = split( entry, ',' );
        if ( parts.size() != 2 || !is_valid_token( parts[ 0 ] ) || !is_valid_token( parts[ 1 ] ) )
            throw UsageError{ "step '" + std::string{ entry } + "' is not 'state,action'" };
        steps.push_back( Step{ StateId{ std::string{ parts[ 0 ] } }, ActionId{ std::string{ parts[ 1 ] } } } );
    }
    return steps;
}

int cmd_simulate( const Document& doc, const std::string& init, const std::string& steps_spec, std::ostream& out )
{
    const auto& model = require_model( doc );
    const auto initial = parse_init( model, init );
    const auto steps = parse_steps( steps_spec );
    std::vector< ValueStateVector > trace;
    try
    {
        trace = run_trace( model, initial, steps );
    }
    catch ( const TraceError& e )
    {
        throw UsageError{ "step " + std::to_string( e.step() + 1 ) + " (" + steps[ e.step() ].state.name() + "," +
                          steps[ e.step() ].action.name() + "): " + e.reason() };
    }
    for ( std::size_t i = 0; i < trace.size(); ++i )
    {
        out << i;
        if ( i == 0 )
            out << "\t-\t-";
        else
            out << '\t' << steps[ i - 1 ].state << '\t' << steps[ i - 1 ].action;
        for ( const auto& v : model.values() )
            out << '\t' << v << '=' << trace[ i ].at( v );
        out << '\n';
    }
    return success;
}

int cmd_report( const Document& doc, std::ostream& out )
{
    const auto& model = require_model( doc );
    const auto& values = model.values();
    out << "report: values=" << values.size() << " actions=" << model.actions().size()
        << " states=" << model.states().size() << " cells=" << model.cells().size() << '\n';
    for ( const auto cell : model.cells() )
        for ( std::size_t i = 0; i < values.size(); ++i )
            for ( std::size_t j = i + 1; j < values.size(); ++j )
                out << "classify: " << model.states()[ cell.state ] << ", " << model.actions()[ cell.action ] << ", "
                    << values[ i ] << ", " << values[ j ] << " = "
                    << to_string( relation_of( model.effect_at( cell, i ), model.effect_at( cell, j ) ) ) << '\n';
    for ( std::size_t i = 0; i < values.size(); ++i )
        for ( std::size_t j = i + 1; j < values.size(); ++j )
            out << "inherent: " << values[ i ] << ", " << values[ j ] << " = "
                << to_string( inherent_relation_at( model, i, j ) ) << '\n';
    return success;
}

} // namespace

int run( std::vector< std::string > args, std::ostream& out, std::ostream& err )
{
    CLI::App app{ "Reason about conforming and conflicting values over an activation model", "valuedyn" };
    app.require_subcommand( 1 );
    app.fallthrough();

    std::string file;
    app.add_option( "--file", file, "Model file" )->required();

    std::function< int( const Document& ) > command;

    auto* validate_cmd = app.add_subcommand( "validate", "Check that every value is activated and that inherent "
                                                         "relations are collapsed" );
    validate_cmd->callback( [ & ] { command = [ & ]( const Document& d ) { return cmd_validate( d, out ); }; } );

    std::string state, action;
    std::vector< std::string > pair;
    auto* classify_cmd = app.add_subcommand( "classify", "Relation of two values in one state under one action" );
    classify_cmd->add_option( "--state", state, "State" )->required();
    classify_cmd->add_option( "--action", action, "Action" )->required();
    classify_cmd->add_option( "values", pair, "Two values" )->required()->expected( 2 );
    classify_cmd->callback( [ & ] {
        command = [ & ]( const Document& d ) {
            out << to_string( classify_pair( require_model( d ), StateId{ state }, ActionId{ action },
                                             ValueId{ pair[ 0 ] }, ValueId{ pair[ 1 ] } ) )
                << '\n';
            return success;
        };
    } );

    std::vector< std::string > inherent_pair;
    auto* inherent_cmd = app.add_subcommand( "inherent", "Relation of two values over the whole model" );
    inherent_cmd->add_option( "values", inherent_pair, "Two values" )->required()->expected( 2 );
    inherent_cmd->callback( [ & ] {
        command = [ & ]( const Document& d ) {
            out << to_string( inherent_relation( require_model( d ), ValueId{ inherent_pair[ 0 ] },
                                                 ValueId{ inherent_pair[ 1 ] } ) )
                << '\n';
            return success;
        };
    } );

    auto* partition_cmd = app.add_subcommand( "partition", "List the inherently conflicting values and their pairs" );
    partition_cmd->callback( [ & ] { command = [ & ]( const Document& d ) { return cmd_partition( d, out ); }; } );

    std::string out_path;
    auto* normalize_cmd = app.add_subcommand( "normalize", "Collapse inherently conforming values" );
    normalize_cmd->add_option( "--out", out_path, "Where to write the normalized model" )->required();
    normalize_cmd->callback(
        [ & ] { command = [ & ]( const Document& d ) { return cmd_normalize( d, out_path, out ); }; } );

    std::string set_name;
    auto* consistent_cmd = app.add_subcommand( "consistent", "Check a named value set for an inherent conflict" );
    consistent_cmd->add_option( "set", set_name, "Set name" )->required();
    consistent_cmd->callback( [ & ] {
        command = [ & ]( const Document& d ) {
            const auto& set = d.set( set_name );
            const auto result = is_consistent( d.conflict_base(), set );
            if ( result.consistent )
            {
                out << "consistent\n";
                return success;
            }
            out << "inconsistent: " << braced( result.witness->first, result.witness->second ) << '\n';
            return violation;
        };
    } );

    std::vector< std::string > set_names;
    auto* conflict_cmd = app.add_subcommand( "conflict", "Check two named value sets against each other" );
    conflict_cmd->add_option( "sets", set_names, "Two set names" )->required()->expected( 2 );
    conflict_cmd->callback( [ & ] {
        command = [ & ]( const Document& d ) {
            const auto& lhs = d.set( set_names[ 0 ] );
            const auto& rhs = d.set( set_names[ 1 ] );
            const auto result = sets_conflicting( d.conflict_base(), lhs, rhs );
            if ( !result.conflicting )
            {
                out << "non-conflicting\n";
                return success;
            }
            out << "conflicting: " << braced( result.witness->first, result.witness->second ) << '\n';
            return violation;
        };
    } );

    std::string init, steps;
    auto* simulate_cmd = app.add_subcommand( "simulate", "Trace value states along a sequence of executions" );
    simulate_cmd->add_option( "--init", init, "Initial levels, e.g. 'a=5,b=5' (others start at 0)" );
    simulate_cmd->add_option( "--steps", steps, "Steps, e.g. 's1,a1; s2,a1'" );
    simulate_cmd->callback(
        [ & ] { command = [ & ]( const Document& d ) { return cmd_simulate( d, init, steps, out ); }; } );

    auto* report_cmd = app.add_subcommand( "report", "Dump every pairwise and inherent relation" );
    report_cmd->callback( [ & ] { command = [ & ]( const Document& d ) { return cmd_report( d, out ); }; } );

    try
    {
        std::reverse( args.begin(), args.end() );
        app.parse( args );
    }
    catch ( const CLI::CallForHelp& e )
    {
        app.exit( e, out, err );
        return success;
    }
    catch ( const CLI::CallForAllHelp& e )
    {
        app.exit( e, out, err );
        return success;
    }
    catch ( const CLI::ParseError& e )
    {
        app.exit( e, out, err );
        return usage;
    }

    Document doc;
    try
    {
        doc = load_document( file );
    }
    catch ( const Error& e )
    {
        err << "error: " << file << ": " << e.what() << '\n';
        return usage;
    }

    try
    {
        return command( doc );
    }
    catch ( const Condition3Violation& e )
    {
        print_condition3( out, e.value(), e.partners() );
        return violation;
    }
    catch ( const Error& e )
    {
        err << "error: " << e.what() << '\n';
        return usage;
    }
}

} // namespace valuedyn::cli
