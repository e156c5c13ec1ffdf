#include "support/fixtures.hpp"

#include "valuedyn/analysis.hpp"
#include "valuedyn/cli.hpp"
#include "valuedyn/format.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace valuedyn;
using namespace valuedyn::testing;

namespace
{

struct Outcome
{
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli( std::vector< std::string > args )
{
    std::ostringstream out, err;
    const int code = cli::run( std::move( args ), out, err );
    return { code, out.str(), err.str() };
}

std::string table1() { return fixture_path( "table1.model" ); }
std::string example5() { return fixture_path( "example5.model" ); }

// A file in the temp directory, deleted on scope exit.
struct TempFile
{
    std::filesystem::path path;

    explicit TempFile( const std::string& name, const std::string& text = {} )
        : path{ std::filesystem::temp_directory_path() / ( "valuedyn_test_" + name ) }
    {
        std::ofstream{ path } << text;
    }
    ~TempFile() { std::filesystem::remove( path ); }

    [[nodiscard]] std::string str() const { return path.string(); }
};

} // namespace

TEST_CASE( "validate" )
{
    auto ok = run_cli( { "--file", table1(), "validate" } );
    CHECK( ok.code == 0 );
    CHECK( ok.out.empty() );

    // Table 1 plus a value e that no cell mentions.
    auto with_orphan = read_fixture( "table1.model" );
    with_orphan.replace( 0, std::string{ "values: a b c d" }.size(), "values: a b c d e" );
    TempFile orphan{ "orphan.model", with_orphan };
    auto bad = run_cli( { "--file", orphan.str(), "validate" } );
    CHECK( bad.code == 1 );
    CHECK( bad.out == "condition1: e\n" );

    TempFile twin{ "twin.model", "values: a b\nactions: x\nstates: s\neffect: s, x = a+ b+\n" };
    auto merged = run_cli( { "--file", twin.str(), "validate" } );
    CHECK( merged.code == 1 );
    CHECK( merged.out == "condition2: {a, b}\n" );

    TempFile triple{ "triple.model", "values: a b c\nactions: x\nstates: s\neffect: s, x = a+ b- c-\n" };
    auto c3 = run_cli( { "--file", triple.str(), "validate" } );
    CHECK( c3.code == 1 );
    CHECK( c3.out == "condition2: {b, c}\ncondition3: a -> {b, c}\n" );

    TempFile malformed{ "malformed.model", "values: a\nnonsense\n" };
    auto broken = run_cli( { "--file", malformed.str(), "validate" } );
    CHECK( broken.code == 2 );
    CHECK( broken.out.empty() );
    CHECK( broken.err.find( "line 2" ) != std::string::npos );

    CHECK( run_cli( { "--file", "/nonexistent/x.model", "validate" } ).code == 2 );
}

TEST_CASE( "classify" )
{
    auto r = run_cli( { "--file", table1(), "classify", "--state", "s1", "--action", "aprime", "a", "b" } );
    CHECK( r.code == 0 );
    CHECK( r.out == "Conflicting\n" );
    CHECK( run_cli( { "--file", table1(), "classify", "--state", "s1", "--action", "adblp", "a", "b" } ).out ==
           "BothIndifferent\n" );
    CHECK( run_cli( { "classify", "--state", "s2", "--action", "aprime", "a", "c", "--file", table1() } ).out ==
           "Conforming\n" );
    CHECK( run_cli( { "--file", table1(), "classify", "--state", "s1", "--action", "adblp", "a", "d" } ).out ==
           "Mixed\n" );

    CHECK( run_cli( { "--file", table1(), "classify", "--state", "s1", "--action", "aprime", "a", "a" } ).code == 2 );
    CHECK( run_cli( { "--file", table1(), "classify", "--state", "s1", "--action", "nope", "a", "b" } ).code == 2 );
    CHECK( run_cli( { "--file", table1(), "classify", "--state", "s1", "a", "b" } ).code == 2 );
    CHECK( run_cli( { "--file", example5(), "classify", "--state", "s1", "--action", "x", "a", "b" } ).code == 2 );
}

TEST_CASE( "every classify verdict equals the library call" )
{
    const auto m = *parse_document( read_fixture( "table1.model" ) ).model;
    for ( const auto cell : m.cells() )
        for ( const auto& v : m.values() )
            for ( const auto& w : m.values() )
            {
                if ( v == w )
                    continue;
                const auto& s = m.states()[ cell.state ];
                const auto& a = m.actions()[ cell.action ];
                auto r = run_cli( { "--file", table1(), "classify", "--state", s.name(), "--action", a.name(), v.name(), w.name() } );
                CHECK( r.out == std::string{ to_string( classify_pair( m, s, a, v, w ) ) } + "\n" );
                auto i = run_cli( { "--file", table1(), "inherent", v.name(), w.name() } );
                CHECK( i.out == std::string{ to_string( inherent_relation( m, v, w ) ) } + "\n" );
            }
}

TEST_CASE( "inherent and partition" )
{
    CHECK( run_cli( { "--file", table1(), "inherent", "a", "b" } ).out == "InherentlyConflicting\n" );
    CHECK( run_cli( { "--file", table1(), "inherent", "a", "d" } ).out == "Neither\n" );
    CHECK( run_cli( { "--file", table1(), "inherent", "a", "a" } ).code == 2 );

    auto p = run_cli( { "--file", table1(), "partition" } );
    CHECK( p.code == 0 );
    CHECK( p.out == "Vperp: a b\npair: a ~ b\n" );

    auto p5 = run_cli( { "--file", example5(), "partition" } );
    CHECK( p5.out == "Vperp: a abar c cbar d dbar\npair: a ~ abar\npair: c ~ cbar\npair: d ~ dbar\n" );

    TempFile triple{ "triple_p.model", "values: a b c\nactions: x\nstates: s\neffect: s, x = a+ b- c-\n" };
    auto bad = run_cli( { "--file", triple.str(), "partition" } );
    CHECK( bad.code == 1 );
    CHECK( bad.out == "condition3: a -> {b, c}\n" );
}

TEST_CASE( "normalize" )
{
    TempFile out{ "normalized.model" };
    auto r = run_cli( { "--file", table1(), "normalize", "--out", out.str() } );
    CHECK( r.code == 0 );
    CHECK( r.out.empty() );
    std::ifstream in{ out.path };
    std::stringstream written;
    written << in.rdbuf();
    CHECK( written.str() == read_fixture( "table1.model" ) );

    TempFile dup{ "dup.model", "values: a a2 b\nactions: x\nstates: s t\n"
                               "effect: s, x = a+ a2+ b-\neffect: t, x = b+\nset: V = a2, b, a\n" };
    TempFile dup_out{ "dup_out.model" };
    auto merged = run_cli( { "--file", dup.str(), "normalize", "--out", dup_out.str() } );
    CHECK( merged.code == 0 );
    CHECK( merged.out == "merge: a2 -> a\n" );
    std::ifstream in2{ dup_out.path };
    std::stringstream written2;
    written2 << in2.rdbuf();
    CHECK( written2.str() == "values: a b\nactions: x\nstates: s t\neffect: s, x = a+ b-\neffect: t, x = b+\nset: V = a, b\n" );

    CHECK( run_cli( { "--file", table1(), "normalize" } ).code == 2 );
}

TEST_CASE( "consistent and conflict" )
{
    auto c = run_cli( { "--file", example5(), "consistent", "Vpp" } );
    CHECK( c.code == 1 );
    CHECK( c.out == "inconsistent: {d, dbar}\n" );
    auto ok = run_cli( { "--file", example5(), "consistent", "V" } );
    CHECK( ok.code == 0 );
    CHECK( ok.out == "consistent\n" );
    CHECK( run_cli( { "--file", example5(), "consistent", "Vp" } ).code == 0 );

    auto x = run_cli( { "--file", example5(), "conflict", "V", "Vp" } );
    CHECK( x.code == 1 );
    CHECK( x.out == "conflicting: {a, abar}\n" );
    auto y = run_cli( { "--file", example5(), "conflict", "V", "Vpp" } );
    CHECK( y.code == 0 );
    CHECK( y.out == "non-conflicting\n" );

    CHECK( run_cli( { "--file", example5(), "consistent", "Nope" } ).code == 2 );
}

TEST_CASE( "simulate" )
{
    auto two = run_cli( { "--file", table1(), "simulate", "--steps", "s1,aprime; s2,aprime" } );
    CHECK( two.code == 0 );
    CHECK( two.out == "0\t-\t-\ta=0\tb=0\tc=0\td=0\n"
                      "1\ts1\taprime\ta=1\tb=-1\tc=-1\td=-1\n"
                      "2\ts2\taprime\ta=0\tb=0\tc=-2\td=0\n" );

    auto init = run_cli( { "--file", table1(), "simulate", "--init", "a=5,b=5,c=5,d=5", "--steps", "s1,aprime" } );
    CHECK( init.out == "0\t-\t-\ta=5\tb=5\tc=5\td=5\n1\ts1\taprime\ta=6\tb=4\tc=4\td=4\n" );

    auto empty = run_cli( { "--file", table1(), "simulate", "--init", "c=-3" } );
    CHECK( empty.code == 0 );
    CHECK( empty.out == "0\t-\t-\ta=0\tb=0\tc=-3\td=0\n" );

    auto bad_step = run_cli( { "--file", table1(), "simulate", "--steps", "s1 aprime" } );
    CHECK( bad_step.code == 2 );
    TempFile partial{ "partial.model", "values: v\nactions: x\nstates: s t\nexec: x = t\n" };
    auto not_exec = run_cli( { "--file", partial.str(), "simulate", "--steps", "t,x; s,x" } );
    CHECK( not_exec.code == 2 );
    CHECK( not_exec.out.empty() );
    CHECK( not_exec.err.find( "step 2" ) != std::string::npos );
    CHECK( run_cli( { "--file", table1(), "simulate", "--init", "q=1" } ).code == 2 );
    CHECK( run_cli( { "--file", table1(), "simulate", "--init", "a=x" } ).code == 2 );
}

TEST_CASE( "report" )
{
    auto r = run_cli( { "--file", table1(), "report" } );
    CHECK( r.code == 0 );
    std::size_t inherent_lines = 0, classify_lines = 0;
    std::istringstream lines{ r.out };
    for ( std::string line; std::getline( lines, line ); )
    {
        inherent_lines += line.starts_with( "inherent: " );
        classify_lines += line.starts_with( "classify: " );
    }
    CHECK( inherent_lines == 6 );
    CHECK( classify_lines == 24 );
    CHECK( r.out.starts_with( "report: values=4 actions=2 states=2 cells=4\n"
                              "classify: s1, aprime, a, b = Conflicting\n" ) );
    CHECK( r.out.find( "inherent: a, b = InherentlyConflicting\n" ) != std::string::npos );
    CHECK( run_cli( { "--file", table1(), "report" } ).out == r.out );

    TempFile empty{ "empty.model", "values:\nactions:\nstates:\n" };
    CHECK( run_cli( { "--file", empty.str(), "report" } ).out == "report: values=0 actions=0 states=0 cells=0\n" );
}

TEST_CASE( "usage errors" )
{
    CHECK( run_cli( {} ).code == 2 );
    CHECK( run_cli( { "validate" } ).code == 2 );
    CHECK( run_cli( { "--file", table1() } ).code == 2 );
    CHECK( run_cli( { "--file", table1(), "frobnicate" } ).code == 2 );
    CHECK( run_cli( { "--help" } ).code == 0 );
}
