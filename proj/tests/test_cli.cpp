// SPDX-License-Identifier: MIT
// Drives the qbx executable end to end.
#include <qbx/qbx.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

using namespace qbx;

namespace
{

struct Result
{
  int code;
  std::string out;
};

Result qbx_cli( std::string const& args )
{
  auto const cmd = std::string( QBX_CLI_PATH ) + " " + args + " 2>/dev/null";
  FILE* pipe = popen( cmd.c_str(), "r" );
  if ( pipe == nullptr )
    return { -1, {} };
  std::string out;
  std::array<char, 4096> buf{};
  for ( std::size_t n; ( n = fread( buf.data(), 1, buf.size(), pipe ) ) > 0; )
    out.append( buf.data(), n );
  auto const status = pclose( pipe );
  return { WIFEXITED( status ) ? WEXITSTATUS( status ) : -1, out };
}

std::string data( std::string const& rel ) { return std::string( QBX_DATA_DIR ) + "/" + rel; }

std::string temp_path( std::string const& name )
{
  return ( std::filesystem::temp_directory_path() / ( "qbx_cli_test_" + name ) ).string();
}

} // namespace

TEST( Cli, SynthTableOneFunction )
{
  auto const r = qbx_cli( "synth --expr '~x1 + x2 x3'" );
  ASSERT_EQ( r.code, 0 );
  EXPECT_NE( r.out.find( "# stage1 5\n# stage2 19\n# final 3\n" ), std::string::npos );
  auto const c = parse_circuit( r.out );
  EXPECT_EQ( c.num_gates(), 3u );
  EXPECT_EQ( computed_function( c, 3, 4 ).to_bits(), "11110001" );
}

TEST( Cli, SynthStagesAndFast )
{
  auto const s1 = qbx_cli( "synth --table 11110001 --emit-stage 1" );
  ASSERT_EQ( s1.code, 0 );
  EXPECT_EQ( parse_circuit( s1.out ).num_gates(), 5u );
  auto const s2 = qbx_cli( "synth --table 11110001 --emit-stage 2" );
  EXPECT_EQ( parse_circuit( s2.out ).num_gates(), 19u );
  EXPECT_EQ( qbx_cli( "synth --table 11110001 --fast" ).out, qbx_cli( "synth --table 11110001" ).out );
  EXPECT_EQ( qbx_cli( "synth --table 11110001 --fast --emit-stage 2" ).code, 2 );
}

TEST( Cli, SynthEdgeCases )
{
  auto const zero = qbx_cli( "synth --table 00000000" );
  EXPECT_EQ( zero.code, 0 );
  EXPECT_TRUE( parse_circuit( zero.out ).empty() );
  EXPECT_EQ( qbx_cli( "synth --expr x9 --arity 3" ).code, 2 );
  EXPECT_EQ( qbx_cli( "synth --expr 'x1 +'" ).code, 1 );
  EXPECT_EQ( qbx_cli( "synth --table 011" ).code, 1 );
  EXPECT_EQ( qbx_cli( "synth --table 01 --expr x1" ).code, 1 );
  EXPECT_EQ( qbx_cli( "synth" ).code, 2 );
  EXPECT_EQ( qbx_cli( "synth --file " + data( "table1.tt" ) ).out, qbx_cli( "synth --table 11110001" ).out );
}

TEST( Cli, SynthWritesFile )
{
  auto const path = temp_path( "fig13.qc" );
  ASSERT_EQ( qbx_cli( "synth --table 11110001 --out " + path ).code, 0 );
  std::ifstream in( path );
  std::string text( ( std::istreambuf_iterator<char>( in ) ), std::istreambuf_iterator<char>() );
  EXPECT_EQ( parse_circuit( text ), synthesize( function_from_table_text( "11110001" ) ) );
  std::filesystem::remove( path );
}

TEST( Cli, Sim )
{
  EXPECT_EQ( qbx_cli( "sim " + data( "circuits/fig3.qc" ) + " --input 0000" ).out, "0001\n" );
  EXPECT_EQ( qbx_cli( "sim " + data( "circuits/empty.qc" ) + " --input 01" ).out, "01\n" );
  EXPECT_EQ( qbx_cli( "sim " + data( "circuits/fig13.qc" ) + " --table 3 4" ).out, "11110001\n" );
  EXPECT_EQ( qbx_cli( "sim " + data( "circuits/fig3.qc" ) + " --input 000" ).code, 2 );
  EXPECT_EQ( qbx_cli( "sim " + data( "circuits/fig3.qc" ) + " --input 00x0" ).code, 1 );
  EXPECT_EQ( qbx_cli( "sim /nonexistent.qc --input 0" ).code, 2 );
}

TEST( Cli, Enumerate )
{
  auto const r = qbx_cli( "enumerate 4 --format kv" );
  ASSERT_EQ( r.code, 0 );
  auto const rep = parse_report_kv( r.out );
  EXPECT_EQ( rep.counts, enumerate_all( 4 ).counts );
  EXPECT_NE( r.out.find( "p_average=0.7109375" ), std::string::npos );
  EXPECT_NE( r.out.find( "p_worst=0.00390625" ), std::string::npos );
  EXPECT_EQ( qbx_cli( "enumerate 7" ).code, 2 );

  auto const a = qbx_cli( "enumerate 5 --sample 500 --seed 9" );
  EXPECT_EQ( a.code, 0 );
  EXPECT_EQ( a.out, qbx_cli( "enumerate 5 --sample 500 --seed 9" ).out );
  EXPECT_EQ( qbx_cli( "enumerate 5 --sample 500 --seed 9 --format kv" ).out, format_report_kv( sample_distribution( 5, 500, 9 ) ) );
}

TEST( Cli, Convert )
{
  auto const r = qbx_cli( "convert " + data( "netlists/full_adder.net" ) + " --verify" );
  ASSERT_EQ( r.code, 0 );
  EXPECT_NE( r.out.find( "# verify pass" ), std::string::npos );
  auto const c = parse_circuit( r.out );
  auto const nl = parse_netlist( "input a b cin\np = XOR a b\nsum = XOR p cin\ng = AND a b\nq = AND p cin\ncout = OR g q\noutput sum cout" );
  EXPECT_EQ( c, convert( nl ).circuit );

  auto const fan = qbx_cli( "convert " + data( "netlists/full_adder.net" ) + " --verify --explicit-fanout" );
  EXPECT_EQ( fan.code, 0 );
  EXPECT_GT( parse_circuit( fan.out ).width(), c.width() );

  auto const bad = temp_path( "cycle.net" );
  std::ofstream( bad ) << "input a\nx = AND a y\ny = OR a x\noutput y\n";
  EXPECT_EQ( qbx_cli( "convert " + bad ).code, 2 );
  std::ofstream( bad ) << "input a\nx = FOO a\noutput x\n";
  EXPECT_EQ( qbx_cli( "convert " + bad ).code, 1 );
  std::filesystem::remove( bad );
}

TEST( Cli, Oracle )
{
  EXPECT_EQ( qbx_cli( "oracle --table 11110001" ).out, "x1 x2 x3 ^ x1 ^ 1\n" );
  EXPECT_EQ( qbx_cli( "oracle --table 0110" ).out, "x1 ^ x2\n" );
  EXPECT_EQ( qbx_cli( "oracle --table 0000" ).out, "0\n" );
  auto const r = qbx_cli( "oracle --expr '(x1 + x3)(~x1 + x2 + x3)'" );
  EXPECT_EQ( r.out, "x1 x2 x3 ^ x1 x2 ^ x3\n" );
  auto const text = r.out.substr( 0, r.out.size() - 1 );
  EXPECT_EQ( expression_to_function( parse_expression( text ), 3 ).to_bits(), "01010111" );
}

TEST( Cli, UnknownSubcommand ) { EXPECT_EQ( qbx_cli( "frobnicate" ).code, 1 ); }
