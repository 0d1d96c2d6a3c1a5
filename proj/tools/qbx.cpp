// SPDX-License-Identifier: MIT
// qbx: reversible circuit synthesis, simulation, enumeration and netlist conversion.
//
// Exit codes: 0 success, 1 parse error, 2 semantic error, 3 verification failure.

#include <qbx/qbx.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace
{

enum exit_code : int
{
  ok = 0,
  parse_failure = 1,
  semantic_failure = 2,
  verification_failure = 3
};

std::string read_file( std::string const& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
  {
    throw qbx::semantic_error( "cannot open '" + path + "'" );
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output( std::optional<std::string> const& path, std::string const& text )
{
  if ( !path )
  {
    std::cout << text;
    return;
  }
  std::ofstream out( *path, std::ios::binary );
  if ( !out )
  {
    throw qbx::semantic_error( "cannot write '" + *path + "'" );
  }
  out << text;
}

/// The single function source shared by `synth` and `oracle`.
struct FunctionSource
{
  std::optional<std::string> expr;
  std::optional<std::string> table;
  std::optional<std::string> file;
  std::optional<unsigned> arity;

  void attach( CLI::App& cmd )
  {
    auto* e = cmd.add_option( "-e,--expr", expr, "Boolean expression, e.g. \"~x1 + x2 x3\"" );
    auto* t = cmd.add_option( "-t,--table", table, "truth table bits, row 0 first (x1 is the MSB)" );
    auto* f = cmd.add_option( "-f,--file", file, "truth-table file" );
    e->excludes( t, f );
    t->excludes( f );
    cmd.add_option( "-k,--arity", arity, "number of inputs for --expr (default: highest variable index)" );
  }

  qbx::BooleanFunction load() const
  {
    if ( expr )
    {
      auto const ast = qbx::parse_expression( *expr );
      return qbx::expression_to_function( ast, arity.value_or( ast.max_variable() ) );
    }
    std::optional<qbx::BooleanFunction> f;
    if ( table )
      f = qbx::function_from_table_text( *table );
    else if ( file )
      f = qbx::function_from_table_text( read_file( *file ) );
    else
      throw qbx::semantic_error( "one of --expr, --table or --file is required" );
    if ( arity && *arity != f->arity() )
      throw qbx::semantic_error( "--arity does not match the truth table length" );
    return *f;
  }
};

int cmd_synth( FunctionSource const& src, int emit_stage, bool fast, std::optional<std::string> const& out )
{
  auto const f = src.load();
  auto const s1 = qbx::stage1( f );

  std::ostringstream text;
  text << "# function " << f.to_bits() << "\n";
  text << "# stage1 " << s1.num_gates() << "\n";
  text << "# stage2 " << qbx::stage2_gate_count( s1 ) << "\n";

  qbx::Circuit emitted;
  if ( fast )
  {
    if ( emit_stage != 3 )
      throw qbx::semantic_error( "--fast only produces the final circuit" );
    emitted = qbx::synthesize_fast( f );
  }
  else if ( emit_stage == 1 )
  {
    emitted = s1;
  }
  else
  {
    auto s2 = qbx::stage2( s1 );
    emitted = emit_stage == 2 ? std::move( s2 ) : qbx::stage3_minimize( s2 );
  }
  auto const final_count = emit_stage == 3 ? emitted.num_gates() : qbx::anf( f ).size();
  text << "# final " << final_count << "\n";
  text << qbx::format_circuit( emitted );
  write_output( out, text.str() );
  return ok;
}

int cmd_sim( std::string const& path, std::optional<std::string> const& input, std::vector<unsigned> const& table )
{
  auto const c = qbx::parse_circuit( read_file( path ) );
  if ( input )
  {
    auto const s = qbx::BasisState::from_string( *input );
    std::cout << qbx::run( c, s ).to_string() << "\n";
    return ok;
  }
  if ( table.size() != 2u )
  {
    throw qbx::semantic_error( "one of --input or --table K TARGET is required" );
  }
  auto const f = qbx::computed_function( c, table[0], static_cast<qbx::qubit_t>( table[1] ) );
  std::cout << f.to_bits() << "\n";
  return ok;
}

int cmd_enumerate( unsigned n, std::optional<std::uint64_t> sample, std::uint64_t seed, std::string const& format )
{
  auto const report = sample ? qbx::sample_distribution( n, *sample, seed ) : qbx::enumerate_all( n );
  std::cout << ( format == "kv" ? qbx::format_report_kv( report ) : qbx::format_report_text( report ) );
  return ok;
}

int cmd_convert( std::string const& path, bool explicit_fanout, bool verify, std::optional<std::string> const& out )
{
  auto const nl = qbx::parse_netlist( read_file( path ) );
  auto const [circuit, map] = qbx::convert( nl, explicit_fanout );

  std::ostringstream text;
  text << "# inputs " << map.num_inputs << ", ancillas " << map.num_ancillas << "\n";
  for ( auto const& w : nl.inputs )
    text << "# map " << w << " " << map.at( w ) << "\n";
  for ( auto const& g : nl.gates )
    text << "# map " << g.output << " " << map.at( g.output ) << "\n";
  for ( auto const& [w, q] : map.fanout_copies )
    text << "# copy " << w << " " << q << "\n";
  for ( auto const& o : nl.outputs )
    text << "# output " << o << " " << map.at( o ) << "\n";

  int code = ok;
  if ( verify )
  {
    auto const verdict = qbx::verify_conversion( nl, circuit, map );
    text << "# verify " << verdict.message << "\n";
    if ( !verdict.passed )
    {
      std::cerr << "verification failed: " << verdict.message << "\n";
      code = verification_failure;
    }
  }
  text << qbx::format_circuit( circuit );
  write_output( out, text.str() );
  return code;
}

int cmd_oracle( FunctionSource const& src )
{
  std::cout << qbx::anf( src.load() ).to_string() << "\n";
  return ok;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "Reversible circuit synthesis from truth tables" };
  app.require_subcommand( 1 );

  FunctionSource synth_src;
  int emit_stage = 3;
  bool fast = false;
  std::optional<std::string> synth_out;
  auto* synth = app.add_subcommand( "synth", "synthesize a multi-controlled NOT circuit" );
  synth_src.attach( *synth );
  synth->add_option( "--emit-stage", emit_stage, "emit the circuit after stage 1, 2 or 3" )->check( CLI::Range( 1, 3 ) );
  synth->add_flag( "--fast", fast, "build the final circuit directly from the ANF" );
  synth->add_option( "-o,--out", synth_out, "write the circuit to a file" );

  std::string sim_path;
  std::optional<std::string> sim_input;
  std::vector<unsigned> sim_table;
  auto* sim = app.add_subcommand( "sim", "simulate a circuit file" );
  sim->add_option( "circuit", sim_path, "circuit file" )->required();
  auto* in_opt = sim->add_option( "-i,--input", sim_input, "basis state, qubit 1 first" );
  auto* tab_opt = sim->add_option( "--table", sim_table, "K TARGET: tabulate the function of K inputs read on TARGET" )->expected( 2 );
  in_opt->excludes( tab_opt );

  unsigned enum_n = 0u;
  std::optional<std::uint64_t> enum_sample;
  std::uint64_t enum_seed = 1u;
  std::string enum_format = "text";
  auto* enumerate = app.add_subcommand( "enumerate", "gate-count distribution over all n-qubit functions" );
  enumerate->add_option( "n", enum_n, "qubit count (inputs + 1)" )->required();
  enumerate->add_option( "--sample", enum_sample, "sample this many random functions instead of enumerating" );
  enumerate->add_option( "--seed", enum_seed, "seed for --sample" )->capture_default_str();
  enumerate->add_option( "--format", enum_format, "text or kv" )->check( CLI::IsMember( { "text", "kv" } ) )->capture_default_str();

  std::string conv_path;
  bool explicit_fanout = false;
  bool conv_verify = false;
  std::optional<std::string> conv_out;
  auto* conv = app.add_subcommand( "convert", "convert a classical netlist to a reversible circuit" );
  conv->add_option( "netlist", conv_path, "netlist file" )->required();
  conv->add_flag( "--explicit-fanout", explicit_fanout, "copy shared wires with FANOUT gates" );
  conv->add_flag( "--verify", conv_verify, "exhaustively check the conversion" );
  conv->add_option( "-o,--out", conv_out, "write the circuit to a file" );

  FunctionSource oracle_src;
  auto* oracle = app.add_subcommand( "oracle", "print the ANF (positive-polarity Reed-Muller) terms" );
  oracle_src.attach( *oracle );

  try
  {
    app.parse( argc, argv );
  }
  catch ( CLI::Success const& e )
  {
    return app.exit( e );
  }
  catch ( CLI::ParseError const& e )
  {
    app.exit( e );
    return parse_failure;
  }

  try
  {
    if ( synth->parsed() )
      return cmd_synth( synth_src, emit_stage, fast, synth_out );
    if ( sim->parsed() )
      return cmd_sim( sim_path, sim_input, sim_table );
    if ( enumerate->parsed() )
      return cmd_enumerate( enum_n, enum_sample, enum_seed, enum_format );
    if ( conv->parsed() )
      return cmd_convert( conv_path, explicit_fanout, conv_verify, conv_out );
    if ( oracle->parsed() )
      return cmd_oracle( oracle_src );
  }
  catch ( qbx::parse_error const& e )
  {
    std::cerr << "parse error: " << e.what() << "\n";
    return parse_failure;
  }
  catch ( qbx::semantic_error const& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return semantic_failure;
  }
  catch ( qbx::verification_error const& e )
  {
    std::cerr << "verification failed: " << e.what() << "\n";
    return verification_failure;
  }
  return ok;
}
