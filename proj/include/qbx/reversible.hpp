// SPDX-License-Identifier: MIT
/*!
  \file reversible.hpp
  \brief Reversible gate library and classical-netlist conversion

  Each classical gate becomes a fresh ancilla (initialized to 0) plus a
  short fragment of positive-polarity CNOTs computing the gate's ANF onto it:

    AND   x1 x2            OR    x1 x2 ^ x1 ^ x2     XOR   x1 ^ x2
    NAND  x1 x2 ^ 1        NOR   x1 x2 ^ x1 ^ x2 ^ 1 XNOR  x1 ^ x2 ^ 1
    NOT   x1 ^ 1           FANOUT x1

  Operands are only ever controls, so primary inputs are never modified.
*/
#pragma once

#include "circuit.hpp"
#include "errors.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace qbx
{

enum class ClassicalGateKind
{
  And,
  Or,
  Not,
  Nand,
  Nor,
  Xor,
  Xnor,
  Fanout
};

inline constexpr std::array<ClassicalGateKind, 8> all_gate_kinds = {
    ClassicalGateKind::And, ClassicalGateKind::Or, ClassicalGateKind::Not, ClassicalGateKind::Nand,
    ClassicalGateKind::Nor, ClassicalGateKind::Xor, ClassicalGateKind::Xnor, ClassicalGateKind::Fanout };

inline constexpr std::size_t num_operands( ClassicalGateKind kind )
{
  return ( kind == ClassicalGateKind::Not || kind == ClassicalGateKind::Fanout ) ? 1u : 2u;
}

inline std::string_view kind_name( ClassicalGateKind kind )
{
  switch ( kind )
  {
  case ClassicalGateKind::And:
    return "AND";
  case ClassicalGateKind::Or:
    return "OR";
  case ClassicalGateKind::Not:
    return "NOT";
  case ClassicalGateKind::Nand:
    return "NAND";
  case ClassicalGateKind::Nor:
    return "NOR";
  case ClassicalGateKind::Xor:
    return "XOR";
  case ClassicalGateKind::Xnor:
    return "XNOR";
  case ClassicalGateKind::Fanout:
    return "FANOUT";
  }
  return "?";
}

inline std::optional<ClassicalGateKind> kind_from_name( std::string_view name )
{
  std::string upper( name );
  std::transform( upper.begin(), upper.end(), upper.begin(), []( unsigned char c ) { return static_cast<char>( std::toupper( c ) ); } );
  for ( auto k : all_gate_kinds )
  {
    if ( kind_name( k ) == upper )
      return k;
  }
  return std::nullopt;
}

/// Classical evaluation of one gate.
inline bool evaluate_kind( ClassicalGateKind kind, bool a, bool b = false )
{
  switch ( kind )
  {
  case ClassicalGateKind::And:
    return a && b;
  case ClassicalGateKind::Or:
    return a || b;
  case ClassicalGateKind::Not:
    return !a;
  case ClassicalGateKind::Nand:
    return !( a && b );
  case ClassicalGateKind::Nor:
    return !( a || b );
  case ClassicalGateKind::Xor:
    return a != b;
  case ClassicalGateKind::Xnor:
    return a == b;
  case ClassicalGateKind::Fanout:
    return a;
  }
  return false;
}

/*! \brief Gate fragment computing `kind(operands)` onto `target` (assumed 0).
 *
 * If both operands name the same qubit the AND term degenerates to a single
 * control, which keeps the fragment correct for inputs such as `AND a a`.
 */
inline std::vector<ControlledNotGate> gate_template( ClassicalGateKind kind, std::vector<qubit_t> const& operands, qubit_t target )
{
  if ( operands.size() != num_operands( kind ) )
  {
    throw semantic_error( std::string( kind_name( kind ) ) + " expects " + std::to_string( num_operands( kind ) ) + " operand(s)" );
  }
  for ( auto q : operands )
  {
    if ( q == target )
    {
      throw semantic_error( "operand qubit " + std::to_string( q ) + " collides with target" );
    }
  }

  auto const a = operands[0];
  auto const b = operands.size() > 1u ? operands[1] : a;
  auto product = [&]() {
    return a == b ? ControlledNotGate( target, { a } ) : ControlledNotGate( target, { a, b } );
  };

  std::vector<ControlledNotGate> gates;
  switch ( kind )
  {
  case ClassicalGateKind::And:
  case ClassicalGateKind::Nand:
    gates.push_back( product() );
    break;
  case ClassicalGateKind::Or:
  case ClassicalGateKind::Nor:
    gates.push_back( product() );
    gates.emplace_back( target, std::vector<qubit_t>{ a } );
    gates.emplace_back( target, std::vector<qubit_t>{ b } );
    break;
  case ClassicalGateKind::Xor:
  case ClassicalGateKind::Xnor:
    gates.emplace_back( target, std::vector<qubit_t>{ a } );
    gates.emplace_back( target, std::vector<qubit_t>{ b } );
    break;
  case ClassicalGateKind::Not:
  case ClassicalGateKind::Fanout:
    gates.emplace_back( target, std::vector<qubit_t>{ a } );
    break;
  }

  if ( kind == ClassicalGateKind::Nand || kind == ClassicalGateKind::Nor || kind == ClassicalGateKind::Xnor ||
       kind == ClassicalGateKind::Not )
  {
    gates.push_back( ControlledNotGate::not_gate( target ) );
  }
  return gates;
}

/// One classical gate: `output = kind inputs...`.
struct NetlistGate
{
  ClassicalGateKind kind;
  std::vector<std::string> inputs;
  std::string output;

  bool operator==( NetlistGate const& ) const = default;
};

/// Combinational netlist with gates in topological order.
struct Netlist
{
  std::vector<std::string> inputs;
  std::vector<NetlistGate> gates;
  std::vector<std::string> outputs;

  /// Evaluates all wires for one assignment of the primary inputs (bit i = inputs[i]).
  std::map<std::string, bool> evaluate( std::vector<bool> const& assignment ) const
  {
    std::map<std::string, bool> values;
    for ( std::size_t i = 0; i < inputs.size(); ++i )
      values[inputs[i]] = assignment[i];
    for ( auto const& g : gates )
    {
      auto const a = values.at( g.inputs[0] );
      auto const b = g.inputs.size() > 1u ? values.at( g.inputs[1] ) : false;
      values[g.output] = evaluate_kind( g.kind, a, b );
    }
    return values;
  }
};

namespace detail
{

inline bool is_identifier( std::string_view s )
{
  if ( s.empty() || !( std::isalpha( static_cast<unsigned char>( s[0] ) ) || s[0] == '_' ) )
    return false;
  return std::all_of( s.begin(), s.end(), []( unsigned char c ) { return std::isalnum( c ) || c == '_' || c == '.' || c == '[' || c == ']'; } );
}

} // namespace detail

/*! \brief Parses a netlist and sorts its gates topologically.
 *
 * \verbatim
   input a b c
   t = AND a b
   s = OR t c
   output s
   \endverbatim
 *
 * `;` may be used instead of a newline. Gates may appear in any order as long
 * as the wire graph is acyclic; among ready gates the file order is kept.
 */
inline Netlist parse_netlist( std::string_view text )
{
  Netlist raw;
  std::set<std::string> defined;

  auto define = [&]( std::string const& name, std::size_t line_no ) {
    if ( !detail::is_identifier( name ) )
      throw parse_error( "invalid wire name '" + name + "' on line " + std::to_string( line_no ) );
    if ( !defined.insert( name ).second )
      throw semantic_error( "wire '" + name + "' defined more than once (line " + std::to_string( line_no ) + ")" );
  };

  std::istringstream in{ std::string( text ) };
  std::string physical;
  std::size_t line_no = 0u;
  while ( std::getline( in, physical ) )
  {
    ++line_no;
    if ( auto const hash = physical.find( '#' ); hash != std::string::npos )
      physical.erase( hash );

    std::istringstream statements( physical );
    std::string statement;
    while ( std::getline( statements, statement, ';' ) )
    {
      std::istringstream words( statement );
      std::vector<std::string> tok;
      for ( std::string w; words >> w; )
        tok.push_back( w );
      if ( tok.empty() )
        continue;

      if ( tok[0] == "input" )
      {
        for ( std::size_t i = 1; i < tok.size(); ++i )
        {
          define( tok[i], line_no );
          raw.inputs.push_back( tok[i] );
        }
      }
      else if ( tok[0] == "output" )
      {
        for ( std::size_t i = 1; i < tok.size(); ++i )
        {
          if ( !detail::is_identifier( tok[i] ) )
            throw parse_error( "invalid wire name '" + tok[i] + "' on line " + std::to_string( line_no ) );
          raw.outputs.push_back( tok[i] );
        }
      }
      else if ( tok.size() >= 3u && tok[1] == "=" )
      {
        auto const kind = kind_from_name( tok[2] );
        if ( !kind || *kind == ClassicalGateKind::Fanout )
          throw parse_error( "unknown gate kind '" + tok[2] + "' on line " + std::to_string( line_no ) );
        std::vector<std::string> ins( tok.begin() + 3, tok.end() );
        if ( ins.size() != num_operands( *kind ) )
          throw semantic_error( std::string( kind_name( *kind ) ) + " on line " + std::to_string( line_no ) + " expects " +
                                std::to_string( num_operands( *kind ) ) + " input(s), got " + std::to_string( ins.size() ) );
        for ( auto const& w : ins )
          if ( !detail::is_identifier( w ) )
            throw parse_error( "invalid wire name '" + w + "' on line " + std::to_string( line_no ) );
        define( tok[0], line_no );
        raw.gates.push_back( { *kind, std::move( ins ), tok[0] } );
      }
      else
      {
        throw parse_error( "malformed statement '" + statement + "' on line " + std::to_string( line_no ) );
      }
    }
  }

  for ( auto const& g : raw.gates )
    for ( auto const& w : g.inputs )
      if ( !defined.count( w ) )
        throw semantic_error( "undefined wire '" + w + "' used by gate '" + g.output + "'" );
  for ( auto const& w : raw.outputs )
    if ( !defined.count( w ) )
      throw semantic_error( "undefined output wire '" + w + "'" );

  // stable topological order: repeatedly emit the first gate whose inputs are ready
  Netlist nl;
  nl.inputs = raw.inputs;
  nl.outputs = raw.outputs;
  std::set<std::string> ready( raw.inputs.begin(), raw.inputs.end() );
  std::vector<bool> placed( raw.gates.size(), false );
  for ( std::size_t emitted = 0; emitted < raw.gates.size(); )
  {
    bool progress = false;
    for ( std::size_t i = 0; i < raw.gates.size(); ++i )
    {
      if ( placed[i] )
        continue;
      auto const& g = raw.gates[i];
      if ( std::all_of( g.inputs.begin(), g.inputs.end(), [&]( auto const& w ) { return ready.count( w ) != 0u; } ) )
      {
        placed[i] = true;
        ready.insert( g.output );
        nl.gates.push_back( g );
        ++emitted;
        progress = true;
        break;
      }
    }
    if ( !progress )
    {
      std::string stuck;
      for ( std::size_t i = 0; i < raw.gates.size(); ++i )
        if ( !placed[i] )
          stuck += ( stuck.empty() ? "" : ", " ) + raw.gates[i].output;
      throw semantic_error( "netlist contains a cycle through: " + stuck );
    }
  }
  return nl;
}

/// Wire-to-qubit assignment produced by `convert`.
struct QubitMap
{
  std::map<std::string, qubit_t> wires;                     ///< every netlist wire
  std::vector<std::pair<std::string, qubit_t>> fanout_copies; ///< explicit FANOUT copies (wire, qubit)
  qubit_t num_inputs = 0u;
  qubit_t num_ancillas = 0u;

  qubit_t at( std::string const& wire ) const
  {
    auto it = wires.find( wire );
    if ( it == wires.end() )
      throw semantic_error( "wire '" + wire + "' is not mapped" );
    return it->second;
  }
};

struct Conversion
{
  Circuit circuit;
  QubitMap map;
};

/*! \brief Builds the reversible version of a netlist.
 *
 * Primary inputs occupy qubits 1..p, each gate appends one ancilla. With
 * `explicit_fanout`, a wire read by w > 1 gate inputs is first copied w - 1
 * times with FANOUT onto fresh ancillas and every read consumes its own copy.
 */
inline Conversion convert( Netlist const& nl, bool explicit_fanout = false )
{
  Conversion result;
  auto& c = result.circuit;
  auto& map = result.map;

  std::map<std::string, std::size_t> uses;
  for ( auto const& g : nl.gates )
    for ( auto const& w : g.inputs )
      ++uses[w];

  // copies available for each wire, consumed front to back
  std::map<std::string, std::vector<qubit_t>> available;

  auto make_copies = [&]( std::string const& wire, qubit_t source ) {
    auto& pool = available[wire];
    pool.push_back( source );
    if ( !explicit_fanout )
      return;
    auto const n = uses[wire];
    for ( std::size_t i = 1; i < n; ++i )
    {
      auto const copy = c.add_qubits();
      ++map.num_ancillas;
      for ( auto& g : gate_template( ClassicalGateKind::Fanout, { source }, copy ) )
        c.add_gate( std::move( g ) );
      map.fanout_copies.emplace_back( wire, copy );
      pool.push_back( copy );
    }
  };

  auto take = [&]( std::string const& wire ) {
    auto& pool = available.at( wire );
    if ( !explicit_fanout )
      return pool.front();
    auto const q = pool.front();
    pool.erase( pool.begin() );
    return q;
  };

  for ( auto const& in : nl.inputs )
  {
    auto const q = c.add_qubits();
    map.wires[in] = q;
    ++map.num_inputs;
  }
  for ( auto const& in : nl.inputs )
    make_copies( in, map.wires[in] );

  for ( auto const& g : nl.gates )
  {
    std::vector<qubit_t> operands;
    for ( auto const& w : g.inputs )
      operands.push_back( take( w ) );
    auto const target = c.add_qubits();
    ++map.num_ancillas;
    map.wires[g.output] = target;
    for ( auto& gate : gate_template( g.kind, operands, target ) )
      c.add_gate( std::move( gate ) );
    make_copies( g.output, target );
  }
  return result;
}

struct Verdict
{
  bool passed = true;
  std::uint64_t assignments_checked = 0u;
  std::optional<std::string> counterexample; ///< primary-input bits, in declaration order
  std::string message;
};

/// Largest number of primary inputs `verify_conversion` sweeps.
inline constexpr std::size_t max_verify_inputs = 16u;

/*! \brief Exhaustively checks a converted circuit against the netlist.
 *
 * For every primary-input assignment, runs the circuit with all ancillas 0
 * and compares the mapped output qubits with classical evaluation; input
 * qubits must come back unchanged. Reports the lowest failing assignment.
 */
inline Verdict verify_conversion( Netlist const& nl, Circuit const& c, QubitMap const& map, std::size_t workers = worker_count() )
{
  auto const p = nl.inputs.size();
  if ( p > max_verify_inputs )
  {
    throw semantic_error( "exhaustive verification is limited to " + std::to_string( max_verify_inputs ) + " primary inputs" );
  }
  auto const total = std::uint64_t{ 1 } << p;

  std::vector<std::uint64_t> first_failure( std::max<std::size_t>( 1u, workers ), total );
  std::vector<std::string> reasons( first_failure.size() );
  parallel_blocks( total, workers, [&]( std::size_t w, std::size_t begin, std::size_t end ) {
    for ( std::uint64_t a = begin; a < end; ++a )
    {
      std::vector<bool> assignment( p );
      BasisState s( c.width() );
      for ( std::size_t i = 0; i < p; ++i )
      {
        assignment[i] = ( ( a >> ( p - 1u - i ) ) & 1u ) != 0u;
        s.set( map.at( nl.inputs[i] ), assignment[i] );
      }
      auto const out = run( c, s );
      auto const expected = nl.evaluate( assignment );

      std::string reason;
      for ( std::size_t i = 0; i < p && reason.empty(); ++i )
        if ( out[map.at( nl.inputs[i] )] != assignment[i] )
          reason = "input '" + nl.inputs[i] + "' was modified";
      for ( auto const& o : nl.outputs )
      {
        if ( !reason.empty() )
          break;
        if ( out[map.at( o )] != expected.at( o ) )
          reason = "output '" + o + "' is " + ( out[map.at( o )] ? "1" : "0" ) + ", expected " + ( expected.at( o ) ? "1" : "0" );
      }
      if ( !reason.empty() )
      {
        first_failure[w] = a;
        reasons[w] = reason;
        return;
      }
    }
  } );

  Verdict v;
  v.assignments_checked = total;
  auto const it = std::min_element( first_failure.begin(), first_failure.end() );
  if ( *it != total )
  {
    v.passed = false;
    std::string bits( p, '0' );
    for ( std::size_t i = 0; i < p; ++i )
      bits[i] = ( ( *it >> ( p - 1u - i ) ) & 1u ) ? '1' : '0';
    v.counterexample = bits;
    v.message = "counterexample " + bits + ": " + reasons[static_cast<std::size_t>( it - first_failure.begin() )];
  }
  else
  {
    v.message = "pass (" + std::to_string( total ) + " assignments)";
  }
  return v;
}

} // namespace qbx
