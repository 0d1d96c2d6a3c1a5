// SPDX-License-Identifier: MIT
/*!
  \file circuit.hpp
  \brief Mixed-polarity multi-controlled NOT gates and their basis-state simulation

  Qubits are numbered 1..n at every interface. A gate flips its target iff
  every positive control is 1 and every negative control is 0.
*/
#pragma once

#include "boolfn.hpp"
#include "errors.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace qbx
{

using qubit_t = std::uint32_t;

/// Classical assignment of one bit per qubit.
class BasisState
{
public:
  BasisState() = default;
  explicit BasisState( qubit_t width ) : width_( width ), words_( ( width + 63u ) / 64u, 0u ) {}

  /// From a bit string, first character = qubit 1.
  static BasisState from_string( std::string_view bits )
  {
    BasisState s( static_cast<qubit_t>( bits.size() ) );
    for ( std::size_t i = 0; i < bits.size(); ++i )
    {
      if ( bits[i] != '0' && bits[i] != '1' )
      {
        throw parse_error( "basis state must consist of 0/1 characters", i );
      }
      s.set( static_cast<qubit_t>( i + 1u ), bits[i] == '1' );
    }
    return s;
  }

  qubit_t width() const noexcept { return width_; }

  bool operator[]( qubit_t q ) const { return ( words_[( q - 1u ) >> 6u] >> ( ( q - 1u ) & 63u ) ) & 1u; }

  void set( qubit_t q, bool value )
  {
    auto const mask = std::uint64_t{ 1 } << ( ( q - 1u ) & 63u );
    auto& word = words_[( q - 1u ) >> 6u];
    word = value ? ( word | mask ) : ( word & ~mask );
  }

  void flip( qubit_t q ) { words_[( q - 1u ) >> 6u] ^= std::uint64_t{ 1 } << ( ( q - 1u ) & 63u ); }

  std::string to_string() const
  {
    std::string s( width_, '0' );
    for ( qubit_t q = 1; q <= width_; ++q )
    {
      s[q - 1u] = ( *this )[q] ? '1' : '0';
    }
    return s;
  }

  /// Packs qubit 1 as the most significant bit (only for width <= 64).
  std::uint64_t to_index() const
  {
    std::uint64_t r = 0u;
    for ( qubit_t q = 1; q <= width_; ++q )
    {
      r = ( r << 1u ) | ( ( *this )[q] ? 1u : 0u );
    }
    return r;
  }

  static BasisState from_index( std::uint64_t index, qubit_t width )
  {
    BasisState s( width );
    for ( qubit_t q = 1; q <= width; ++q )
    {
      s.set( q, ( ( index >> ( width - q ) ) & 1u ) != 0u );
    }
    return s;
  }

  bool operator==( BasisState const& ) const = default;

private:
  qubit_t width_ = 0u;
  std::vector<std::uint64_t> words_;
};

/*! \brief CNOT(C|t) with per-control polarity.
 *
 * Positive controls fire on 1, negative controls fire on 0. Control lists are
 * kept sorted and duplicate-free; the constructor rejects overlaps.
 */
class ControlledNotGate
{
public:
  ControlledNotGate() = default;

  explicit ControlledNotGate( qubit_t target, std::vector<qubit_t> positive = {}, std::vector<qubit_t> negative = {} )
      : target_( target ), positive_( std::move( positive ) ), negative_( std::move( negative ) )
  {
    if ( target_ == 0u )
    {
      throw semantic_error( "qubit indices are 1-based" );
    }
    normalize( positive_ );
    normalize( negative_ );
    for ( auto q : positive_ )
    {
      if ( std::binary_search( negative_.begin(), negative_.end(), q ) )
      {
        throw semantic_error( "qubit " + std::to_string( q ) + " is both a positive and a negative control" );
      }
    }
    if ( is_control( target_ ) )
    {
      throw semantic_error( "target qubit " + std::to_string( target_ ) + " is also a control" );
    }
  }

  /// Unconditional NOT on `target`.
  static ControlledNotGate not_gate( qubit_t target ) { return ControlledNotGate( target ); }

  qubit_t target() const noexcept { return target_; }
  std::vector<qubit_t> const& positive_controls() const noexcept { return positive_; }
  std::vector<qubit_t> const& negative_controls() const noexcept { return negative_; }
  std::size_t num_controls() const noexcept { return positive_.size() + negative_.size(); }

  bool is_control( qubit_t q ) const
  {
    return std::binary_search( positive_.begin(), positive_.end(), q ) || std::binary_search( negative_.begin(), negative_.end(), q );
  }

  /// Largest qubit index referenced.
  qubit_t max_qubit() const
  {
    qubit_t m = target_;
    if ( !positive_.empty() )
      m = std::max( m, positive_.back() );
    if ( !negative_.empty() )
      m = std::max( m, negative_.back() );
    return m;
  }

  bool fires( BasisState const& s ) const
  {
    return std::all_of( positive_.begin(), positive_.end(), [&]( auto q ) { return s[q]; } ) &&
           std::none_of( negative_.begin(), negative_.end(), [&]( auto q ) { return s[q]; } );
  }

  bool operator==( ControlledNotGate const& ) const = default;

private:
  static void normalize( std::vector<qubit_t>& v )
  {
    std::sort( v.begin(), v.end() );
    if ( std::adjacent_find( v.begin(), v.end() ) != v.end() )
    {
      throw semantic_error( "duplicate control qubit" );
    }
    if ( !v.empty() && v.front() == 0u )
    {
      throw semantic_error( "qubit indices are 1-based" );
    }
  }

  qubit_t target_ = 1u;
  std::vector<qubit_t> positive_;
  std::vector<qubit_t> negative_;
};

/// Applies one gate to a basis state.
inline BasisState apply_gate( ControlledNotGate const& g, BasisState s )
{
  if ( g.fires( s ) )
  {
    s.flip( g.target() );
  }
  return s;
}

/// An n-qubit circuit: gates applied left to right.
class Circuit
{
public:
  Circuit() = default;
  explicit Circuit( qubit_t width ) : width_( width ) {}

  Circuit( qubit_t width, std::vector<ControlledNotGate> gates ) : width_( width )
  {
    gates_.reserve( gates.size() );
    for ( auto& g : gates )
    {
      add_gate( std::move( g ) );
    }
  }

  qubit_t width() const noexcept { return width_; }
  std::size_t num_gates() const noexcept { return gates_.size(); }
  std::vector<ControlledNotGate> const& gates() const noexcept { return gates_; }
  bool empty() const noexcept { return gates_.empty(); }

  void add_gate( ControlledNotGate g )
  {
    if ( g.max_qubit() > width_ )
    {
      throw semantic_error( "gate references qubit " + std::to_string( g.max_qubit() ) + " beyond circuit width " + std::to_string( width_ ) );
    }
    gates_.push_back( std::move( g ) );
  }

  /// Grows the register by `count` qubits and returns the first new index.
  qubit_t add_qubits( qubit_t count = 1u )
  {
    auto const first = width_ + 1u;
    width_ += count;
    return first;
  }

  bool operator==( Circuit const& ) const = default;

private:
  qubit_t width_ = 0u;
  std::vector<ControlledNotGate> gates_;
};

/// Runs `c` on `s`.
inline BasisState run( Circuit const& c, BasisState s )
{
  if ( s.width() != c.width() )
  {
    throw semantic_error( "state width " + std::to_string( s.width() ) + " does not match circuit width " + std::to_string( c.width() ) );
  }
  for ( auto const& g : c.gates() )
  {
    if ( g.fires( s ) )
    {
      s.flip( g.target() );
    }
  }
  return s;
}

/*! \brief Reads the single-output function a circuit computes.
 *
 * The circuit must have `input_arity + 1` qubits. The non-target qubits, in
 * ascending order, carry x_1..x_k; `target` starts at 0 and holds the result.
 * Throws `semantic_error` if any input qubit is modified.
 */
inline BooleanFunction computed_function( Circuit const& c, unsigned input_arity, qubit_t target )
{
  if ( c.width() != input_arity + 1u )
  {
    throw semantic_error( "circuit width must be input arity + 1" );
  }
  if ( target == 0u || target > c.width() )
  {
    throw semantic_error( "target qubit out of range" );
  }

  std::vector<qubit_t> inputs;
  for ( qubit_t q = 1; q <= c.width(); ++q )
  {
    if ( q != target )
      inputs.push_back( q );
  }

  BooleanFunction f( input_arity );
  for ( std::uint64_t row = 0; row < f.num_rows(); ++row )
  {
    BasisState s( c.width() );
    for ( unsigned i = 1; i <= input_arity; ++i )
    {
      s.set( inputs[i - 1], ( ( row >> ( input_arity - i ) ) & 1u ) != 0u );
    }
    auto const out = run( c, s );
    for ( auto q : inputs )
    {
      if ( out[q] != s[q] )
      {
        throw semantic_error( "circuit is not function-preserving: input qubit " + std::to_string( q ) + " changes on row " + std::to_string( row ) );
      }
    }
    f.set( row, out[target] );
  }
  return f;
}

/*! \brief Parses the circuit text format.
 *
 * \verbatim
   qubits 4
   cnot 4 +1 -2 +3   # target, then +cond-1 / -cond-0 controls
   \endverbatim
 */
inline Circuit parse_circuit( std::string_view text )
{
  std::istringstream in{ std::string( text ) };
  std::string line;
  std::size_t line_no = 0u;
  bool have_header = false;
  Circuit c;

  auto parse_index = [&]( std::string const& tok ) -> qubit_t {
    if ( tok.empty() || !std::all_of( tok.begin(), tok.end(), []( char ch ) { return std::isdigit( static_cast<unsigned char>( ch ) ); } ) || tok.size() > 9u )
    {
      throw parse_error( "malformed qubit index '" + tok + "' on line " + std::to_string( line_no ) );
    }
    auto const v = static_cast<qubit_t>( std::stoul( tok ) );
    if ( v == 0u )
    {
      throw parse_error( "qubit index 0 on line " + std::to_string( line_no ) + " (indices are 1-based)" );
    }
    return v;
  };

  while ( std::getline( in, line ) )
  {
    ++line_no;
    if ( auto const hash = line.find( '#' ); hash != std::string::npos )
    {
      line.erase( hash );
    }
    std::istringstream words( line );
    std::string keyword;
    if ( !( words >> keyword ) )
    {
      continue;
    }

    if ( !have_header )
    {
      std::string count, extra;
      if ( keyword != "qubits" || !( words >> count ) || ( words >> extra ) )
      {
        throw parse_error( "expected 'qubits N' on line " + std::to_string( line_no ) );
      }
      c = Circuit( parse_index( count ) );
      have_header = true;
      continue;
    }

    if ( keyword != "cnot" )
    {
      throw parse_error( "unknown instruction '" + keyword + "' on line " + std::to_string( line_no ) );
    }
    std::string tok;
    if ( !( words >> tok ) )
    {
      throw parse_error( "missing target on line " + std::to_string( line_no ) );
    }
    auto const target = parse_index( tok );
    std::vector<qubit_t> pos, neg;
    while ( words >> tok )
    {
      if ( tok.size() < 2u || ( tok[0] != '+' && tok[0] != '-' ) )
      {
        throw parse_error( "malformed control '" + tok + "' on line " + std::to_string( line_no ) );
      }
      auto const q = parse_index( tok.substr( 1 ) );
      ( tok[0] == '+' ? pos : neg ).push_back( q );
    }

    auto all = pos;
    all.insert( all.end(), neg.begin(), neg.end() );
    std::sort( all.begin(), all.end() );
    if ( std::adjacent_find( all.begin(), all.end() ) != all.end() )
    {
      throw semantic_error( "duplicate control index on line " + std::to_string( line_no ) );
    }
    if ( std::binary_search( all.begin(), all.end(), target ) )
    {
      throw semantic_error( "target listed as control on line " + std::to_string( line_no ) );
    }
    ControlledNotGate g( target, std::move( pos ), std::move( neg ) );
    if ( g.max_qubit() > c.width() )
    {
      throw semantic_error( "qubit index " + std::to_string( g.max_qubit() ) + " exceeds width " + std::to_string( c.width() ) + " on line " + std::to_string( line_no ) );
    }
    c.add_gate( std::move( g ) );
  }

  if ( !have_header )
  {
    throw parse_error( "missing 'qubits N' header" );
  }
  return c;
}

inline std::string format_gate( ControlledNotGate const& g )
{
  std::vector<std::pair<qubit_t, char>> controls;
  for ( auto q : g.positive_controls() )
    controls.emplace_back( q, '+' );
  for ( auto q : g.negative_controls() )
    controls.emplace_back( q, '-' );
  std::sort( controls.begin(), controls.end() );

  std::string out = "cnot " + std::to_string( g.target() );
  for ( auto const& [q, sign] : controls )
  {
    out += ' ';
    out += sign;
    out += std::to_string( q );
  }
  return out;
}

/// Emits the circuit text format; controls in ascending qubit order.
inline std::string format_circuit( Circuit const& c )
{
  std::string out = "qubits " + std::to_string( c.width() ) + "\n";
  for ( auto const& g : c.gates() )
  {
    out += format_gate( g );
    out += '\n';
  }
  return out;
}

} // namespace qbx
