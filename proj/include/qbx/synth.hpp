// SPDX-License-Identifier: MIT
/*!
  \file synth.hpp
  \brief Truth-table synthesis of multi-controlled NOT circuits

  The pipeline has three stages:

  1. one mixed-polarity gate per minterm (0 in the row -> negative control,
     1 -> positive control), all acting on the ancilla x_{k+1};
  2. every negative control is rewritten with (x ^ 1) y = x y ^ y, so a gate
     with z negative controls becomes 2^z positive-polarity gates;
  3. gates on the same target commute, so equal control sets cancel in
     pairs; the survivors are emitted in canonical order.

  The survivors are exactly the positive-polarity Reed-Muller (ANF) terms of
  the function, which `anf` computes independently with the Moebius transform.
*/
#pragma once

#include "boolfn.hpp"
#include "circuit.hpp"
#include "errors.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace qbx
{

/// Product of positive literals x_i, i in `variables` (sorted). Empty = constant 1.
struct ProductTerm
{
  std::vector<unsigned> variables;

  std::size_t degree() const noexcept { return variables.size(); }

  std::string to_string() const
  {
    if ( variables.empty() )
    {
      return "1";
    }
    std::string s;
    for ( auto v : variables )
    {
      if ( !s.empty() )
        s += ' ';
      s += "x" + std::to_string( v );
    }
    return s;
  }

  bool operator==( ProductTerm const& ) const = default;
};

/// Canonical order: more variables first, then ascending lexicographic variable list.
struct canonical_term_order
{
  template<typename Seq>
  bool operator()( Seq const& a, Seq const& b ) const
  {
    if ( a.size() != b.size() )
    {
      return a.size() > b.size();
    }
    return std::lexicographical_compare( a.begin(), a.end(), b.begin(), b.end() );
  }

  bool operator()( ProductTerm const& a, ProductTerm const& b ) const { return ( *this )( a.variables, b.variables ); }

  bool operator()( ControlledNotGate const& a, ControlledNotGate const& b ) const
  {
    return ( *this )( a.positive_controls(), b.positive_controls() );
  }
};

/// XOR of product terms with GF(2) coefficients: inserting a present term removes it.
class XorPolynomial
{
public:
  void toggle( ProductTerm term )
  {
    auto [it, inserted] = terms_.insert( std::move( term ) );
    if ( !inserted )
    {
      terms_.erase( it );
    }
  }

  bool contains( ProductTerm const& term ) const { return terms_.count( term ) != 0u; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  /// Terms in canonical order.
  std::vector<ProductTerm> terms() const { return { terms_.begin(), terms_.end() }; }

  /// `t1 ^ t2 ^ ...` in expression syntax, "0" when empty.
  std::string to_string() const
  {
    if ( terms_.empty() )
    {
      return "0";
    }
    std::string s;
    for ( auto const& t : terms_ )
    {
      if ( !s.empty() )
        s += " ^ ";
      s += t.to_string();
    }
    return s;
  }

  bool operator==( XorPolynomial const& ) const = default;

private:
  std::set<ProductTerm, canonical_term_order> terms_;
};

namespace detail
{

inline void require_single_target( Circuit const& c, char const* stage )
{
  if ( c.empty() )
  {
    return;
  }
  auto const t = c.gates().front().target();
  for ( auto const& g : c.gates() )
  {
    if ( g.target() != t )
    {
      throw semantic_error( std::string( stage ) + ": mixed targets" );
    }
  }
}

inline unsigned width_for( BooleanFunction const& f )
{
  return f.arity() + 1u;
}

} // namespace detail

/// Stage 1: one gate per minterm, ascending row order, target x_{k+1}.
inline Circuit stage1( BooleanFunction const& f )
{
  auto const k = f.arity();
  auto const target = static_cast<qubit_t>( k + 1u );
  Circuit c( target );
  for ( auto const& m : minterms( f ) )
  {
    std::vector<qubit_t> pos, neg;
    for ( unsigned i = 1; i <= k; ++i )
    {
      ( m[i] ? pos : neg ).push_back( i );
    }
    c.add_gate( ControlledNotGate( target, std::move( pos ), std::move( neg ) ) );
  }
  return c;
}

/*! \brief Rewrites a mixed-polarity gate into 2^z positive-polarity gates.
 *
 * One gate per subset of the negative controls that is kept next to the
 * positive controls. Output is in canonical order.
 */
inline std::vector<ControlledNotGate> expand_gate( ControlledNotGate const& g )
{
  auto const& neg = g.negative_controls();
  auto const z = neg.size();
  if ( z >= 32u )
  {
    throw semantic_error( "expand_gate: too many negative controls" );
  }

  std::vector<std::vector<qubit_t>> sets;
  sets.reserve( std::size_t{ 1 } << z );
  for ( std::uint64_t subset = 0; subset < ( std::uint64_t{ 1 } << z ); ++subset )
  {
    auto controls = g.positive_controls();
    for ( std::size_t j = 0; j < z; ++j )
    {
      if ( ( subset >> j ) & 1u )
        controls.push_back( neg[j] );
    }
    std::sort( controls.begin(), controls.end() );
    sets.push_back( std::move( controls ) );
  }
  std::sort( sets.begin(), sets.end(), canonical_term_order{} );

  std::vector<ControlledNotGate> result;
  result.reserve( sets.size() );
  for ( auto& s : sets )
  {
    result.emplace_back( g.target(), std::move( s ) );
  }
  return result;
}

/// Stage 2: concatenation of `expand_gate` over the stage-1 gates.
inline Circuit stage2( Circuit const& c )
{
  detail::require_single_target( c, "stage2" );
  Circuit out( c.width() );
  for ( auto const& g : c.gates() )
  {
    for ( auto& e : expand_gate( g ) )
    {
      out.add_gate( std::move( e ) );
    }
  }
  return out;
}

/// Number of gates stage 2 would produce, without materializing them.
inline std::uint64_t stage2_gate_count( Circuit const& c )
{
  std::uint64_t n = 0u;
  for ( auto const& g : c.gates() )
  {
    n += std::uint64_t{ 1 } << g.negative_controls().size();
  }
  return n;
}

/// Stage 3: cancels gates with equal control sets in pairs; survivors in canonical order.
inline Circuit stage3_minimize( Circuit const& c )
{
  detail::require_single_target( c, "stage3" );
  Circuit out( c.width() );
  if ( c.empty() )
  {
    return out;
  }

  std::map<std::vector<qubit_t>, bool, canonical_term_order> parity;
  for ( auto const& g : c.gates() )
  {
    if ( !g.negative_controls().empty() )
    {
      throw semantic_error( "stage3: negative controls present" );
    }
    parity[g.positive_controls()] ^= true;
  }

  auto const target = c.gates().front().target();
  for ( auto const& [controls, odd] : parity )
  {
    if ( odd )
    {
      out.add_gate( ControlledNotGate( target, controls ) );
    }
  }
  return out;
}

/// Full three-stage pipeline.
inline Circuit synthesize( BooleanFunction const& f )
{
  return stage3_minimize( stage2( stage1( f ) ) );
}

/*! \brief In-place GF(2) Moebius transform over a table indexed with x_1 as MSB.
 *
 * Maps a truth table to its ANF coefficient vector and, being an involution,
 * back again.
 */
inline void moebius_transform( std::vector<std::uint8_t>& table )
{
  for ( std::size_t step = 1; step < table.size(); step <<= 1u )
  {
    for ( std::size_t block = 0; block < table.size(); block += step << 1u )
    {
      for ( std::size_t i = block; i < block + step; ++i )
      {
        table[i + step] ^= table[i];
      }
    }
  }
}

/// Positive-polarity Reed-Muller expansion of `f`.
inline XorPolynomial anf( BooleanFunction const& f )
{
  auto coefficients = f.outputs();
  moebius_transform( coefficients );

  auto const k = f.arity();
  XorPolynomial poly;
  for ( std::uint64_t idx = 0; idx < coefficients.size(); ++idx )
  {
    if ( coefficients[idx] == 0u )
      continue;
    ProductTerm term;
    for ( unsigned i = 1; i <= k; ++i )
    {
      if ( ( idx >> ( k - i ) ) & 1u )
        term.variables.push_back( i );
    }
    poly.toggle( std::move( term ) );
  }
  return poly;
}

/// Builds the final circuit directly from the ANF terms.
inline Circuit synthesize_fast( BooleanFunction const& f )
{
  auto const target = static_cast<qubit_t>( detail::width_for( f ) );
  Circuit c( target );
  for ( auto const& term : anf( f ).terms() )
  {
    c.add_gate( ControlledNotGate( target, { term.variables.begin(), term.variables.end() } ) );
  }
  return c;
}

/// Control sets of a positive-polarity circuit, as product terms.
inline XorPolynomial control_sets( Circuit const& c )
{
  XorPolynomial poly;
  for ( auto const& g : c.gates() )
  {
    if ( !g.negative_controls().empty() )
    {
      throw semantic_error( "control_sets: negative controls present" );
    }
    poly.toggle( ProductTerm{ { g.positive_controls().begin(), g.positive_controls().end() } } );
  }
  return poly;
}

} // namespace qbx
