// SPDX-License-Identifier: MIT
// Randomized property checks shared by the unit and acceptance suites.
// Each returns the number of failing cases out of `cases`.
#pragma once

#include "oracles.hpp"

#include <qbx/circuit.hpp>
#include <qbx/synth.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace qbx::test
{

inline ControlledNotGate random_gate( qubit_t width, std::mt19937_64& rng, std::optional<qubit_t> target = std::nullopt )
{
  auto const t = target.value_or( static_cast<qubit_t>( 1u + rng() % width ) );
  std::vector<qubit_t> pos, neg;
  for ( qubit_t q = 1; q <= width; ++q )
  {
    if ( q == t )
      continue;
    switch ( rng() % 3 )
    {
    case 0:
      pos.push_back( q );
      break;
    case 1:
      neg.push_back( q );
      break;
    default:
      break;
    }
  }
  return ControlledNotGate( t, pos, neg );
}

inline BasisState random_state( qubit_t width, std::mt19937_64& rng )
{
  BasisState s( width );
  for ( qubit_t q = 1; q <= width; ++q )
    s.set( q, rng() & 1u );
  return s;
}

inline std::size_t check_gate_involution( std::size_t cases, std::uint64_t seed )
{
  std::mt19937_64 rng( seed );
  std::size_t failures = 0u;
  for ( std::size_t i = 0; i < cases; ++i )
  {
    auto const width = static_cast<qubit_t>( 1u + rng() % 12u );
    auto const g = random_gate( width, rng );
    auto const s = random_state( width, rng );
    if ( apply_gate( g, apply_gate( g, s ) ) != s )
      ++failures;
  }
  return failures;
}

/// run() permutes the 2^n basis states and only touches gate targets.
inline std::size_t check_circuit_bijection( std::size_t cases, std::uint64_t seed, qubit_t max_width = 12u )
{
  std::mt19937_64 rng( seed );
  std::size_t failures = 0u;
  for ( std::size_t i = 0; i < cases; ++i )
  {
    // mostly small widths, with the full 12-qubit case in every 50th circuit
    auto const width = i % 50u == 0u ? max_width : static_cast<qubit_t>( 1u + rng() % std::min<qubit_t>( max_width, 8u ) );
    Circuit c( width );
    std::vector<bool> is_target( width + 1u, false );
    auto const m = rng() % 12u;
    for ( std::size_t j = 0; j < m; ++j )
    {
      auto g = random_gate( width, rng );
      is_target[g.target()] = true;
      c.add_gate( std::move( g ) );
    }

    std::vector<bool> seen( std::size_t{ 1 } << width, false );
    bool ok = true;
    for ( std::uint64_t idx = 0; idx < seen.size() && ok; ++idx )
    {
      auto const in = BasisState::from_index( idx, width );
      auto const out = run( c, in );
      auto const image = out.to_index();
      ok = !seen[image];
      seen[image] = true;
      for ( qubit_t q = 1; q <= width && ok; ++q )
        ok = is_target[q] || in[q] == out[q];
    }
    if ( !ok )
      ++failures;
  }
  return failures;
}

inline std::size_t check_shared_target_commutation( std::size_t cases, std::uint64_t seed )
{
  std::mt19937_64 rng( seed );
  std::size_t failures = 0u;
  for ( std::size_t i = 0; i < cases; ++i )
  {
    auto const width = static_cast<qubit_t>( 1u + rng() % 7u );
    auto const t = static_cast<qubit_t>( 1u + rng() % width );
    auto const g1 = random_gate( width, rng, t );
    auto const g2 = random_gate( width, rng, t );
    Circuit const a( width, { g1, g2 } ), b( width, { g2, g1 } );
    for ( std::uint64_t idx = 0; idx < ( std::uint64_t{ 1 } << width ); ++idx )
    {
      auto const s = BasisState::from_index( idx, width );
      if ( run( a, s ) != run( b, s ) )
      {
        ++failures;
        break;
      }
    }
  }
  return failures;
}

inline std::size_t check_stage3_idempotent_and_order_insensitive( std::size_t cases, std::uint64_t seed )
{
  std::mt19937_64 rng( seed );
  std::size_t failures = 0u;
  for ( std::size_t i = 0; i < cases; ++i )
  {
    auto const k = static_cast<unsigned>( rng() % 7u );
    auto const f = random_function( k, rng );
    auto const s2 = stage2( stage1( f ) );
    auto const s3 = stage3_minimize( s2 );

    auto gates = s2.gates();
    std::shuffle( gates.begin(), gates.end(), rng );
    auto const shuffled = stage3_minimize( Circuit( s2.width(), gates ) );

    if ( stage3_minimize( s3 ) != s3 || shuffled != s3 )
      ++failures;
  }
  return failures;
}

inline std::size_t check_anf_double_transform( std::size_t cases, std::uint64_t seed )
{
  std::mt19937_64 rng( seed );
  std::size_t failures = 0u;
  for ( std::size_t i = 0; i < cases; ++i )
  {
    auto const k = static_cast<unsigned>( rng() % 13u );
    auto const f = random_function( k, rng );
    auto table = f.outputs();
    moebius_transform( table );
    moebius_transform( table );
    if ( table != f.outputs() )
      ++failures;
  }
  return failures;
}

} // namespace qbx::test
