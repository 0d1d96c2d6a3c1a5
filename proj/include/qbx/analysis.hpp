// SPDX-License-Identifier: MIT
/*!
  \file analysis.hpp
  \brief Distribution of final gate counts over all (or sampled) Boolean functions

  For an n-qubit circuit there are N = 2^(n-1) input rows and S = 2^N
  functions. Since the ANF is a bijection between functions and subsets of
  the N possible product terms, exactly C(N, r) functions synthesize to r
  gates. The enumerator does not assume this; it runs the pipeline.
*/
#pragma once

#include "boolfn.hpp"
#include "circuit.hpp"
#include "errors.hpp"
#include "parallel.hpp"
#include "synth.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace qbx
{

/// Largest qubit count accepted by `enumerate_all` (2^16 functions).
inline constexpr unsigned max_exhaustive_qubits = 5u;

/// Exact rational p = numerator / denominator.
struct Probability
{
  std::uint64_t numerator = 0u;
  std::uint64_t denominator = 1u;

  /// Finite decimal expansion if one exists (denominator of the form 2^a 5^b), else "num/den".
  std::string to_string() const
  {
    auto const g = std::gcd( numerator, denominator );
    auto num = numerator / g;
    auto den = denominator / g;

    unsigned twos = 0u, fives = 0u;
    auto rest = den;
    while ( rest % 2u == 0u )
    {
      rest /= 2u;
      ++twos;
    }
    while ( rest % 5u == 0u )
    {
      rest /= 5u;
      ++fives;
    }
    if ( rest != 1u )
    {
      return std::to_string( num ) + "/" + std::to_string( den );
    }

    // num/den = num * 2^(d-twos) * 5^(d-fives) / 10^d
    auto const digits = std::max( twos, fives );
    unsigned __int128 scaled = num;
    for ( unsigned i = twos; i < digits; ++i )
      scaled *= 2u;
    for ( unsigned i = fives; i < digits; ++i )
      scaled *= 5u;

    unsigned __int128 pow10 = 1u;
    for ( unsigned i = 0; i < digits; ++i )
      pow10 *= 10u;

    auto const whole = static_cast<std::uint64_t>( scaled / pow10 );
    auto frac = scaled % pow10;
    std::string out = std::to_string( whole );
    if ( digits > 0u )
    {
      std::string tail( digits, '0' );
      for ( unsigned i = digits; i-- > 0u; )
      {
        tail[i] = static_cast<char>( '0' + static_cast<int>( frac % 10u ) );
        frac /= 10u;
      }
      out += "." + tail;
    }
    return out;
  }

  bool operator==( Probability const& other ) const
  {
    return static_cast<unsigned __int128>( numerator ) * other.denominator ==
           static_cast<unsigned __int128>( other.numerator ) * denominator;
  }
};

struct DistributionReport
{
  enum class Mode
  {
    Exhaustive,
    Sampled
  };

  unsigned n = 0u;              ///< qubit count
  std::uint64_t N = 0u;         ///< 2^(n-1) rows / possible product terms
  Mode mode = Mode::Exhaustive;
  std::uint64_t sample_size = 0u;
  std::uint64_t seed = 0u;
  std::map<std::uint64_t, std::uint64_t> counts; ///< r -> number of functions with r final gates

  /// S = 2^N when it fits in 64 bits.
  std::optional<std::uint64_t> total_functions() const
  {
    if ( N >= 64u )
      return std::nullopt;
    return std::uint64_t{ 1 } << N;
  }

  /// Denominator for probabilities: S (exhaustive) or the sample size.
  std::uint64_t population() const { return mode == Mode::Exhaustive ? *total_functions() : sample_size; }

  std::uint64_t count( std::uint64_t r ) const
  {
    auto it = counts.find( r );
    return it == counts.end() ? 0u : it->second;
  }

  std::uint64_t total_count() const
  {
    std::uint64_t s = 0u;
    for ( auto const& [r, c] : counts )
      s += c;
    return s;
  }

  Probability probability( std::uint64_t r ) const { return { count( r ), population() }; }

  Probability probability( std::set<std::uint64_t> const& rs ) const
  {
    std::uint64_t s = 0u;
    for ( auto r : rs )
      s += count( r );
    return { s, population() };
  }

  /// Average-case band {2^(n-2) - 1, 2^(n-2), 2^(n-2) + 1}, clipped to [0, N].
  std::set<std::uint64_t> average_band() const
  {
    std::set<std::uint64_t> band;
    if ( n < 2u )
      return band;
    auto const mid = N / 2u;
    for ( auto r : { mid - 1u, mid, mid + 1u } )
    {
      if ( r <= N )
        band.insert( r );
    }
    return band;
  }

  /// Sample mean of r as an exact rational.
  Probability mean() const
  {
    std::uint64_t s = 0u;
    for ( auto const& [r, c] : counts )
      s += r * c;
    return { s, total_count() };
  }
};

namespace detail
{

inline void check_qubits( unsigned n )
{
  if ( n < 1u )
  {
    throw semantic_error( "qubit count must be >= 1" );
  }
  if ( n - 1u > max_arity )
  {
    throw semantic_error( "qubit count exceeds the supported maximum of " + std::to_string( max_arity + 1u ) );
  }
}

/// Runs the staged pipeline and checks the circuit reproduces `f`.
inline std::uint64_t verified_gate_count( BooleanFunction const& f )
{
  auto const c = synthesize( f );
  if ( computed_function( c, f.arity(), static_cast<qubit_t>( f.arity() + 1u ) ) != f )
  {
    throw verification_error( "synthesized circuit does not reproduce " + f.to_bits() );
  }
  return c.num_gates();
}

inline std::map<std::uint64_t, std::uint64_t> merge( std::vector<std::map<std::uint64_t, std::uint64_t>> const& parts )
{
  std::map<std::uint64_t, std::uint64_t> out;
  for ( auto const& p : parts )
    for ( auto const& [r, c] : p )
      out[r] += c;
  return out;
}

} // namespace detail

/// Synthesizes (and verifies) every function of n-1 inputs.
inline DistributionReport enumerate_all( unsigned n, std::size_t workers = worker_count() )
{
  detail::check_qubits( n );
  if ( n > max_exhaustive_qubits )
  {
    throw semantic_error( "exhaustive enumeration is limited to n <= " + std::to_string( max_exhaustive_qubits ) +
                          " qubits; use sampling for larger n" );
  }

  DistributionReport report;
  report.n = n;
  report.N = std::uint64_t{ 1 } << ( n - 1u );
  report.mode = DistributionReport::Mode::Exhaustive;

  auto const k = n - 1u;
  auto const S = *report.total_functions();
  std::vector<std::map<std::uint64_t, std::uint64_t>> parts( std::max<std::size_t>( 1u, workers ) );
  parallel_blocks( S, workers, [&]( std::size_t w, std::size_t begin, std::size_t end ) {
    auto& local = parts[w];
    for ( std::uint64_t code = begin; code < end; ++code )
    {
      // bit `row` of `code` is the output on `row`
      BooleanFunction f( k );
      for ( std::uint64_t row = 0; row < f.num_rows(); ++row )
        f.set( row, ( code >> row ) & 1u );
      ++local[detail::verified_gate_count( f )];
    }
  } );
  report.counts = detail::merge( parts );
  return report;
}

/*! \brief Synthesizes `sample_size` uniformly random functions of n-1 inputs.
 *
 * Sample i draws its table from an mt19937_64 seeded with (seed, i), so the
 * report depends only on the arguments, not on the worker count.
 */
inline DistributionReport sample_distribution( unsigned n, std::uint64_t sample_size, std::uint64_t seed, std::size_t workers = worker_count() )
{
  detail::check_qubits( n );
  if ( sample_size == 0u )
  {
    throw semantic_error( "sample size must be >= 1" );
  }

  DistributionReport report;
  report.n = n;
  report.N = std::uint64_t{ 1 } << ( n - 1u );
  report.mode = DistributionReport::Mode::Sampled;
  report.sample_size = sample_size;
  report.seed = seed;

  auto const k = n - 1u;
  std::vector<std::map<std::uint64_t, std::uint64_t>> parts( std::max<std::size_t>( 1u, workers ) );
  parallel_blocks( sample_size, workers, [&]( std::size_t w, std::size_t begin, std::size_t end ) {
    auto& local = parts[w];
    for ( std::uint64_t i = begin; i < end; ++i )
    {
      std::seed_seq seq{ static_cast<std::uint32_t>( seed ), static_cast<std::uint32_t>( seed >> 32u ),
                         static_cast<std::uint32_t>( i ), static_cast<std::uint32_t>( i >> 32u ) };
      std::mt19937_64 rng( seq );
      BooleanFunction f( k );
      std::uint64_t word = 0u;
      for ( std::uint64_t row = 0; row < f.num_rows(); ++row )
      {
        if ( row % 64u == 0u )
          word = rng();
        f.set( row, ( word >> ( row % 64u ) ) & 1u );
      }
      ++local[k <= 16u ? detail::verified_gate_count( f ) : synthesize_fast( f ).num_gates()];
    }
  } );
  report.counts = detail::merge( parts );
  return report;
}

/// Human-readable table.
inline std::string format_report_text( DistributionReport const& rep )
{
  std::ostringstream out;
  out << "# qubits n = " << rep.n << ", N = 2^(n-1) = " << rep.N << "\n";
  if ( rep.mode == DistributionReport::Mode::Exhaustive )
  {
    out << "# mode: exhaustive, S = " << rep.population() << " functions\n";
  }
  else
  {
    out << "# mode: sampled, " << rep.sample_size << " functions, seed " << rep.seed << "\n";
  }
  out << "# average band: r in {2^(n-2)-1, 2^(n-2), 2^(n-2)+1}\n";
  out << "r\tcount\tprobability\n";
  for ( std::uint64_t r = 0; r <= rep.N && r <= 4096u; ++r )
  {
    if ( rep.mode == DistributionReport::Mode::Sampled && rep.count( r ) == 0u )
      continue;
    out << r << '\t' << rep.count( r ) << '\t' << rep.probability( r ).to_string() << "\n";
  }
  out << "p(r=0)\t" << rep.probability( 0u ).to_string() << "\n";
  out << "p(r=N)\t" << rep.probability( rep.N ).to_string() << "\n";
  out << "p(average)\t" << rep.probability( rep.average_band() ).to_string() << "\n";
  out << "mean\t" << rep.mean().to_string() << "\n";
  return out.str();
}

/// Machine-readable `key=value` lines.
inline std::string format_report_kv( DistributionReport const& rep )
{
  std::ostringstream out;
  out << "n=" << rep.n << "\n";
  out << "N=" << rep.N << "\n";
  out << "mode=" << ( rep.mode == DistributionReport::Mode::Exhaustive ? "exhaustive" : "sampled" ) << "\n";
  if ( rep.mode == DistributionReport::Mode::Exhaustive )
  {
    out << "S=" << rep.population() << "\n";
  }
  else
  {
    out << "sample_size=" << rep.sample_size << "\n";
    out << "seed=" << rep.seed << "\n";
  }
  for ( auto const& [r, c] : rep.counts )
  {
    out << "count." << r << "=" << c << "\n";
  }
  out << "p_zero=" << rep.probability( 0u ).to_string() << "\n";
  out << "p_worst=" << rep.probability( rep.N ).to_string() << "\n";
  out << "p_average=" << rep.probability( rep.average_band() ).to_string() << "\n";
  out << "average_band=2^(n-2)+{-1,0,+1}\n";
  return out.str();
}

/// Parses `format_report_kv` output.
inline DistributionReport parse_report_kv( std::string const& text )
{
  DistributionReport rep;
  std::istringstream in( text );
  std::string line;
  bool have_n = false;
  while ( std::getline( in, line ) )
  {
    if ( line.empty() || line[0] == '#' )
      continue;
    auto const eq = line.find( '=' );
    if ( eq == std::string::npos )
      throw parse_error( "expected key=value: " + line );
    auto const key = line.substr( 0, eq );
    auto const value = line.substr( eq + 1 );
    try
    {
      if ( key == "n" )
      {
        rep.n = static_cast<unsigned>( std::stoul( value ) );
        have_n = true;
      }
      else if ( key == "N" )
        rep.N = std::stoull( value );
      else if ( key == "mode" )
        rep.mode = value == "sampled" ? DistributionReport::Mode::Sampled : DistributionReport::Mode::Exhaustive;
      else if ( key == "sample_size" )
        rep.sample_size = std::stoull( value );
      else if ( key == "seed" )
        rep.seed = std::stoull( value );
      else if ( key.rfind( "count.", 0 ) == 0 )
        rep.counts[std::stoull( key.substr( 6 ) )] = std::stoull( value );
    }
    catch ( std::logic_error const& )
    {
      throw parse_error( "invalid number in: " + line );
    }
  }
  if ( !have_n )
    throw parse_error( "missing n" );
  return rep;
}

} // namespace qbx
