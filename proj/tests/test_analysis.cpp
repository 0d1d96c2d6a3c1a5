// SPDX-License-Identifier: MIT
#include "oracles.hpp"

#include <qbx/analysis.hpp>

#include <gtest/gtest.h>

using namespace qbx;

TEST( Probability, ExactDecimals )
{
  EXPECT_EQ( ( Probability{ 1, 16 } ).to_string(), "0.0625" );
  EXPECT_EQ( ( Probability{ 14, 16 } ).to_string(), "0.875" );
  EXPECT_EQ( ( Probability{ 182, 256 } ).to_string(), "0.7109375" );
  EXPECT_EQ( ( Probability{ 1, 256 } ).to_string(), "0.00390625" );
  EXPECT_EQ( ( Probability{ 4, 4 } ).to_string(), "1" );
  EXPECT_EQ( ( Probability{ 0, 7 } ).to_string(), "0" );
  EXPECT_EQ( ( Probability{ 1, 3 } ).to_string(), "1/3" );
  EXPECT_EQ( ( Probability{ 1, 65536 } ).to_string(), "0.0000152587890625" );
  EXPECT_EQ( ( Probability{ 1, 2 } ), ( Probability{ 2, 4 } ) );
}

TEST( EnumerateAll, TwoQubits )
{
  auto const r = enumerate_all( 2 );
  EXPECT_EQ( r.N, 2u );
  EXPECT_EQ( r.population(), 4u );
  EXPECT_EQ( r.counts, ( std::map<std::uint64_t, std::uint64_t>{ { 0, 1 }, { 1, 2 }, { 2, 1 } } ) );
}

TEST( EnumerateAll, ThreeQubits )
{
  auto const r = enumerate_all( 3 );
  EXPECT_EQ( r.population(), 16u );
  EXPECT_EQ( r.counts, ( std::map<std::uint64_t, std::uint64_t>{ { 0, 1 }, { 1, 4 }, { 2, 6 }, { 3, 4 }, { 4, 1 } } ) );
  EXPECT_EQ( r.probability( 4 ).to_string(), "0.0625" );
  EXPECT_EQ( r.probability( 0 ).to_string(), "0.0625" );
  EXPECT_EQ( r.average_band(), ( std::set<std::uint64_t>{ 1, 2, 3 } ) );
  EXPECT_EQ( r.probability( r.average_band() ).to_string(), "0.875" );
}

TEST( EnumerateAll, BinomialLaw )
{
  for ( unsigned n = 1; n <= 4; ++n )
  {
    auto const r = enumerate_all( n );
    EXPECT_EQ( r.total_count(), r.population() );
    for ( std::uint64_t k = 0; k <= r.N; ++k )
      EXPECT_EQ( r.count( k ), test::binomial( r.N, k ) ) << "n=" << n << " r=" << k;
  }
}

TEST( EnumerateAll, PartitionIndependent )
{
  EXPECT_EQ( enumerate_all( 4, 1 ).counts, enumerate_all( 4, 7 ).counts );
}

TEST( EnumerateAll, LimitDirectsToSampling )
{
  EXPECT_THROW( enumerate_all( 6 ), semantic_error );
  EXPECT_THROW( enumerate_all( 0 ), semantic_error );
}

TEST( SampleDistribution, DeterministicAndPartitionIndependent )
{
  auto const a = sample_distribution( 4, 2000, 42, 1 );
  auto const b = sample_distribution( 4, 2000, 42, 5 );
  EXPECT_EQ( a.counts, b.counts );
  EXPECT_EQ( a.total_count(), 2000u );
  EXPECT_NE( sample_distribution( 4, 2000, 43, 2 ).counts, a.counts );
  EXPECT_THROW( sample_distribution( 4, 0, 1 ), semantic_error );
}

TEST( SampleDistribution, WorstCaseVanishes )
{
  auto const r = sample_distribution( 5, 10000, 42 );
  EXPECT_EQ( r.count( 16 ), 0u );
  EXPECT_EQ( r.total_count(), 10000u );
}

TEST( SampleDistribution, MeanApproachesHalfN )
{
  auto const r = sample_distribution( 3, 20000, 7 );
  auto const m = r.mean();
  auto const mean = static_cast<double>( m.numerator ) / static_cast<double>( m.denominator );
  // binomial(4, 1/2): variance 1, so the standard error is 1/sqrt(20000) ~ 0.007
  EXPECT_NEAR( mean, 2.0, 0.05 );
}

TEST( Report, KeyValueRoundTrip )
{
  for ( auto const& rep : { enumerate_all( 3 ), sample_distribution( 4, 100, 3 ) } )
  {
    auto const parsed = parse_report_kv( format_report_kv( rep ) );
    EXPECT_EQ( parsed.n, rep.n );
    EXPECT_EQ( parsed.N, rep.N );
    EXPECT_EQ( parsed.mode, rep.mode );
    EXPECT_EQ( parsed.counts, rep.counts );
    EXPECT_EQ( format_report_kv( parsed ), format_report_kv( rep ) );
  }
}

TEST( Report, TextMentionsBand )
{
  auto const text = format_report_text( enumerate_all( 4 ) );
  EXPECT_NE( text.find( "p(average)\t0.7109375" ), std::string::npos );
  EXPECT_NE( text.find( "p(r=N)\t0.00390625" ), std::string::npos );
  EXPECT_NE( text.find( "2^(n-2)" ), std::string::npos );
}
