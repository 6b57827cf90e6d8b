/* receptron: threshold logic units with input-dependent weight functions
 * Copyright (C) 2026 The receptron authors
 * MIT License (see LICENSE)
 */

#include <doctest.h>

#include <random>
#include <stdexcept>

#include <receptron/synthesis.hpp>
#include <receptron/truth_table.hpp>

using namespace receptron;

namespace
{

bool unit_matches_table( const unit& u, const truth_table& t )
{
  for ( std::uint64_t p = 0; p < t.size(); ++p )
  {
    if ( u.activate( pattern_inputs( p, t.num_inputs() ) ) != t.bit( p ) )
    {
      return false;
    }
  }
  return true;
}

} // namespace

TEST_CASE( "truth table string form" )
{
  const truth_table t = truth_table::from_string( "0110" );
  CHECK( t.num_inputs() == 2 );
  CHECK( t.bit( 0 ) == 0 );
  CHECK( t.bit( 1 ) == 1 );
  CHECK( t.bit( 2 ) == 1 );
  CHECK( t.bit( 3 ) == 0 );
  CHECK( t.to_string() == "0110" );
  CHECK( t.as_mask() == 0b0110 );

  CHECK_THROWS_AS( truth_table::from_string( "011" ), std::invalid_argument );
  CHECK_THROWS_AS( truth_table::from_string( "1" ), std::invalid_argument );
  CHECK_THROWS_AS( truth_table::from_string( "01a1" ), std::invalid_argument );
  CHECK_THROWS_AS( truth_table::from_string( "" ), std::invalid_argument );
  CHECK_THROWS_AS( truth_table( 2, { 0, 1, 1 } ), std::invalid_argument );
}

TEST_CASE( "pattern inputs map bits to coordinates" )
{
  const auto x = pattern_inputs( 0b101, 3 );
  CHECK( x == std::vector<double>{ 1.0, 0.0, 1.0 } );
}

TEST_CASE( "synthesis reproduces XOR, the constant-0 table and the 1-input identity" )
{
  const truth_table xor2 = truth_table::from_string( "0110" );
  CHECK( unit_matches_table( synthesize_digital( xor2 ), xor2 ) );

  const truth_table zero3 = truth_table::from_string( "00000000" );
  CHECK( unit_matches_table( synthesize_digital( zero3 ), zero3 ) );

  const truth_table ident = truth_table::from_string( "01" );
  CHECK( unit_matches_table( synthesize_digital( ident ), ident ) );
}

TEST_CASE( "synthesis is sound for every table up to 3 inputs" )
{
  for ( std::size_t n = 1; n <= 3; ++n )
  {
    const std::uint64_t tables = std::uint64_t{ 1 } << ( std::uint64_t{ 1 } << n );
    for ( std::uint64_t mask = 0; mask < tables; ++mask )
    {
      std::vector<int> bits( std::size_t{ 1 } << n );
      for ( std::size_t p = 0; p < bits.size(); ++p )
      {
        bits[p] = ( mask >> p ) & 1;
      }
      const truth_table t( n, bits );
      CHECK( unit_matches_table( synthesize_digital( t ), t ) );
    }
  }
}

TEST_CASE( "synthesis is sound for random wide tables" )
{
  std::mt19937_64 engine( 2024 );
  for ( std::size_t n = 4; n <= 6; ++n )
  {
    for ( int trial = 0; trial < 50; ++trial )
    {
      std::vector<int> bits( std::size_t{ 1 } << n );
      for ( auto& b : bits )
      {
        b = engine() % 2;
      }
      const truth_table t( n, bits );
      CHECK( unit_matches_table( synthesize_digital( t ), t ) );
    }
  }
}
