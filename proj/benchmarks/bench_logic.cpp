/* receptron: threshold logic units with input-dependent weight functions
 * Copyright (C) 2026 The receptron authors
 * MIT License (see LICENSE)
 */

#include <benchmark/benchmark.h>

#include <receptron/dsl.hpp>
#include <receptron/separability.hpp>
#include <receptron/synthesis.hpp>

using namespace receptron;

static void BM_census( benchmark::State& state )
{
  const int n = state.range( 0 );
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( census( n ) );
  }
}
BENCHMARK( BM_census )->Arg( 2 )->Arg( 3 )->Unit( benchmark::kMillisecond );

static void BM_is_linearly_separable_n4( benchmark::State& state )
{
  // a separable majority-ish table and the binate parity table
  const truth_table majority = truth_table::from_string( "0001011101111111" );
  const truth_table parity = truth_table::from_string( "0110100110010110" );
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( is_linearly_separable( majority ) );
    benchmark::DoNotOptimize( is_linearly_separable( parity ) );
  }
}
BENCHMARK( BM_is_linearly_separable_n4 );

static void BM_synthesize_n4( benchmark::State& state )
{
  const truth_table parity = truth_table::from_string( "0110100110010110" );
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( synthesize_digital( parity ) );
  }
}
BENCHMARK( BM_synthesize_n4 );

static void BM_parse_document( benchmark::State& state )
{
  const std::string text =
      "domain a { center = [0, 0, 0]; width = [2, 2, 2]; }\n"
      "domain b { center = [6, 6, 6]; width = [3, 3, 3]; }\n"
      "expr shell = rect(x[0], center=0, width=6) & !rect(x[0], center=0, width=1);\n"
      "unit sa = selective(a);\n"
      "unit se = expr(shell);\n"
      "network all = or(a, b);\n"
      "main = all;\n";
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( parse_document( text ) );
  }
}
BENCHMARK( BM_parse_document );

static void BM_serialize_document( benchmark::State& state )
{
  const auto parsed = parse_document(
      "domain a { center = [0, 0, 0]; width = [2, 2, 2]; }\n"
      "unit sa = selective(a);\nmain = sa;\n" );
  const auto& doc = std::get<spec_document>( parsed );
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( serialize_document( doc ) );
  }
}
BENCHMARK( BM_serialize_document );
