/* receptron: threshold logic units with input-dependent weight functions
 * Copyright (C) 2026 The receptron authors
 * MIT License (see LICENSE)
 */

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include <receptron/boolexpr.hpp>
#include <receptron/domain.hpp>
#include <receptron/network.hpp>

using namespace receptron;

namespace
{

std::vector<std::vector<double>> sample_points( std::size_t n, std::size_t count )
{
  std::mt19937_64 engine( 1234 );
  std::uniform_real_distribution<double> dist( -2.0, 12.0 );
  std::vector<std::vector<double>> points( count, std::vector<double>( n ) );
  for ( auto& p : points )
  {
    for ( auto& v : p )
    {
      v = dist( engine );
    }
  }
  return points;
}

} // namespace

static void BM_selective_activate( benchmark::State& state )
{
  const std::size_t n = state.range( 0 );
  const hyper_rect_domain box( std::vector<double>( n, 5.0 ), std::vector<double>( n, 2.0 ) );
  const unit u = build_selective_receptron( box );
  const auto points = sample_points( n, 1024 );
  std::size_t i = 0;
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( u.activate( points[i++ & 1023] ) );
  }
}
BENCHMARK( BM_selective_activate )->Arg( 3 )->Arg( 8 );

static void BM_domain_contains( benchmark::State& state )
{
  const std::size_t n = state.range( 0 );
  const hyper_rect_domain box( std::vector<double>( n, 5.0 ), std::vector<double>( n, 2.0 ) );
  const auto points = sample_points( n, 1024 );
  std::size_t i = 0;
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( box.contains( points[i++ & 1023] ) );
  }
}
BENCHMARK( BM_domain_contains )->Arg( 3 )->Arg( 8 );

static void BM_expr_unit_activate( benchmark::State& state )
{
  const bool_expr expr = bool_expr::conjunction(
      { bool_expr::disjunction( { bool_expr::pred( 0, rect_predicate( 5.0, 2.0 ) ),
                                  bool_expr::pred( 1, rect_predicate( 3.0, 2.0 ) ) } ),
        bool_expr::pred( 2, rect_predicate( 10.0, 2.0 ) ) } );
  const unit u = build_expr_receptron( expr );
  const auto points = sample_points( 3, 1024 );
  std::size_t i = 0;
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( u.activate( points[i++ & 1023] ) );
  }
}
BENCHMARK( BM_expr_unit_activate );

static void BM_disjunction_network( benchmark::State& state )
{
  const std::vector<hyper_rect_domain> boxes = {
      hyper_rect_domain( { 0.0, 0.0, 0.0 }, { 2.0, 2.0, 2.0 } ),
      hyper_rect_domain( { 10.0, 10.0, 10.0 }, { 2.0, 2.0, 2.0 } ) };
  const network net = build_disjunction_network( boxes );
  const auto points = sample_points( 3, 1024 );
  std::size_t i = 0;
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( net.evaluate( points[i++ & 1023] ) );
  }
}
BENCHMARK( BM_disjunction_network );

static void BM_multidomain_unit( benchmark::State& state )
{
  const std::vector<hyper_rect_domain> boxes = {
      hyper_rect_domain( { 0.0, 0.0, 0.0 }, { 2.0, 2.0, 2.0 } ),
      hyper_rect_domain( { 10.0, 10.0, 10.0 }, { 2.0, 2.0, 2.0 } ) };
  const unit u = build_multidomain_unit( boxes );
  const auto points = sample_points( 3, 1024 );
  std::size_t i = 0;
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( u.activate( fan_out( points[i++ & 1023], 2 ) ) );
  }
}
BENCHMARK( BM_multidomain_unit );

BENCHMARK_MAIN();
