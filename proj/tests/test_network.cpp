/* receptron: threshold logic units with input-dependent weight functions
 * Copyright (C) 2026 The receptron authors
 * MIT License (see LICENSE)
 */

#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include <receptron/network.hpp>
#include <receptron/truth_table.hpp>

using namespace receptron;

namespace
{

std::vector<hyper_rect_domain> two_far_cubes()
{
  return { hyper_rect_domain( { 0.0, 0.0, 0.0 }, { 2.0, 2.0, 2.0 } ),
           hyper_rect_domain( { 10.0, 10.0, 10.0 }, { 2.0, 2.0, 2.0 } ) };
}

std::vector<hyper_rect_domain> random_boxes( std::mt19937_64& engine, std::size_t m,
                                             std::size_t n )
{
  std::uniform_real_distribution<double> center_dist( -10.0, 10.0 );
  std::uniform_real_distribution<double> width_dist( 0.5, 4.0 );
  std::vector<hyper_rect_domain> boxes;
  for ( std::size_t d = 0; d < m; ++d )
  {
    std::vector<double> centers( n );
    std::vector<double> widths( n );
    for ( std::size_t a = 0; a < n; ++a )
    {
      centers[a] = center_dist( engine );
      widths[a] = width_dist( engine );
    }
    boxes.emplace_back( centers, widths );
  }
  return boxes;
}

} // namespace

TEST_CASE( "a single-unit network wraps the bare unit" )
{
  const hyper_rect_domain cube( { 5.0, 3.0, 10.0 }, { 2.0, 2.0, 2.0 } );
  const unit bare = build_selective_receptron( cube );
  const network wrapped(
      3, { build_selective_receptron( cube ) },
      { { source::external( 0 ), source::external( 1 ), source::external( 2 ) } }, { 0 } );
  box_sampler sampler( { 0.0, 0.0, 5.0 }, { 10.0, 6.0, 15.0 }, 41 );
  for ( int i = 0; i < 2000; ++i )
  {
    const auto p = sampler.next();
    CHECK( wrapped.evaluate( p ).front() == bare.activate( p ) );
  }
}

TEST_CASE( "the disjunction network computes the union of two cubes" )
{
  const network net = build_disjunction_network( two_far_cubes() );
  const double in_a[3] = { 0.0, 0.0, 0.0 };
  const double in_neither[3] = { 5.0, 5.0, 5.0 };
  CHECK( net.evaluate( in_a ).front() == 1 );
  CHECK( net.evaluate( in_neither ).front() == 0 );

  // overlapping boxes still answer 1 inside the overlap
  const std::vector<hyper_rect_domain> overlapping = {
      hyper_rect_domain( { 0.0, 0.0 }, { 4.0, 4.0 } ),
      hyper_rect_domain( { 1.0, 1.0 }, { 4.0, 4.0 } ) };
  const network overlap_net = build_disjunction_network( overlapping );
  const double in_both[2] = { 0.5, 0.5 };
  CHECK( overlap_net.evaluate( in_both ).front() == 1 );
}

TEST_CASE( "the OR layer reproduces the OR table exhaustively to 10 inputs" )
{
  for ( std::size_t m = 1; m <= 10; ++m )
  {
    std::vector<weight_function> weights;
    for ( std::size_t i = 0; i < m; ++i )
    {
      weights.push_back( weight_function::constant( 1.0 ) );
    }
    const unit or_unit( std::move( weights ), threshold_mode::single( 0.5 ) );
    for ( std::uint64_t mask = 0; mask < ( std::uint64_t{ 1 } << m ); ++mask )
    {
      CHECK( or_unit.activate( pattern_inputs( mask, m ) ) == ( mask != 0 ? 1 : 0 ) );
    }
  }
}

TEST_CASE( "insertion order does not change network outputs" )
{
  const auto domains = two_far_cubes();
  const network forward = build_disjunction_network( domains );
  // same network with layer-1 units swapped and the OR wiring permuted to match
  const network swapped(
      3,
      { build_selective_receptron( domains[1] ), build_selective_receptron( domains[0] ),
        unit( { weight_function::constant( 1.0 ), weight_function::constant( 1.0 ) },
              threshold_mode::single( 0.5 ) ) },
      { { source::external( 0 ), source::external( 1 ), source::external( 2 ) },
        { source::external( 0 ), source::external( 1 ), source::external( 2 ) },
        { source::from_unit( 1 ), source::from_unit( 0 ) } },
      { 2 } );
  box_sampler sampler( { -2.0, -2.0, -2.0 }, { 12.0, 12.0, 12.0 }, 42 );
  for ( int i = 0; i < 2000; ++i )
  {
    const auto p = sampler.next();
    CHECK( forward.evaluate( p ) == swapped.evaluate( p ) );
  }
}

TEST_CASE( "the multidomain unit consumes an exact fan-out" )
{
  const auto domains = two_far_cubes();
  const unit multi = build_multidomain_unit( domains );
  CHECK( multi.arity() == 6 );

  // the same unit reached through network wiring that duplicates the inputs
  std::vector<source> duplicated;
  for ( std::size_t copy = 0; copy < 2; ++copy )
  {
    for ( std::size_t j = 0; j < 3; ++j )
    {
      duplicated.push_back( source::external( j ) );
    }
  }
  const network fanned( 3, { build_multidomain_unit( domains ) }, { duplicated }, { 0 } );

  box_sampler sampler( { -2.0, -2.0, -2.0 }, { 12.0, 12.0, 12.0 }, 43 );
  for ( int i = 0; i < 2000; ++i )
  {
    const auto p = sampler.next();
    const bool member = domains[0].contains( p ) || domains[1].contains( p );
    const int direct = multi.activate( fan_out( p, 2 ) );
    CHECK( direct == fanned.evaluate( p ).front() );
    CHECK( direct == ( member ? 1 : 0 ) );
  }
}

TEST_CASE( "a one-domain multidomain unit degenerates to the selective unit" )
{
  const hyper_rect_domain box( { 1.0, -1.0 }, { 2.0, 3.0 } );
  const unit multi = build_multidomain_unit( { box } );
  const unit selective = build_selective_receptron( box );
  box_sampler sampler( { -3.0, -5.0 }, { 5.0, 3.0 }, 44 );
  for ( int i = 0; i < 2000; ++i )
  {
    const auto p = sampler.next();
    CHECK( multi.activate( fan_out( p, 1 ) ) == selective.activate( p ) );
  }
}

TEST_CASE( "three-way disjunction agreement on random boxes" )
{
  std::mt19937_64 engine( 45 );
  {
    const auto boxes = random_boxes( engine, 2, 3 );
    box_sampler sampler( std::vector<double>( 3, -15.0 ), std::vector<double>( 3, 15.0 ), 46 );
    const auto report = disjunction_equivalence_suite( boxes, sampler.as_source(), 10000 );
    CHECK( report.points_tested == 10000 );
    CHECK( report.mismatches == 0 );
  }
  {
    const auto boxes = random_boxes( engine, 5, 4 );
    box_sampler sampler( std::vector<double>( 4, -15.0 ), std::vector<double>( 4, 15.0 ), 47 );
    const auto report = disjunction_equivalence_suite( boxes, sampler.as_source(), 10000 );
    CHECK( report.mismatches == 0 );
  }
  {
    const auto boxes = random_boxes( engine, 1, 2 );
    box_sampler sampler( std::vector<double>( 2, -15.0 ), std::vector<double>( 2, 15.0 ), 48 );
    const auto report = disjunction_equivalence_suite( boxes, sampler.as_source(), 1000 );
    CHECK( report.mismatches == 0 );
  }
  // one-dimensional domains, every disjunction width
  for ( std::size_t m = 1; m <= 5; ++m )
  {
    const auto boxes = random_boxes( engine, m, 1 );
    box_sampler sampler( { -15.0 }, { 15.0 }, 49 + m );
    const auto report = disjunction_equivalence_suite( boxes, sampler.as_source(), 2000 );
    CHECK( report.mismatches == 0 );
  }
}

TEST_CASE( "network construction rejects broken wiring" )
{
  const hyper_rect_domain box( { 0.0 }, { 2.0 } );
  const auto make_unit = [&]() { return build_selective_receptron( box ); };

  // forward reference
  CHECK_THROWS_AS( network( 1, { make_unit() }, { { source::from_unit( 0 ) } }, { 0 } ),
                   std::invalid_argument );
  // arity mismatch between unit and wiring
  CHECK_THROWS_AS(
      network( 1, { make_unit() }, { { source::external( 0 ), source::external( 0 ) } }, { 0 } ),
      std::invalid_argument );
  // external index out of range
  CHECK_THROWS_AS( network( 1, { make_unit() }, { { source::external( 1 ) } }, { 0 } ),
                   std::invalid_argument );
  // no outputs
  CHECK_THROWS_AS( network( 1, { make_unit() }, { { source::external( 0 ) } }, {} ),
                   std::invalid_argument );
  // mixed arities in a disjunction
  CHECK_THROWS_AS( build_disjunction_network(
                       { box, hyper_rect_domain( { 0.0, 0.0 }, { 1.0, 1.0 } ) } ),
                   std::invalid_argument );
  CHECK_THROWS_AS( build_multidomain_unit( {} ), std::invalid_argument );
}
